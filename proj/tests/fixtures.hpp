#pragma once
/// Shared fixture catalogue for unit and acceptance tests.

#include "hominduce/instances.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hominduce::testing {

struct Fixture {
  std::string name;
  HomotopyData inst;
};

using KPair = std::pair<Scalar, Scalar>;

/** (1,0), (0,1), (1,1), (2,3), (1,−1). */
const std::vector<KPair>& k_pairs();

/// Instances satisfying SC_left, SC_right and SC_sq.
const std::vector<Fixture>& sc_fixtures();
/// Every fixture, including perturbations that break side conditions.
const std::vector<Fixture>& all_fixtures();
/// Perturbed intervals where all four side conditions fail.
const std::vector<Fixture>& no_condition_fixtures();
/// WSC holds and SC_right fails.
const std::vector<Fixture>& wsc_only_fixtures();
/// Interval over exterior:1 with h_A perturbed so that h_A∘Z ≠ 0.
const HomotopyData& interval_hA_perturbed();

std::string k_label(const KPair& k);

}  // namespace hominduce::testing
