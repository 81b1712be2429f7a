#pragma once
/// Deterministic generators of validated homotopy data.

#include "hominduce/homotopy_data.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hominduce {

/** A small dg-algebra from the catalogue. */
struct Dga {
  std::string name;
  SpacePtr space;
  GradedMap d;
  MultiMap wedge;
};

/**
 * Catalogue names: "exterior:n" (n ≤ 3), "dual", "poly:D" (x in degree 2, D ≤ 4),
 * "acyclic" (x, y = dx, x∧x = y, no unit). Throws InvalidInput.
 */
Dga catalogue_dga(const std::string& name);
std::vector<std::string> catalogue_names();

/// B = A, Y = Z = id, h = 0, actions = ∧.
HomotopyData gen_trivial(const Dga& a);

/// B = A ⊗ K with K = span{1, u, du}; all side conditions hold.
HomotopyData gen_interval(const Dga& a);

/**
 * A ⊕ A1 with A1 = span{f, x}, dx = f, f idempotent; B = A ⊕ A1, Z = id,
 * Y = projection onto A. WSC holds while SC_right and ZYZ fail.
 */
HomotopyData gen_split(const Dga& a);

/// Truncated forms and integral forms on R^{0|n}, weight ≤ D; n ∈ {1, 2}, 1 ≤ D ≤ 3.
HomotopyData gen_grassmann_super(int n_odd, int cutoff);

/// Condition names gen_perturbed can keep or break.
const std::vector<std::string>& perturbable_conditions();

/**
 * h_B ← h_B + τ with τ closed, keep-conditions imposed as linear constraints and
 * break-conditions reached by seeded rejection over integer combinations of the solution space.
 */
HomotopyData gen_perturbed(const HomotopyData& base, std::uint64_t seed, const std::vector<std::string>& keep,
                           const std::vector<std::string>& brk);

/// h_A ← h_A + τ with τ closed of degree −1, sampled until h_A∘Z ≠ 0.
HomotopyData gen_perturbed_hA(const HomotopyData& base, std::uint64_t seed);

}  // namespace hominduce
