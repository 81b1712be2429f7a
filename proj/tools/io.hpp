#pragma once
/// JSON encoding of instances, towers and reports; rationals travel as "p/q" strings.

#include "hominduce/analysis.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hominduce::io {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr int kDefaultMaxDim = 32;

/// HOMINDUCE_MAX_DIM, or the default.
int max_dim();
/// Throws SizeLimit when either space exceeds max_dim().
void check_size(const HomotopyData& inst);

Json space_to_json(const GradedSpace& s);
SpacePtr space_from_json(const Json& j);

Json map_to_json(const GradedMap& f);
GradedMap map_from_json(const Json& j, const SpacePtr& src, const SpacePtr& tgt);

Json multimap_to_json(const MultiMap& m);
MultiMap multimap_from_json(const Json& j, const SpacePtr& src, const SpacePtr& tgt);

Json instance_to_json(const HomotopyData& inst);
/// Validates the instance; throws InvalidInput on malformed input and AxiomViolation on bad data.
HomotopyData instance_from_json(const Json& j);

Json tower_to_json(const AInftyTower& t, const SpacePtr& B);
/// Returns the products and the tower header (method, k1, k2, N).
AInftyTower tower_from_json(const Json& j, SpacePtr* B);

/** One line of a report. */
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<CheckResult> checks;
  Json data = Json::object();
  bool all_pass() const;
};

Json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

/// Reads a whole file; throws InvalidInput when missing or not JSON.
Json read_json(const std::string& path);

}  // namespace hominduce::io
