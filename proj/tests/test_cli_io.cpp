#include "fixtures.hpp"

#include "hominduce/errors.hpp"
#include "io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace hominduce;
using namespace hominduce::testing;
using hominduce::io::Json;

TEST(Io, ScalarsTravelAsStrings) {
  const Json j = io::map_to_json(interval_hA_perturbed().hA());
  EXPECT_TRUE(j.dump().find("\"1/1\"") != std::string::npos || j.dump().find("\"-1/1\"") != std::string::npos);
}

TEST(Io, InstanceRoundTrip) {
  for (const auto& f : all_fixtures()) {
    const Json j = io::instance_to_json(f.inst);
    const HomotopyData back = io::instance_from_json(j);
    EXPECT_EQ(back.hB(), f.inst.hB()) << f.name;
    EXPECT_EQ(back.wedge(), f.inst.wedge()) << f.name;
    EXPECT_EQ(io::instance_to_json(back).dump(), j.dump()) << f.name;
  }
}

TEST(Io, TowerRoundTrip) {
  const HomotopyData& inst = interval_hA_perturbed();
  const AInftyTower t = ht_tower(inst, 5);
  SpacePtr B;
  const AInftyTower back = io::tower_from_json(io::tower_to_json(t, inst.B()), &B);
  EXPECT_EQ(back.N, 5);
  EXPECT_EQ(back.method, "ht");
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(io::multimap_to_json(back.m.at(n)), io::multimap_to_json(t.m.at(n))) << n;
}

namespace {

ErrorCode load_error(const Json& j) {
  try {
    io::instance_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted malformed instance";
  return ErrorCode::SpaceMismatch;
}

}  // namespace

TEST(Io, MalformedInstances) {
  const Json good = io::instance_to_json(gen_interval(catalogue_dga("exterior:1")));
  Json j = good;
  j.erase("maps");
  EXPECT_EQ(load_error(j), ErrorCode::InvalidInput);
  j = good;
  j["schema_version"] = 99;
  EXPECT_EQ(load_error(j), ErrorCode::InvalidInput);
  j = good;
  j["maps"]["hB"]["degree"] = 0;
  EXPECT_NE(load_error(j), ErrorCode::SpaceMismatch);
  j = good;
  j["flags"]["SC_right"] = !good["flags"]["SC_right"].get<bool>();
  EXPECT_EQ(load_error(j), ErrorCode::InvalidInput);
}

TEST(Io, CorruptedHomotopyIsAxiomViolation) {
  Json j = io::instance_to_json(gen_interval(catalogue_dga("exterior:1")));
  Json& blocks = j["maps"]["hB"]["blocks"];
  ASSERT_FALSE(blocks.empty());
  for (auto& [deg, rows] : blocks.items())
    for (auto& row : rows)
      for (auto& x : row) x = "5";
  EXPECT_EQ(load_error(j), ErrorCode::AxiomViolation);
}

TEST(Io, SizeLimit) {
  setenv("HOMINDUCE_MAX_DIM", "4", 1);
  EXPECT_EQ(io::max_dim(), 4);
  try {
    io::check_size(gen_interval(catalogue_dga("exterior:1")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
  unsetenv("HOMINDUCE_MAX_DIM");
  EXPECT_EQ(io::max_dim(), io::kDefaultMaxDim);
}

TEST(Io, ReportFormats) {
  io::Report r;
  r.command = "demo";
  r.checks.push_back({"first", true, ""});
  r.checks.push_back({"second", false, "x -> 1"});
  EXPECT_FALSE(r.all_pass());
  const Json j = io::report_to_json(r);
  EXPECT_EQ(j["checks"].size(), 2u);
  const std::string text = io::report_to_text(r);
  EXPECT_NE(text.find("FAIL second"), std::string::npos);
}

TEST(Io, ReadJsonErrors) {
  try {
    io::read_json("/nonexistent/file.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}
