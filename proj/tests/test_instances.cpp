#include "fixtures.hpp"

#include "hominduce/analysis.hpp"
#include "hominduce/errors.hpp"

#include <gtest/gtest.h>

using namespace hominduce;
using namespace hominduce::testing;

TEST(Catalogue, ExteriorOne) {
  const Dga a = catalogue_dga("exterior:1");
  EXPECT_EQ(a.space->dims(), std::vector<int>({1, 1}));
  const HomotopyData inst = gen_trivial(a);
  for (const auto& c : inst.conditions().flags)
    if (c.name.find("_proj") == std::string::npos) {
      EXPECT_TRUE(c.holds) << c.name;
    }
}

TEST(Catalogue, EveryDgaValidates) {
  for (const auto& name : catalogue_names()) {
    const HomotopyData inst = gen_trivial(catalogue_dga(name));
    for (const auto& c : inst.axioms()) EXPECT_TRUE(c.holds) << name << " " << c.name;
    EXPECT_TRUE(obstruction_class(inst).class_zero()) << name;
  }
}

TEST(Catalogue, UnknownNameRejected) {
  EXPECT_THROW(catalogue_dga("exterior:9"), Error);
  EXPECT_THROW(catalogue_dga("banana"), Error);
}

TEST(Interval, DimsAndHomotopy) {
  const HomotopyData inst = gen_interval(catalogue_dga("exterior:1"));
  EXPECT_EQ(inst.B()->dims(), std::vector<int>({2, 3, 1}));
  EXPECT_EQ(hom_differential(MultiMap::from_graded(inst.hB()), inst.dB(), inst.dB()).to_graded(),
            GradedMap::identity(inst.B()) - compose(inst.Y(), inst.Z()));
}

TEST(Interval, CohomologyMatchesA) {
  for (const auto& name : catalogue_names()) {
    const HomotopyData inst = gen_interval(catalogue_dga(name));
    const auto hA = cohomology(inst.A(), inst.dA());
    const auto hB = cohomology(inst.B(), inst.dB());
    for (int g = -2; g <= 8; ++g) EXPECT_EQ(hA.H->dim(g), hB.H->dim(g)) << name << " degree " << g;
  }
}

TEST(Split, ConditionProfile) {
  for (const auto& f : wsc_only_fixtures()) {
    EXPECT_TRUE(f.inst.flag("WSC")) << f.name;
    EXPECT_FALSE(f.inst.flag("SC_right")) << f.name;
    EXPECT_FALSE(f.inst.flag("ZYZ")) << f.name;
  }
}

TEST(Grassmann, OneOneConditions) {
  const HomotopyData inst = gen_grassmann_super(1, 1);
  for (const char* f : {"ZYZ", "YZY", "SC_left", "SC_right", "SC_sq"}) EXPECT_TRUE(inst.flag(f)) << f;
  EXPECT_TRUE(compose(inst.hA(), inst.Z()).is_zero());
  EXPECT_EQ(inst.provenance().at("kind"), "grassmann_super");
  EXPECT_FALSE(inst.provenance().at("homotopy_B").empty());
}

TEST(Grassmann, AllCutoffsValidate) {
  for (int n = 1; n <= 2; ++n)
    for (int D = 1; D <= 3; ++D) {
      const HomotopyData inst = gen_grassmann_super(n, D);
      EXPECT_TRUE(inst.flag("ZYZ")) << n << "," << D;
      EXPECT_TRUE(inst.flag("YZY")) << n << "," << D;
    }
  EXPECT_THROW(gen_grassmann_super(3, 1), Error);
}

TEST(Perturbed, BreakAndKeep) {
  const HomotopyData base = gen_interval(catalogue_dga("exterior:1"));
  const HomotopyData p = gen_perturbed(base, 3, {}, {"SC_left", "SC_right", "SC_sq", "WSC"});
  for (const char* f : {"SC_left", "SC_right", "SC_sq", "WSC"}) EXPECT_FALSE(p.flag(f)) << f;
  for (const auto& c : p.axioms()) EXPECT_TRUE(c.holds) << c.name;
  const HomotopyData kept = gen_perturbed(gen_interval(catalogue_dga("exterior:2")), 3, {"WSC"}, {"SC_sq"});
  EXPECT_TRUE(kept.flag("WSC"));
  EXPECT_FALSE(kept.flag("SC_sq"));
  EXPECT_THROW(gen_perturbed(base, 3, {"SC_left", "SC_right"}, {"SC_sq"}), Error);
  EXPECT_EQ(p.provenance().at("seed"), "3");
}

TEST(Perturbed, Deterministic) {
  const HomotopyData base = gen_interval(catalogue_dga("exterior:2"));
  EXPECT_EQ(gen_perturbed(base, 9, {}, {"SC_right"}).hB(), gen_perturbed(base, 9, {}, {"SC_right"}).hB());
  EXPECT_NE(gen_perturbed(base, 9, {}, {"SC_right"}).hB(), gen_perturbed(base, 10, {}, {"SC_right"}).hB());
}

TEST(Perturbed, UnknownConditionRejected) {
  const HomotopyData base = gen_interval(catalogue_dga("exterior:1"));
  EXPECT_THROW(gen_perturbed(base, 1, {}, {"nonsense"}), Error);
}

TEST(PerturbedHA, MakesHAZNonzero) {
  const HomotopyData& inst = interval_hA_perturbed();
  EXPECT_FALSE(compose(inst.hA(), inst.Z()).is_zero());
  EXPECT_TRUE(inst.flag("ZYZ"));
  try {
    gen_perturbed_hA(gen_interval(catalogue_dga("poly:2")), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyPerturbationSpace);
  }
}
