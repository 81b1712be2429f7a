#include "fixtures.hpp"

#include "hominduce/analysis.hpp"
#include "hominduce/errors.hpp"

#include <gtest/gtest.h>

using namespace hominduce;
using namespace hominduce::testing;

namespace {

const HomotopyData& interval() {
  static const HomotopyData inst = gen_interval(catalogue_dga("exterior:1"));
  return inst;
}

}  // namespace

TEST(Obstruction, TrivialAndInterval) {
  const HomotopyData triv = gen_trivial(catalogue_dga("exterior:1"));
  EXPECT_TRUE(obstruction_class(triv).representative.is_zero());
  const HomObstruction o = obstruction_class(interval());
  EXPECT_TRUE(o.representative.is_zero());
  EXPECT_TRUE(o.class_zero());
  EXPECT_TRUE(reverify(o, interval()));
}

TEST(Obstruction, RemovedByMarklModification) {
  const HomotopyData& inst = interval_hA_perturbed();
  const HomObstruction before = obstruction_class(inst);
  EXPECT_FALSE(before.class_zero());
  ASSERT_TRUE(before.certificate.witness.has_value());
  EXPECT_TRUE(reverify(before, inst));
  const HomotopyData after = modify_hA_markl(inst);
  const HomObstruction o = obstruction_class(after);
  ASSERT_TRUE(o.class_zero());
  ASSERT_TRUE(o.certificate.primitive.has_value());
  const GradedMap expect = Scalar(-1) * compose(compose(after.hA(), after.hA()), after.Z());
  EXPECT_EQ(o.certificate.primitive->to_graded(), expect);
  EXPECT_TRUE(reverify(o, after));
}

TEST(ClassOf, WedgeClass) {
  const ClassCertificate ext = wedge_class(gen_trivial(catalogue_dga("exterior:1")));
  EXPECT_FALSE(ext.zero);
  const HomotopyData acyc = gen_trivial(catalogue_dga("acyclic"));
  const ClassCertificate z = wedge_class(acyc);
  EXPECT_TRUE(z.zero);
  ASSERT_TRUE(z.primitive.has_value());
  EXPECT_EQ(hom_differential(*z.primitive, acyc.dA(), acyc.dA()), acyc.wedge());
  EXPECT_TRUE(reverify(z, acyc.wedge(), acyc.dA(), acyc.dA()));
}

TEST(ClassOf, RejectsNonClosed) {
  const HomotopyData& inst = interval();
  try {
    class_of(MultiMap::from_graded(inst.hB()), inst.dB(), inst.dB());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
  }
}

TEST(ClassOf, TamperedCertificateFailsReverification) {
  const HomotopyData triv = gen_trivial(catalogue_dga("exterior:1"));
  ClassCertificate c = wedge_class(triv);
  ASSERT_TRUE(c.witness.has_value());
  for (auto& x : *c.witness) x = 0;
  EXPECT_FALSE(reverify(c, triv.wedge(), triv.dA(), triv.dA()));
}

TEST(Morphism, ModuleInducedToA) {
  for (const auto& f : sc_fixtures())
    for (const auto& k : k_pairs()) {
      const AInftyTower t = hmi_tower_sc(f.inst, k.first, k.second, 6);
      const Products target = {{1, MultiMap::from_graded(f.inst.dA())}, {2, f.inst.wedge()}};
      const MorphismReport r = check_strict_morphism((k.first + k.second) * f.inst.Z(), t.m, target, 6);
      EXPECT_TRUE(r.residuals_zero) << f.name << k_label(k);
      if (cohomology(f.inst.B(), f.inst.dB()).H->total() > 0) {
        EXPECT_EQ(r.quasi_iso, k.first != -k.second) << f.name << k_label(k);
      }
    }
}

TEST(Morphism, IdentityAndZero) {
  const AInftyTower t = hmi_tower_sc(interval(), 2, 3, 5);
  const MorphismReport id = check_strict_morphism(GradedMap::identity(interval().B()), t.m, t.m, 5);
  EXPECT_TRUE(id.residuals_zero);
  EXPECT_TRUE(id.quasi_iso);
  const MorphismReport zero = check_strict_morphism(GradedMap::zero(interval().B(), interval().B(), 0), t.m, t.m, 5);
  EXPECT_TRUE(zero.residuals.at(2).is_zero());
  EXPECT_FALSE(zero.quasi_iso);
}

TEST(Hochschild, ZeroCochain) {
  const AInftyTower ht = ht_tower(interval(), 4);
  Cochain mu{{2, MultiMap::zero(interval().B(), interval().B(), 2, 0)}};
  for (const auto& [n, c] : hochschild_differential(mu, ht, 4)) EXPECT_TRUE(c.is_zero()) << n;
}

TEST(Hochschild, TransferProductIsCocycleUnderZYZ) {
  const HomotopyData& inst = interval_hA_perturbed();
  const AInftyTower ht = ht_tower(inst, 4);
  const Cochain mu{{2, ht.m.at(2)}};
  EXPECT_TRUE(hochschild_differential(mu, ht, 3).at(3).is_zero());
}

TEST(Hochschild, TruncationTooTight) {
  const AInftyTower ht = ht_tower(interval(), 3);
  try {
    hochschild_differential({{2, ht.m.at(2)}}, ht, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationTooTight);
  }
}

TEST(Hochschild, AssociativeExample) {
  // μ = m2|(1,0) − m2ht against the associative transfer product
  const HomotopyData& inst = interval();
  const AInftyTower ht = ht_tower(inst, 3);
  ASSERT_TRUE(ht.m.at(3).is_zero());
  const Cochain mu{{2, hmi_m2(inst, 1, 0) - ht.m.at(2)}};
  const MultiMap d3 = hochschild_differential(mu, ht, 3).at(3);
  ExprSum e(3, 0);
  e.add_literal(-1, "lact(Z(Y(wedge(Z(1),Z(2)))),3)");
  e.add_literal(1, "Y(wedge(Z(1),wedge(Z(2),Z(3))))");
  const MultiMap expect = evaluate(e, inst.ops());
  EXPECT_FALSE(expect.is_zero());
  EXPECT_TRUE(d3 == expect || d3 == Scalar(-1) * expect);
}

TEST(Hochschild, GenericCoefficientsFailAtArityThree) {
  const HomotopyData& inst = interval_hA_perturbed();
  for (const auto& k : std::vector<KPair>{{1, 1}, {2, 3}, {1, 0}}) {
    const DeformationReport r = check_infinitesimal_deformation(inst, k.first, k.second, 4);
    EXPECT_EQ(r.first_nonzero, 3) << k_label(k);
    EXPECT_FALSE(r.witness.empty());
    const MultiMap closed = evaluate(formulas::m2_after_m2_ht(k.first, k.second), inst.ops());
    EXPECT_EQ(r.dH.at(3),
              Scalar(-1) * (hom_differential(hmi_m3(inst, k.first, k.second), inst.dB(), inst.dB()) + closed));
  }
}

TEST(Hochschild, MinusOneFailsAtArityFour) {
  const DeformationReport r = check_infinitesimal_deformation(interval_hA_perturbed(), -1, -1, 4);
  EXPECT_TRUE(r.dH.at(3).is_zero());
  EXPECT_EQ(r.first_nonzero, 4);
}

TEST(Hochschild, Nilpotent) {
  const HomotopyData& inst = interval_hA_perturbed();
  const AInftyTower ht = ht_tower(inst, 5);
  const DeformationReport r = check_infinitesimal_deformation(inst, 2, 3, 4);
  Cochain dmu = r.dH;
  dmu.erase(1);
  const Cochain dd = hochschild_differential(dmu, ht, 5);
  for (int n = 1; n <= 5; ++n)
    if (dd.count(n) && n <= 4) {
      EXPECT_TRUE(dd.at(n).is_zero()) << n;
    }
}

TEST(Hochschild, TrivialInstanceIsTriviallyZero) {
  const DeformationReport r = check_infinitesimal_deformation(gen_trivial(catalogue_dga("exterior:1")), 1, 0, 4);
  EXPECT_TRUE(r.trivially_zero);
  EXPECT_EQ(r.first_nonzero, 0);
}

TEST(Massey, OppositeCoefficientsKillM2) {
  for (const auto& f : sc_fixtures()) {
    const MasseyTower mt = massey_transfer(f.inst, hmi_tower_sc(f.inst, 1, -1, 5), 5);
    EXPECT_TRUE(mt.M.at(2).is_zero()) << f.name;
    EXPECT_TRUE(mt.M.at(1).is_zero()) << f.name;
  }
}

TEST(Massey, M2ScalesTransferProduct) {
  for (const auto& f : sc_fixtures()) {
    const MasseyTower mt = massey_transfer(f.inst, hmi_tower_sc(f.inst, 2, 3, 5), 5);
    EXPECT_EQ(mt.M.at(2), Scalar(5) * mt.M_ht.at(2)) << f.name;
    EXPECT_TRUE(failing_arities(mt.M, 5).empty()) << f.name;
    EXPECT_TRUE(failing_arities(mt.M_ht, 5).empty()) << f.name;
  }
}

TEST(Massey, FormalTrivialInstance) {
  const HomotopyData inst = gen_trivial(catalogue_dga("exterior:2"));
  const MasseyTower mt = massey_transfer(inst, hmi_tower_sc(inst, 2, 3, 5), 5);
  for (int n = 3; n <= 5; ++n) {
    EXPECT_TRUE(mt.M.at(n).is_zero()) << n;
    EXPECT_TRUE(mt.M_ht.at(n).is_zero()) << n;
  }
}

TEST(Massey, RejectsUncertifiedTower) {
  AInftyTower t = hmi_tower_sc(interval(), 1, 1, 4);
  t.m[3] = Scalar(3) * t.m[3];
  EXPECT_THROW(massey_transfer(interval(), t, 4), Error);
}
