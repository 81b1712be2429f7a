#include "fixtures.hpp"

#include "hominduce/errors.hpp"
#include "hominduce/towers.hpp"

#include <gtest/gtest.h>

using namespace hominduce;
using namespace hominduce::testing;

namespace {

const HomotopyData& interval() {
  static const HomotopyData inst = gen_interval(catalogue_dga("exterior:1"));
  return inst;
}

/// Enumerates all basis tuples of the given arity.
template <class F>
void for_tuples(int dim, int arity, F&& f) {
  std::vector<int> t(arity, 0);
  while (true) {
    f(t);
    int j = arity - 1;
    while (j >= 0 && ++t[j] == dim) t[j--] = 0;
    if (j < 0) return;
  }
}

}  // namespace

TEST(Koszul, EvenMapNoSign) {
  const HomotopyData& inst = interval();
  const MultiMap m2 = hmi_m2(inst, 1, 1);
  const MultiMap dB = MultiMap::from_graded(inst.dB());
  const MultiMap lhs = koszul_apply(m2, 0, MultiMap::from_graded(GradedMap::identity(inst.B())));
  EXPECT_EQ(lhs, m2);
  (void)dB;
}

TEST(Koszul, OddMapPicksSignFromPrecedingInput) {
  const HomotopyData& inst = interval();
  const MultiMap m2 = hmi_m2(inst, 1, 1);
  const MultiMap applied = koszul_apply(m2, 1, inst.hB());
  const int b0 = inst.B()->find("θ⊗1");  // degree 1
  for (int b1 = 0; b1 < inst.B()->total(); ++b1) {
    SparseVec expect;
    for (const auto& [j, c] : inst.hB().apply(b1)) axpy(expect, -c, m2.eval({b0, j}));
    EXPECT_EQ(applied.eval({b0, b1}), expect);
  }
}

TEST(Koszul, MatchesPointwiseOracle) {
  for (const auto& f : all_fixtures()) {
    const MultiMap m2 = hmi_m2(f.inst, 2, 3);
    const MultiMap m3 = hmi_m3(f.inst, 2, 3);
    const int dim = f.inst.B()->total();
    for (int r = 0; r <= 1; ++r) {
      const MultiMap ka = koszul_apply(m2, r, m3);
      for_tuples(dim, 4, [&](const std::vector<int>& t) {
        EXPECT_EQ(ka.eval(t), naive_koszul_apply(m2, r, m3, t)) << f.name;
      });
    }
  }
}

TEST(HomDifferential, OfDifferentialVanishes) {
  for (const auto& f : all_fixtures()) {
    const MultiMap d = MultiMap::from_graded(f.inst.dB());
    EXPECT_TRUE(hom_differential(d, f.inst.dB(), f.inst.dB()).is_zero()) << f.name;
  }
}

TEST(HomDifferential, OfHomotopyIsOneMinusYZ) {
  for (const auto& f : all_fixtures()) {
    const MultiMap h = MultiMap::from_graded(f.inst.hB());
    const GradedMap expect = GradedMap::identity(f.inst.B()) - compose(f.inst.Y(), f.inst.Z());
    EXPECT_EQ(hom_differential(h, f.inst.dB(), f.inst.dB()).to_graded(), expect) << f.name;
  }
}

TEST(HomDifferential, MatchesPerEntryBracket) {
  const HomotopyData& inst = interval();
  const MultiMap phi = hmi_m2_tilde(inst, 1, 2);
  const MultiMap dphi = hom_differential(phi, inst.dB(), inst.dB());
  const int dim = inst.B()->total();
  for_tuples(dim, 2, [&](const std::vector<int>& t) {
    SparseVec expect = inst.dB().apply(phi.eval(t));
    const Scalar s = sign_of(phi.degree);
    for (const auto& [j, c] : inst.dB().apply(t[0])) axpy(expect, -s * c, phi.eval({j, t[1]}));
    const Scalar k = sign_of(inst.B()->degree_of(t[0]));
    for (const auto& [j, c] : inst.dB().apply(t[1])) axpy(expect, -s * k * c, phi.eval({t[0], j}));
    EXPECT_EQ(dphi.eval(t), expect);
  });
}

TEST(OpCompose, ArityBookkeeping) {
  const HomotopyData& inst = interval();
  const MultiMap m2 = hmi_m2(inst, 1, 1);
  const MultiMap m3 = hmi_m3(inst, 1, 1);
  EXPECT_EQ(op_compose(m2, m2).arity, 3);
  EXPECT_EQ(op_compose(m2, m3).arity, 4);
  EXPECT_EQ(op_compose(m2, m3).degree, -1);
}

TEST(OpCompose, AssociativeProductSquaresToZero) {
  const HomotopyData inst = gen_trivial(catalogue_dga("exterior:2"));
  const MultiMap& w = inst.wedge();
  EXPECT_TRUE(op_compose(w, w).is_zero());
}

TEST(OpCompose, AgreesWithDefectTerms) {
  const HomotopyData& inst = interval_hA_perturbed();
  const AInftyTower t = ht_tower(inst, 4);
  const Products P = to_paper_normalization(t.m);
  // ∂P3 = P2 ∘ P2 with the uniform sign convention
  EXPECT_EQ(hom_differential(P.at(3), inst.dB(), inst.dB()), op_compose(P.at(2), P.at(2)));
}

TEST(InsertHomotopy, ZeroAndArityOne) {
  const HomotopyData& inst = interval();
  const MultiMap m2 = hmi_m2(inst, 1, 1);
  EXPECT_TRUE(insert_homotopy_all_slots(m2, GradedMap::zero(inst.B(), inst.B(), -1)).is_zero());
  const MultiMap id = MultiMap::from_graded(GradedMap::identity(inst.B()));
  EXPECT_EQ(insert_homotopy_all_slots(id, inst.hB()).to_graded(), inst.hB());
}

TEST(InsertHomotopy, MatchesFreeBranchUnderSC) {
  const HomotopyData& inst = interval();
  const ExprSum e2 = formulas::m2(1, 1);
  const MultiMap numeric = insert_homotopy_all_slots(op_compose(hmi_m2(inst, 1, 1), hmi_m2(inst, 1, 1)), inst.hB());
  const ExprSum symbolic = compose_all_slots_hb(op_compose(e2, e2), Pruning{true, true, true});
  EXPECT_EQ(evaluate(symbolic, inst.ops()), numeric);
}

TEST(Defect, LowArities) {
  for (const auto& f : all_fixtures()) {
    const AInftyTower ht = ht_tower(f.inst, 3);
    EXPECT_TRUE(a_infinity_defect(ht.m, 1).is_zero()) << f.name;
    EXPECT_TRUE(a_infinity_defect(ht.m, 3).is_zero()) << f.name;
  }
  const HomotopyData& inst = interval();
  Products hmi{{1, MultiMap::from_graded(inst.dB())}, {2, hmi_m2(inst, 2, 3)}};
  EXPECT_TRUE(a_infinity_defect(hmi, 2).is_zero());
  EXPECT_TRUE(a_infinity_defect(ht_tower(inst, 2).m, 2).is_zero());
}

TEST(Defect, MissingProductThrows) {
  const HomotopyData& inst = interval();
  Products m{{1, MultiMap::from_graded(inst.dB())}};
  try {
    a_infinity_defect(m, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingProduct);
  }
}

TEST(ComposeMulti, EqualsNestedKoszulApply) {
  const HomotopyData& inst = interval_hA_perturbed();
  const MultiMap m2 = hmi_m2(inst, 1, 2);
  const MultiMap id = MultiMap::from_graded(GradedMap::identity(inst.B()));
  const MultiMap m3 = hmi_m3(inst, 1, 2);
  EXPECT_EQ(compose_multi(m2, {&m3, &id}), koszul_apply(m2, 0, m3));
  EXPECT_EQ(compose_multi(m2, {&id, &m3}), koszul_apply(m2, 1, m3));
}

TEST(ParityMask, DoubleApplicationIsIdentity) {
  const MultiMap m3 = hmi_m3(interval(), 1, 1);
  EXPECT_EQ(apply_parity_mask(apply_parity_mask(m3, 0b101), 0b101), m3);
}
