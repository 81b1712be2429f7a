#include "fixtures.hpp"

#include "hominduce/errors.hpp"
#include "hominduce/towers.hpp"

#include <gtest/gtest.h>

#include <regex>

using namespace hominduce;
using namespace hominduce::testing;

namespace {

const HomotopyData& interval() {
  static const HomotopyData inst = gen_interval(catalogue_dga("exterior:1"));
  return inst;
}

ExprSum single(const std::string& tree, const Scalar& c = 1) {
  const Tree t = parse_tree(tree);
  ExprSum e(t->leaves, t->degree);
  e.add_literal(c, t);
  return e;
}

}  // namespace

TEST(Trees, FreeSlots) {
  EXPECT_EQ(free_slots(parse_tree("lact(Z(1),2)")), std::vector<int>({1}));
  EXPECT_TRUE(free_slots(parse_tree("Y(wedge(Z(1),Z(2)))")).empty());
  EXPECT_TRUE(free_slots(parse_tree("lact(wedge(Z(1),Z(2)),hB(3))")).empty());
  EXPECT_EQ(decorated_slots(parse_tree("lact(wedge(Z(1),Z(2)),hB(3))"), Op::hB), std::vector<int>({2}));
}

TEST(Trees, ParseRenderRoundTrip) {
  for (const char* s : {"lact(Z(1),2)", "ract(hB(lact(Z(1),hB(2))),wedge(Z(3),Z(4)))", "Y(wedge(Z(1),hA(wedge(Z(2),Z(3)))))"})
    EXPECT_EQ(parse_tree(s)->repr, std::regex_replace(s, std::regex("[0-9]+"), "_"));
}

TEST(Trees, TypeErrors) {
  EXPECT_THROW(parse_tree("wedge(1,2)"), Error);    // B leaves into ∧
  EXPECT_THROW(parse_tree("lact(1,2)"), Error);     // left factor must be in A
  EXPECT_THROW(parse_tree("lact(Z(2),1)"), Error);  // slots out of order
}

TEST(Trees, DegreesAdd) {
  EXPECT_EQ(parse_tree("hB(ract(1,Z(2)))")->degree, -1);
  EXPECT_EQ(parse_tree("hB(ract(hB(1),Z(2)))")->degree, -2);
}

TEST(FreeBranch, M2GivesM2Tilde) {
  for (const auto& k : k_pairs())
    EXPECT_EQ(compose_fb(formulas::m2(k.first, k.second)).normalized(),
              formulas::m2_tilde(k.first, k.second).normalized())
        << k_label(k);
}

TEST(FreeBranch, NoFreeSlotGivesEmpty) {
  EXPECT_TRUE(compose_fb(formulas::m2_ht()).empty());
}

TEST(FreeBranch, EvaluatesLikeNumericInsertion) {
  for (const auto& f : sc_fixtures()) {
    const MultiMap m2 = hmi_m2(f.inst, 2, 3);
    const MultiMap fb = evaluate(compose_fb(formulas::m2(2, 3)), f.inst.ops());
    EXPECT_EQ(fb, hmi_m2_tilde(f.inst, 2, 3)) << f.name;
    EXPECT_EQ(fb, insert_homotopy_all_slots(m2, f.inst.hB())) << f.name;  // Z∘h_B = 0 kills the Z slots
  }
}

TEST(SlotComposition, WorkedExampleSign) {
  const ExprSum e = single("ract(1,Z(2))");
  const ExprSum got = compose_slot(e, Op::Z, e);
  const ExprSum expect = single("ract(1,Z(ract(2,Z(3))))", -1);
  for (const auto& f : all_fixtures()) EXPECT_EQ(evaluate(got, f.inst.ops()), evaluate(expect, f.inst.ops())) << f.name;
}

TEST(SlotComposition, NoDecoratedSlotGivesEmpty) {
  const ExprSum e = single("ract(1,Z(2))");
  EXPECT_TRUE(compose_slot(e, Op::hB, e).empty());
}

TEST(SlotComposition, GeneralRecursionMatchesFreeBranchUnderSC) {
  for (const auto& f : sc_fixtures()) {
    const ExprSum mt = formulas::m2_tilde(1, 1);
    const ExprSum m3 = formulas::m3(1, 1);
    const ExprSum general = compose_slot(mt, Op::Z, m3) + compose_slot(m3, Op::hB, mt);
    const ExprSum sc = compose_all_slots_hb(op_compose(m3, formulas::m2(1, 1)));
    EXPECT_EQ(evaluate(general, f.inst.ops()), evaluate(sc, f.inst.ops())) << f.name;
  }
}

TEST(Evaluate, M2OnTrivialIsWedge) {
  const HomotopyData inst = gen_trivial(catalogue_dga("exterior:2"));
  EXPECT_EQ(evaluate(formulas::m2(1, 0), inst.ops()), inst.wedge());
}

TEST(Evaluate, M3HandValue) {
  const HomotopyData& inst = interval();
  const MultiMap m3 = evaluate(formulas::m3(1, 1), inst.ops());
  const SpacePtr& B = inst.B();
  const SparseVec v = m3.eval({B->find("1⊗du"), B->find("θ⊗1"), B->find("1⊗1")});
  EXPECT_EQ(v, SparseVec({{B->find("θ⊗u"), Scalar(-1)}}));
}

TEST(Evaluate, ResidualVanishesAtOppositeCoefficients) {
  EXPECT_TRUE(formulas::residual_RY(1, -1).normalized().empty());
  for (const auto& f : all_fixtures()) EXPECT_TRUE(residual_RY(f.inst, 3, -3).is_zero()) << f.name;
}

TEST(Evaluate, CachedMatchesPointwiseOracle) {
  const std::vector<ExprSum> exprs = {formulas::m3(2, 3), formulas::m4(2, 3), formulas::pentagonator(1, 2),
                                      formulas::residual_RY(1, 2), formulas::m3_ht()};
  for (const auto& f : all_fixtures())
    for (const auto& e : exprs) EXPECT_EQ(evaluate(e, f.inst.ops()), evaluate_naive(e, f.inst.ops())) << f.name;
}

TEST(Evaluate, CacheSharesSubtrees) {
  const HomotopyData& inst = interval();
  EvalCache cache(inst.ops());
  const ExprSum m4 = formulas::m4(1, 1);
  EXPECT_EQ(cache.sum(m4), evaluate(m4, inst.ops()));
  const std::size_t before = cache.size();
  cache.sum(m4);
  EXPECT_EQ(cache.size(), before);
}

TEST(Normalize, Idempotent) {
  for (const auto& e : {formulas::m4(2, 3), formulas::m2_tilde(1, 1), compose_fb(formulas::m3(1, 2))}) {
    const ExprSum n1 = e.normalized();
    EXPECT_EQ(n1.normalized(), n1);
  }
}

TEST(Normalize, PreservesValue) {
  for (const auto& f : all_fixtures()) {
    const ExprSum e = compose_slot(formulas::m2_tilde(1, 2), Op::Z, formulas::m3(1, 2));
    EXPECT_EQ(evaluate(e, f.inst.ops()), evaluate(e.normalized(), f.inst.ops())) << f.name;
  }
}

TEST(Normalize, PruningDropsOnlyVanishingTerms) {
  for (const auto& f : sc_fixtures()) {
    const ExprSum e = compose_all_slots_hb(op_compose(formulas::m3(1, 1), formulas::m2(1, 1)));
    EXPECT_EQ(evaluate(e.normalized(Pruning{true, true, true}), f.inst.ops()), evaluate(e, f.inst.ops())) << f.name;
  }
}

TEST(Sums, LinearAndCanonical) {
  const ExprSum a = formulas::m3(1, 1);
  EXPECT_TRUE((a - a).empty());
  EXPECT_EQ(a + a, Scalar(2) * a);
  EXPECT_EQ(formulas::m3(2, 2), Scalar(4) * formulas::m3(1, 1));
}
