#include "hominduce/towers.hpp"

#include "hominduce/errors.hpp"
#include "hominduce/transfer.hpp"

namespace hominduce {

namespace {

/// Bits for the printed factor (−1)^{|b_i|+...}; slots are 1-based.
std::uint32_t par(std::initializer_list<int> slots) {
  std::uint32_t m = 0;
  for (int s : slots) m |= 1u << (s - 1);
  return m;
}

void check_arity(int N) {
  if (N < 1 || N > kMaxTowerArity)
    throw Error(ErrorCode::InvalidInput, "arity " + std::to_string(N) + " outside 1.." + std::to_string(kMaxTowerArity));
}

/// Flips the sign of m_n when that alone restores the relation; otherwise throws.
void certify(Products& m, int n, std::vector<std::string>& notes, const std::string& what) {
  if (a_infinity_defect(m, n).is_zero()) return;
  m[n] = Scalar(-1) * m[n];
  if (a_infinity_defect(m, n).is_zero()) {
    notes.push_back(what + ": sign of m" + std::to_string(n) + " flipped by certification");
    return;
  }
  throw Error(ErrorCode::DefectNonzero, what + " fails the A-infinity relation at arity " + std::to_string(n));
}

Scalar sign_pow(int n) { return n % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

Products to_paper_normalization(const Products& m) {
  Products out = m;
  for (auto& [n, f] : out)
    if (n >= 3 && n % 2 == 1) f = Scalar(-1) * f;
  return out;
}

std::vector<int> failing_arities(const Products& m, int N) {
  std::vector<int> bad;
  for (int n = 1; n <= N; ++n)
    if (!a_infinity_defect(m, n).is_zero()) bad.push_back(n);
  return bad;
}

namespace formulas {

ExprSum m2(const Scalar& k1, const Scalar& k2) {
  ExprSum e(2, 0);
  e.add_literal(k1, "lact(Z(1),2)");
  e.add_literal(k2, "ract(1,Z(2))");
  return e;
}

ExprSum m2_tilde(const Scalar& k1, const Scalar& k2) {
  ExprSum e(2, -1);
  e.add_literal(k1, "lact(Z(1),hB(2))", par({1}));
  e.add_literal(k2, "ract(hB(1),Z(2))");
  return e;
}

ExprSum associator(const Scalar& k1, const Scalar& k2) {
  ExprSum e(3, 0);
  e.add_literal(k1 * k2, "lact(wedge(Z(1),Z(2)),3)");
  e.add_literal(-k1 * k2, "ract(1,wedge(Z(2),Z(3)))");
  return e;
}

ExprSum m3(const Scalar& k1, const Scalar& k2) {
  ExprSum e(3, -1);
  e.add_literal(k1 * k2, "lact(wedge(Z(1),Z(2)),hB(3))", par({1, 2}));
  e.add_literal(-k1 * k2, "ract(hB(1),wedge(Z(2),Z(3)))");
  return e;
}

ExprSum pentagonator(const Scalar& k1, const Scalar& k2) {
  const Scalar a = k1 * k2 * k2, b = k1 * k1 * k2;
  ExprSum e(4, -1);
  e.add_literal(a, "lact(wedge(Z(1),Z(2)),ract(hB(3),Z(4)))", par({1, 2}));
  e.add_literal(-a, "ract(hB(1),wedge(Z(2),wedge(Z(3),Z(4))))");
  e.add_literal(b, "lact(wedge(Z(1),wedge(Z(2),Z(3))),hB(4))", par({1, 2, 3}));
  e.add_literal(-b, "lact(Z(1),ract(hB(2),wedge(Z(3),Z(4))))", par({1}));
  e.add_literal(b, "lact(wedge(Z(1),wedge(Z(2),Z(hB(3)))),4)", par({1, 2}));
  e.add_literal(-b, "lact(wedge(Z(hB(1)),wedge(Z(2),Z(3))),4)");
  e.add_literal(a, "ract(1,wedge(Z(2),wedge(Z(3),Z(hB(4)))))", par({1, 2, 3}));
  e.add_literal(-a, "ract(1,wedge(Z(hB(2)),wedge(Z(3),Z(4))))", par({1}));
  e.add_literal(b, "ract(hB(lact(Z(1),2)),wedge(Z(3),Z(4)))");
  e.add_literal(a, "ract(hB(ract(1,Z(2))),wedge(Z(3),Z(4)))");
  e.add_literal(-b, "lact(wedge(Z(1),Z(2)),hB(lact(Z(3),4)))", par({1, 2}));
  e.add_literal(-a, "lact(wedge(Z(1),Z(2)),hB(ract(3,Z(4))))", par({1, 2}));
  return e;
}

ExprSum m4_sc(const Scalar& k1, const Scalar& k2) {
  const Scalar a = k1 * k2 * k2, b = k1 * k1 * k2;
  ExprSum e(4, -2);
  e.add_literal(-b, "ract(hB(lact(Z(1),hB(2))),wedge(Z(3),Z(4)))", par({1}));
  e.add_literal(-a, "ract(hB(ract(hB(1),Z(2))),wedge(Z(3),Z(4)))");
  e.add_literal(b, "lact(wedge(Z(1),Z(2)),hB(lact(Z(3),hB(4))))", par({3}));
  e.add_literal(a, "lact(wedge(Z(1),Z(2)),hB(ract(hB(3),Z(4))))");
  return e;
}

ExprSum m4(const Scalar& k1, const Scalar& k2) {
  const Scalar a = k1 * k2 * k2, b = k1 * k1 * k2;
  ExprSum e(4, -2);
  e.add_literal(-b, "lact(wedge(Z(1),wedge(Z(2),Z(hB(3)))),hB(4))", par({3}));
  e.add_literal(b, "lact(wedge(Z(hB(1)),wedge(Z(2),Z(3))),hB(4))", par({1, 2, 3}));
  e.add_literal(a, "ract(hB(1),wedge(Z(2),wedge(Z(3),Z(hB(4)))))", par({1, 2, 3}));
  e.add_literal(-a, "ract(hB(1),wedge(Z(hB(2)),wedge(Z(3),Z(4))))", par({1}));
  e += m4_sc(k1, k2);
  return e;
}

ExprSum residual_RY(const Scalar& k1, const Scalar& k2) {
  const Scalar c = k1 * k2 * (k1 + k2);
  ExprSum e(4, -1);
  // composition reading: h_B picks up Koszul signs from the inputs it passes
  e.add(-c, parse_tree("Y(wedge(Z(1),wedge(Z(2),wedge(Z(hB(3)),Z(4)))))"));
  e.add(c, parse_tree("Y(wedge(Z(hB(1)),wedge(Z(2),wedge(Z(3),Z(4)))))"));
  e.add(-c, parse_tree("Y(wedge(Z(1),wedge(Z(2),wedge(Z(3),Z(hB(4))))))"));
  e.add(c, parse_tree("Y(wedge(Z(1),wedge(Z(hB(2)),wedge(Z(3),Z(4)))))"));
  e.add(-c, parse_tree("ract(hB(Y(wedge(Z(1),Z(2)))),wedge(Z(3),Z(4)))"));
  e.add(c, parse_tree("lact(wedge(Z(1),Z(2)),hB(Y(wedge(Z(3),Z(4)))))"));
  return e;
}

ExprSum m2_ht() {
  ExprSum e(2, 0);
  e.add(1, parse_tree("Y(wedge(Z(1),Z(2)))"));
  return e;
}

ExprSum m3_ht() {
  ExprSum e(3, -1);
  e.add(-1, parse_tree("Y(wedge(hA(wedge(Z(1),Z(2))),Z(3)))"));
  e.add(1, parse_tree("Y(wedge(Z(1),hA(wedge(Z(2),Z(3)))))"));
  return e;
}

ExprSum m2_after_m2_ht(const Scalar& k1, const Scalar& k2) {
  ExprSum e(3, 0);
  e.add_literal(k1, "lact(wedge(Z(1),Z(2)),3)");
  e.add_literal(-k2, "ract(1,wedge(Z(2),Z(3)))");
  e.add_literal(k2 - k1, "Y(wedge(Z(1),wedge(Z(2),Z(3))))");
  return e;
}

}  // namespace formulas

MultiMap hmi_m2(const HomotopyData& inst, const Scalar& k1, const Scalar& k2) {
  return evaluate(formulas::m2(k1, k2), inst.ops());
}
MultiMap hmi_m2_tilde(const HomotopyData& inst, const Scalar& k1, const Scalar& k2) {
  return evaluate(formulas::m2_tilde(k1, k2), inst.ops());
}
MultiMap hmi_m3(const HomotopyData& inst, const Scalar& k1, const Scalar& k2) {
  return evaluate(formulas::m3(k1, k2), inst.ops());
}
MultiMap hmi_m4(const HomotopyData& inst, const Scalar& k1, const Scalar& k2) {
  return evaluate(formulas::m4(k1, k2), inst.ops());
}
MultiMap hmi_m4_sc(const HomotopyData& inst, const Scalar& k1, const Scalar& k2) {
  return evaluate(formulas::m4_sc(k1, k2), inst.ops());
}
MultiMap pentagonator_closed(const HomotopyData& inst, const Scalar& k1, const Scalar& k2) {
  return evaluate(formulas::pentagonator(k1, k2), inst.ops());
}
MultiMap residual_RY(const HomotopyData& inst, const Scalar& k1, const Scalar& k2) {
  return evaluate(formulas::residual_RY(k1, k2), inst.ops());
}

MultiMap associator(const MultiMap& m2) {
  if (m2.arity != 2) throw Error(ErrorCode::ArityMismatch, "associator needs an arity-2 map");
  return koszul_apply(m2, 0, m2) - koszul_apply(m2, 1, m2);
}

MultiMap pentagonator(const MultiMap& m2, const MultiMap& m3) {
  if (m2.arity != 2 || m3.arity != 3) throw Error(ErrorCode::ArityMismatch, "pentagonator needs arities 2 and 3");
  return koszul_apply(m2, 0, m3) + koszul_apply(m2, 1, m3) - koszul_apply(m3, 0, m2) + koszul_apply(m3, 1, m2) -
         koszul_apply(m3, 2, m2);
}

AInftyTower ht_tower(const HomotopyData& inst, int N) {
  check_arity(N);
  AInftyTower t;
  t.method = "ht";
  t.N = N;
  Products base{{1, MultiMap::from_graded(inst.dA())}, {2, inst.wedge()}};
  t.m = transfer_products(base, inst.dB(), inst.Z(), inst.Y(), inst.hA(), N);
  for (int n = 1; n <= N; ++n) certify(t.m, n, t.notes, "ht tower");
  t.expr[2] = formulas::m2_ht();
  if (N >= 3) t.expr[3] = formulas::m3_ht();
  return t;
}

AInftyTower hmi_tower_sc(const HomotopyData& inst, const Scalar& k1, const Scalar& k2, int N) {
  check_arity(N);
  for (const char* f : {"SC_left", "SC_right", "SC_sq"})
    if (!inst.flag(f))
      throw Error(ErrorCode::PreconditionFailed, std::string("the SC tower needs ") + f + " (" +
                                                     inst.conditions().at(f).witness + ")");
  AInftyTower t;
  t.method = "hmi_sc";
  t.k1 = k1;
  t.k2 = k2;
  t.N = N;
  const Pruning prune{true, true, true};
  t.m[1] = MultiMap::from_graded(inst.dB());
  if (N >= 2) {
    t.expr[2] = formulas::m2(k1, k2);
    t.m[2] = evaluate(t.expr[2], inst.ops());
  }
  // P_n = (P_{n-1} ∘ P_2) ∘ h_B; stored as (−1)^n P_n.
  MultiMap P = N >= 2 ? t.m[2] : MultiMap{};
  ExprSum E = N >= 2 ? t.expr[2] : ExprSum{};
  for (int n = 3; n <= N; ++n) {
    P = insert_homotopy_all_slots(op_compose(P, t.m[2]), inst.hB());
    E = compose_all_slots_hb(op_compose(E, t.expr[2], prune), prune);
    t.expr[n] = E;
    t.m[n] = sign_pow(n) * P;
  }
  for (int n = 1; n <= N; ++n) certify(t.m, n, t.notes, "SC tower");
  return t;
}

AInftyTower hmi_tower_general(const HomotopyData& inst, const Scalar& k1, const Scalar& k2, int N) {
  check_arity(N);
  const bool wsc = inst.flag("WSC");
  const bool exact = k1 == -k2;
  if (!wsc && !exact)
    throw Error(ErrorCode::PreconditionFailed,
                "the general tower needs WSC or k1 = -k2 (" + inst.conditions().at("WSC").witness + ")");
  AInftyTower t;
  t.method = "hmi_general";
  t.k1 = k1;
  t.k2 = k2;
  t.N = N;
  if (wsc) t.notes.push_back("hypothesis: WSC");
  if (exact) t.notes.push_back("hypothesis: k1 = -k2");
  t.m[1] = MultiMap::from_graded(inst.dB());
  if (N >= 2) t.expr[2] = formulas::m2(k1, k2);
  const ExprSum mt = formulas::m2_tilde(k1, k2);
  for (int n = 3; n <= N; ++n) {
    const ExprSum& prev = t.expr[n - 1];
    ExprSum e = compose_slot(mt, Op::Z, prev);
    e += n == 3 ? compose_free(prev, mt) : compose_slot(prev, Op::hB, mt);
    t.expr[n] = e;
  }
  EvalCache cache(inst.ops());
  for (int n = 2; n <= N; ++n) t.m[n] = sign_pow(n) * cache.sum(t.expr[n]);
  for (int n = 1; n <= N; ++n) certify(t.m, n, t.notes, "general tower");
  return t;
}

}  // namespace hominduce
