#include "hominduce/analysis.hpp"

#include "hominduce/errors.hpp"
#include "hominduce/homcomplex.hpp"
#include "hominduce/transfer.hpp"

#include <sstream>

namespace hominduce {

namespace {

Scalar parity_sign(int k) { return k % 2 == 0 ? Scalar(1) : Scalar(-1); }

std::string render_entry(const MultiMap& m) {
  if (m.entries.empty()) return "";
  const auto& [key, vec] = *m.entries.begin();
  std::ostringstream os;
  auto t = unpack_tuple(key, m.arity);
  for (std::size_t j = 0; j < t.size(); ++j) os << (j ? " ⊗ " : "") << m.src->label(t[j]);
  os << " ->";
  bool first = true;
  for (const auto& [i, c] : vec) {
    os << (first ? " " : " + ") << c.get_str() << "*" << m.tgt->label(i);
    first = false;
  }
  return os.str();
}

/// Induced map on cohomology: p_T ∘ f ∘ i_S, per degree rank.
bool is_quasi_iso(const GradedMap& f, const GradedMap& d_src, const GradedMap& d_tgt) {
  const CohomologyModel s = cohomology(f.src, d_src);
  const CohomologyModel t = cohomology(f.tgt, d_tgt);
  const GradedMap induced = compose(t.p, compose(f, s.i));
  for (int g = std::min(s.H->g_min(), t.H->g_min()); g <= std::max(s.H->g_max(), t.H->g_max()); ++g) {
    const int n = s.H->dim(g);
    if (n != t.H->dim(g)) return false;
    if (n == 0) continue;
    auto it = induced.blocks.find(g);
    if (it == induced.blocks.end() || rank(it->second) != n) return false;
  }
  return true;
}

}  // namespace

ClassCertificate class_of(const MultiMap& target, const GradedMap& d_tgt, const GradedMap& d_src) {
  if (!hom_differential(target, d_tgt, d_src).is_zero())
    throw Error(ErrorCode::NotClosed, "class requested for a map that is not closed: " + render_entry(target));
  ClassCertificate c;
  if (auto x = solve_primitive(target, d_tgt, d_src)) {
    c.zero = true;
    c.primitive = std::move(*x);
  } else {
    c.witness = exactness_witness(target, d_tgt, d_src);
  }
  return c;
}

bool reverify(const ClassCertificate& c, const MultiMap& target, const GradedMap& d_tgt, const GradedMap& d_src) {
  if (c.zero) return c.primitive && hom_differential(*c.primitive, d_tgt, d_src) == target;
  if (!c.witness) return false;
  const HomCoordinates from = hom_coordinates(target.src, target.tgt, target.arity, target.degree - 1);
  const HomCoordinates to = hom_coordinates(target.src, target.tgt, target.arity, target.degree);
  const SparseMatrix D = differential_matrix(from, to, d_tgt, d_src);
  const DenseVec& y = *c.witness;
  if (static_cast<int>(y.size()) != to.size()) return false;
  DenseVec yD(from.size());
  for (std::size_t r = 0; r < D.rows.size(); ++r)
    for (const auto& [col, v] : D.rows[r]) yD[col] += y[r] * v;
  for (const auto& v : yD)
    if (!is_zero(v)) return false;
  const DenseVec t = to.to_vec(target);
  Scalar pairing = 0;
  for (std::size_t r = 0; r < t.size(); ++r) pairing += y[r] * t[r];
  return !is_zero(pairing);
}

HomObstruction obstruction_class(const HomotopyData& inst) {
  HomObstruction o;
  o.representative = compose(inst.Z(), inst.hB()) - compose(inst.hA(), inst.Z());
  const MultiMap rep = MultiMap::from_graded(o.representative);
  if (!commutator(o.representative, inst.dA(), inst.dB()).is_zero())
    throw Error(ErrorCode::NotClosed, "Z hB - hA Z is not closed: " + zero_witness(commutator(o.representative, inst.dA(), inst.dB())));
  const GradedMap candidate = Scalar(-1) * compose(inst.hA(), compose(inst.hA(), inst.Z()));
  if (commutator(candidate, inst.dA(), inst.dB()) == o.representative) {
    o.certificate.zero = true;
    o.certificate.primitive = MultiMap::from_graded(candidate);
    return o;
  }
  o.certificate = class_of(rep, inst.dA(), inst.dB());
  return o;
}

bool reverify(const HomObstruction& o, const HomotopyData& inst) {
  return reverify(o.certificate, MultiMap::from_graded(o.representative), inst.dA(), inst.dB());
}

ClassCertificate wedge_class(const HomotopyData& inst) { return class_of(inst.wedge(), inst.dA(), inst.dA()); }

MorphismReport check_strict_morphism(const GradedMap& f1, const Products& source, const Products& target, int N) {
  if (f1.degree != 0) throw Error(ErrorCode::InvalidInput, "f1 must have degree 0");
  MorphismReport rep;
  const MultiMap f = MultiMap::from_graded(f1);
  for (int n = 1; n <= N; ++n) {
    MultiMap r = MultiMap::zero(f1.src, f1.tgt, n, 2 - n);
    if (auto s = source.find(n); s != source.end()) r = post_compose(f1, s->second);
    if (auto t = target.find(n); t != target.end()) {
      std::vector<const MultiMap*> inner(n, &f);
      r -= compose_multi(t->second, inner);
    }
    if (!r.is_zero() && rep.residuals_zero) {
      rep.residuals_zero = false;
      rep.first_nonzero = n;
    }
    rep.residuals.emplace(n, std::move(r));
  }
  const auto d_s = source.find(1), d_t = target.find(1);
  if (d_s == source.end() || d_t == target.end()) throw Error(ErrorCode::MissingProduct, "both towers need m1");
  rep.quasi_iso = rep.residuals.at(1).is_zero() && is_quasi_iso(f1, d_s->second.to_graded(), d_t->second.to_graded());
  return rep;
}

Cochain hochschild_differential(const Cochain& mu, const AInftyTower& ht, int N) {
  if (N > ht.N)
    throw Error(ErrorCode::TruncationTooTight,
                "component " + std::to_string(N) + " needs ht products up to " + std::to_string(N) + ", tower has " +
                    std::to_string(ht.N));
  const Products P = to_paper_normalization(ht.m);
  const SpacePtr B = P.at(1).src;
  Cochain out;
  for (int n = 1; n <= N; ++n) {
    MultiMap acc;
    bool have = false;
    for (const auto& [j, mj] : mu) {
      const int i = n - j + 1;
      if (i < 1 || mj.is_zero()) continue;
      auto pi = P.find(i);
      if (pi == P.end()) continue;
      MultiMap term = parity_sign(i - 1) * op_compose(pi->second, mj) - parity_sign(mj.degree) * op_compose(mj, pi->second);
      if (!have) {
        acc = std::move(term);
        have = true;
      } else {
        acc += term;
      }
    }
    if (!have) {
      // keeps the Hochschild weight |μ_j| + j of the input
      const int weight = mu.empty() ? 2 : mu.begin()->second.degree + mu.begin()->first;
      acc = MultiMap::zero(B, B, n, weight + 1 - n);
    }
    out.emplace(n, std::move(acc));
  }
  return out;
}

DeformationReport check_infinitesimal_deformation(const HomotopyData& inst, const Scalar& k1, const Scalar& k2, int N) {
  const bool sc = inst.flag("SC_left") && inst.flag("SC_right") && inst.flag("SC_sq");
  const AInftyTower hmi = sc ? hmi_tower_sc(inst, k1, k2, N) : hmi_tower_general(inst, k1, k2, N);
  const AInftyTower ht = ht_tower(inst, N);
  const Products P = to_paper_normalization(hmi.m), Q = to_paper_normalization(ht.m);
  DeformationReport rep;
  bool any = false;
  for (int i = 2; i <= N; ++i) {
    MultiMap c = P.at(i) - Q.at(i);
    any = any || !c.is_zero();
    rep.mu.emplace(i, std::move(c));
  }
  rep.trivially_zero = !any;
  rep.dH = hochschild_differential(rep.mu, ht, N);
  for (const auto& [n, c] : rep.dH)
    if (!c.is_zero()) {
      rep.first_nonzero = n;
      rep.witness = render_entry(c);
      break;
    }
  return rep;
}

MasseyTower massey_transfer(const HomotopyData& inst, const AInftyTower& tower, int N) {
  if (N > tower.N) throw Error(ErrorCode::TruncationTooTight, "tower shorter than the requested arity");
  if (!failing_arities(tower.m, N).empty())
    throw Error(ErrorCode::DefectNonzero, "input tower is not certified up to arity " + std::to_string(N));
  MasseyTower out;
  out.model = cohomology(inst.B(), inst.dB());
  const CohomologyModel& c = out.model;
  const GradedMap zero = GradedMap::zero(c.H, c.H, 1);
  const AInftyTower ht = ht_tower(inst, N);
  out.M = transfer_products(tower.m, zero, c.i, c.p, c.h_split, N);
  out.M_ht = transfer_products(ht.m, zero, c.i, c.p, c.h_split, N);
  for (auto* m : {&out.M, &out.M_ht}) {
    const std::string what = m == &out.M ? "Massey tower" : "Massey ht tower";
    for (int n = 1; n <= N; ++n) {
      if (a_infinity_defect(*m, n).is_zero()) continue;
      (*m)[n] = Scalar(-1) * (*m)[n];
      if (!a_infinity_defect(*m, n).is_zero())
        throw Error(ErrorCode::DefectNonzero, what + " fails at arity " + std::to_string(n));
      out.notes.push_back(what + ": sign of M" + std::to_string(n) + " flipped by certification");
    }
  }
  return out;
}

}  // namespace hominduce
