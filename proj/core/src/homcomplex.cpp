#include "hominduce/homcomplex.hpp"

#include "hominduce/errors.hpp"

#include <functional>

namespace hominduce {

namespace {
void enumerate(const GradedSpace& s, int arity, int depth, TupleKey key, int deg,
               const std::function<void(TupleKey, int)>& visit) {
  if (depth == arity) {
    visit(key, deg);
    return;
  }
  for (int b = 0; b < s.total(); ++b) enumerate(s, arity, depth + 1, (key << 8) | b, deg + s.degree_of(b), visit);
}
}  // namespace

HomCoordinates hom_coordinates(SpacePtr src, SpacePtr tgt, int arity, int degree) {
  if (arity < 1 || arity > kMaxArity) throw Error(ErrorCode::ArityMismatch, "hom_coordinates: bad arity");
  HomCoordinates hc;
  hc.src = std::move(src);
  hc.tgt = std::move(tgt);
  hc.arity = arity;
  hc.degree = degree;
  enumerate(*hc.src, arity, 0, 0, 0, [&](TupleKey k, int deg) {
    int out = deg + degree;
    for (int o = hc.tgt->offset(out); o < hc.tgt->offset(out) + hc.tgt->dim(out); ++o) {
      hc.index.emplace(std::make_pair(k, o), static_cast<int>(hc.coords.size()));
      hc.coords.emplace_back(k, o);
    }
  });
  return hc;
}

DenseVec HomCoordinates::to_vec(const MultiMap& phi) const {
  DenseVec v(coords.size());
  for (const auto& [k, out] : phi.entries)
    for (const auto& [o, c] : out) {
      auto it = index.find({k, o});
      if (it == index.end()) throw Error(ErrorCode::SpaceMismatch, "entry outside the coordinate system");
      v[it->second] = c;
    }
  return v;
}

MultiMap HomCoordinates::from_vec(const DenseVec& v) const {
  MultiMap m = MultiMap::zero(src, tgt, arity, degree);
  for (std::size_t c = 0; c < coords.size(); ++c)
    if (!is_zero(v[c])) m.add(coords[c].first, SparseVec{{coords[c].second, v[c]}});
  return m;
}

MultiMap HomCoordinates::unit(int c) const {
  MultiMap m = MultiMap::zero(src, tgt, arity, degree);
  m.add(coords[c].first, SparseVec{{coords[c].second, Scalar(1)}});
  return m;
}

SparseMatrix differential_matrix(const HomCoordinates& from, const HomCoordinates& to, const GradedMap& d_tgt,
                                 const GradedMap& d_src) {
  if (to.degree != from.degree + 1 || to.arity != from.arity)
    throw Error(ErrorCode::SpaceMismatch, "differential_matrix: incompatible coordinate systems");
  SparseMatrix m;
  m.cols = from.size();
  m.rows.resize(to.size());
  for (int c = 0; c < from.size(); ++c) {
    DenseVec img = to.to_vec(hom_differential(from.unit(c), d_tgt, d_src));
    for (int r = 0; r < to.size(); ++r)
      if (!is_zero(img[r])) m.rows[r].emplace_back(c, img[r]);
  }
  return m;
}

std::optional<MultiMap> solve_primitive(const MultiMap& target, const GradedMap& d_tgt, const GradedMap& d_src) {
  HomCoordinates from = hom_coordinates(target.src, target.tgt, target.arity, target.degree - 1);
  HomCoordinates to = hom_coordinates(target.src, target.tgt, target.arity, target.degree);
  SparseMatrix D = differential_matrix(from, to, d_tgt, d_src);
  auto x = solve(D, to.to_vec(target));
  if (!x) return std::nullopt;
  return from.from_vec(*x);
}

std::optional<DenseVec> exactness_witness(const MultiMap& target, const GradedMap& d_tgt, const GradedMap& d_src) {
  HomCoordinates from = hom_coordinates(target.src, target.tgt, target.arity, target.degree - 1);
  HomCoordinates to = hom_coordinates(target.src, target.tgt, target.arity, target.degree);
  SparseMatrix D = differential_matrix(from, to, d_tgt, d_src);
  return inconsistency_witness(D, to.to_vec(target));
}

}  // namespace hominduce
