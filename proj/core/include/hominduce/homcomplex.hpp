#pragma once
/// Coordinates on Hom(S^{⊗n}, T)_k and the matrix of ∂ between consecutive degrees.

#include "hominduce/multimap.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hominduce {

struct HomCoordinates {
  SpacePtr src;
  SpacePtr tgt;
  int arity = 1;
  int degree = 0;
  std::vector<std::pair<TupleKey, int>> coords;  ///< (input tuple, output basis index)
  std::map<std::pair<TupleKey, int>, int> index;

  int size() const { return static_cast<int>(coords.size()); }
  DenseVec to_vec(const MultiMap& phi) const;
  MultiMap from_vec(const DenseVec& v) const;
  MultiMap unit(int c) const;
};

HomCoordinates hom_coordinates(SpacePtr src, SpacePtr tgt, int arity, int degree);

/// Matrix of ∂ : from -> to (rows indexed by `to`, columns by `from`); to.degree must be from.degree + 1.
SparseMatrix differential_matrix(const HomCoordinates& from, const HomCoordinates& to, const GradedMap& d_tgt,
                                 const GradedMap& d_src);

/// Solves ∂x = target in Hom(src^{⊗n}, tgt)_{target.degree - 1}; free variables zero.
std::optional<MultiMap> solve_primitive(const MultiMap& target, const GradedMap& d_tgt, const GradedMap& d_src);

/// Left-kernel witness y (yD = 0, y·target = 1) when target is not ∂-exact.
std::optional<DenseVec> exactness_witness(const MultiMap& target, const GradedMap& d_tgt, const GradedMap& d_src);

}  // namespace hominduce
