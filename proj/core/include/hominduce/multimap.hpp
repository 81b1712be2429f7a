#pragma once
/// Sparse graded multilinear maps with Koszul-signed composition.

#include "hominduce/graded.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace hominduce {

/// Basis tuples packed big-endian in base 256, so key order is lexicographic tuple order.
using TupleKey = std::uint64_t;
constexpr int kMaxArity = 8;
TupleKey pack_tuple(const std::vector<int>& t);
std::vector<int> unpack_tuple(TupleKey k, int arity);
/// Concatenation of a prefix tuple (arity a) with a suffix tuple (arity b).
inline TupleKey concat_keys(TupleKey a, TupleKey b, int arity_b) { return (a << (8 * arity_b)) | b; }

/**
 * An arity-n, degree-k map src^{⊗n} -> tgt. Entries map input basis tuples to
 * output vectors; absent tuples are zero and no zero vector is stored.
 */
struct MultiMap {
  SpacePtr src;
  SpacePtr tgt;
  int arity = 1;
  int degree = 0;
  std::map<TupleKey, SparseVec> entries;

  static MultiMap zero(SpacePtr src, SpacePtr tgt, int arity, int degree);
  static MultiMap from_graded(const GradedMap& f);
  GradedMap to_graded() const;

  /// entries[t] += c * v, dropping the entry if it cancels.
  void add(TupleKey t, const SparseVec& v, const Scalar& c = Scalar(1));
  void add(const std::vector<int>& t, const SparseVec& v, const Scalar& c = Scalar(1)) { add(pack_tuple(t), v, c); }
  SparseVec eval(const std::vector<int>& t) const;
  /// Sum of input degrees of a tuple.
  int input_degree(TupleKey t) const;
  bool is_zero() const { return entries.empty(); }
  std::size_t nnz() const;

  MultiMap& operator+=(const MultiMap& o);
  MultiMap& operator-=(const MultiMap& o);
  friend bool operator==(const MultiMap& a, const MultiMap& b);
};

MultiMap operator+(MultiMap a, const MultiMap& b);
MultiMap operator-(MultiMap a, const MultiMap& b);
MultiMap operator*(const Scalar& s, const MultiMap& a);

/// f ∘ φ.
MultiMap post_compose(const GradedMap& f, const MultiMap& phi);
/// φ ∘ (1^{⊗r} ⊗ g ⊗ 1^{⊗t}) with sign (-1)^{|g|(|b_1|+...+|b_r|)}; g maps into φ's source.
MultiMap koszul_apply(const MultiMap& phi, int r, const MultiMap& g);
MultiMap koszul_apply(const MultiMap& phi, int r, const GradedMap& g);
/**
 * outer ∘ (inner_1 ⊗ ... ⊗ inner_k) with Koszul signs; every inner map shares
 * one source space and outputs into outer's source.
 */
MultiMap compose_multi(const MultiMap& outer, const std::vector<const MultiMap*>& inner);

/// Multiplies each entry by (-1)^{Σ_{i in mask} |b_i|}; bit i of mask is slot i (0-based).
MultiMap apply_parity_mask(const MultiMap& phi, std::uint32_t mask);

/// ∂φ = d∘φ − (−1)^{|φ|} φ∘d_{⊗n}.
MultiMap hom_differential(const MultiMap& phi, const GradedMap& d_tgt, const GradedMap& d_src);
/// m_i ∘ m_k = Σ_j (−1)^{j+i+k(i−j−1)} m_i(1^{⊗j} ⊗ m_k ⊗ 1^{⊗(i−j−1)}).
MultiMap op_compose(const MultiMap& mi, const MultiMap& mk);
/// Σ_r φ ∘ (1^{⊗r} ⊗ h ⊗ 1^{⊗t}).
MultiMap insert_homotopy_all_slots(const MultiMap& phi, const GradedMap& h);

/// Products m_1..m_N keyed by arity.
using Products = std::map<int, MultiMap>;
/// Σ_{n=r+s+t} (−1)^{r+st} m_{r+t+1}(1^{⊗r} ⊗ m_s ⊗ 1^{⊗t}); throws MissingProduct.
MultiMap a_infinity_defect(const Products& m, int n);

/// Pointwise oracle: evaluates φ on a tensor of basis vectors with φ applied at slot r of g.
SparseVec naive_koszul_apply(const MultiMap& phi, int r, const MultiMap& g, const std::vector<int>& inputs);

}  // namespace hominduce
