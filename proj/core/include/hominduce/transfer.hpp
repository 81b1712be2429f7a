#pragma once
/// Tree-sum transfer of A∞ structures through the bar construction.

#include "hominduce/multimap.hpp"

namespace hominduce {

/// Same basis with every degree lowered by one.
SpacePtr suspend(const SpacePtr& s);
/// Copies a map's entries onto other spaces with identical basis order (degree recomputed).
GradedMap rebase(const GradedMap& f, const SpacePtr& src, const SpacePtr& tgt);

/// b_n(sx_1..sx_n) = (-1)^{Σ_j (n-j)|x_j|} s m_n(x_1..x_n).
MultiMap to_bar(const MultiMap& m, const SpacePtr& susp);
/// Inverse of to_bar; `base` is the unsuspended space.
MultiMap from_bar(const MultiMap& b, const SpacePtr& base);

/// Σ_{r+s+t=n} b_{r+t+1}(1^{⊗r} ⊗ b_s ⊗ 1^{⊗t}) with Koszul signs only.
MultiMap bar_defect(const Products& b, int n);

/**
 * Transfers products m_1..m_N on V to W along i: W -> V, p: V -> W and h: V -> V
 * with d h + h d = 1 - i p. Returns m'_1 = d_W and m'_2..m'_N.
 */
Products transfer_products(const Products& m, const GradedMap& d_w, const GradedMap& i, const GradedMap& p,
                           const GradedMap& h, int N);

}  // namespace hominduce
