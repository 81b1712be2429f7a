#include "hominduce/transfer.hpp"

#include "hominduce/errors.hpp"

#include <functional>

namespace hominduce {

SpacePtr suspend(const SpacePtr& s) { return make_space(GradedSpace(s->g_min() - 1, s->labels())); }

GradedMap rebase(const GradedMap& f, const SpacePtr& src, const SpacePtr& tgt) {
  const int deg = f.degree + (f.tgt->g_min() - tgt->g_min()) - (f.src->g_min() - src->g_min());
  GradedMap out = GradedMap::zero(src, tgt, deg);
  for (int s = 0; s < f.src->total(); ++s)
    for (const auto& [t, c] : f.apply(s)) out.set(t, s, c);
  return out;
}

namespace {
MultiMap convert(const MultiMap& m, const SpacePtr& to, int degree_shift, int parity_offset) {
  MultiMap out = MultiMap::zero(to, to, m.arity, m.degree + degree_shift);
  const int n = m.arity;
  for (const auto& [k, v] : m.entries) {
    auto t = unpack_tuple(k, n);
    int par = 0;
    for (int j = 0; j < n; ++j) par += (n - 1 - j) * (m.src->degree_of(t[j]) + parity_offset);
    out.add(k, v, Scalar(sign_of(par)));
  }
  return out;
}
}  // namespace

MultiMap to_bar(const MultiMap& m, const SpacePtr& susp) { return convert(m, susp, m.arity - 1, 0); }

MultiMap from_bar(const MultiMap& b, const SpacePtr& base) { return convert(b, base, 1 - b.arity, 1); }

MultiMap bar_defect(const Products& b, int n) {
  const auto& any = b.begin()->second;
  MultiMap out = MultiMap::zero(any.src, any.tgt, n, 2);
  for (int s = 1; s <= n; ++s) {
    auto inner = b.find(s);
    auto outer = b.find(n - s + 1);
    if (inner == b.end() || outer == b.end())
      throw Error(ErrorCode::MissingProduct, "bar defect needs b_" + std::to_string(s) + " and b_" + std::to_string(n - s + 1));
    for (int r = 0; r + s <= n; ++r) out += koszul_apply(outer->second, r, inner->second);
  }
  return out;
}

Products transfer_products(const Products& m, const GradedMap& d_w, const GradedMap& i, const GradedMap& p,
                           const GradedMap& h, int N) {
  const SpacePtr V = i.tgt, W = i.src;
  const SpacePtr sV = suspend(V), sW = suspend(W);
  Products b;
  for (const auto& [n, mn] : m)
    if (n <= N) b.emplace(n, to_bar(mn, sV));
  const GradedMap si = rebase(i, sW, sV), sp = rebase(p, sV, sW), sh = rebase(h, sV, sV);

  std::map<int, MultiMap> phi;  // bar components sW^{⊗n} -> sV, degree 0
  phi.emplace(1, MultiMap::from_graded(si));
  Products out;
  out.emplace(1, MultiMap::from_graded(d_w));
  for (int n = 2; n <= N; ++n) {
    MultiMap Phi = MultiMap::zero(sW, sV, n, 1);
    // Ordered compositions n = n_1 + ... + n_k with k >= 2.
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int left) {
      if (left == 0) {
        if (parts.size() < 2) return;
        auto bk = b.find(static_cast<int>(parts.size()));
        if (bk == b.end()) return;
        std::vector<const MultiMap*> inner;
        for (int q : parts) inner.push_back(&phi.at(q));
        Phi += compose_multi(bk->second, inner);
        return;
      }
      for (int q = 1; q <= left && q < n; ++q) {
        parts.push_back(q);
        rec(left - q);
        parts.pop_back();
      }
    };
    rec(n);
    out.emplace(n, from_bar(post_compose(sp, Phi), W));
    if (n < N) phi.emplace(n, Scalar(-1) * post_compose(sh, Phi));
  }
  return out;
}

}  // namespace hominduce
