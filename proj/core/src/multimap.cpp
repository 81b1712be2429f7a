#include "hominduce/multimap.hpp"

#include "hominduce/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace hominduce {

TupleKey pack_tuple(const std::vector<int>& t) {
  if (t.size() > static_cast<std::size_t>(kMaxArity)) throw Error(ErrorCode::ArityMismatch, "arity exceeds hard cap");
  TupleKey k = 0;
  for (int x : t) {
    if (x < 0 || x > 255) throw Error(ErrorCode::SizeLimit, "basis index exceeds tuple packing range");
    k = (k << 8) | static_cast<TupleKey>(x);
  }
  return k;
}

std::vector<int> unpack_tuple(TupleKey k, int arity) {
  std::vector<int> t(arity);
  for (int i = arity - 1; i >= 0; --i) {
    t[i] = static_cast<int>(k & 0xff);
    k >>= 8;
  }
  return t;
}

namespace {

inline int slot_of(TupleKey k, int arity, int r) { return static_cast<int>((k >> (8 * (arity - 1 - r))) & 0xff); }
inline TupleKey low_mask(int slots) { return slots >= 8 ? ~TupleKey(0) : ((TupleKey(1) << (8 * slots)) - 1); }

int tuple_degree(const GradedSpace& s, TupleKey k, int arity, int upto) {
  int d = 0;
  for (int r = 0; r < upto; ++r) d += s.degree_of(slot_of(k, arity, r));
  return d;
}

/// Hash-based accumulation, emitted into the ordered entry map at the end.
struct Accumulator {
  std::unordered_map<TupleKey, SparseVec> acc;
  void add(TupleKey k, const SparseVec& v, const Scalar& c) {
    if (is_zero(c) || v.empty()) return;
    axpy(acc[k], c, v);
  }
  void add_single(TupleKey k, int idx, const Scalar& c) {
    if (is_zero(c)) return;
    SparseVec& v = acc[k];
    axpy(v, c, SparseVec{{idx, Scalar(1)}});
  }
  void emit(MultiMap& out) {
    for (auto& [k, v] : acc)
      if (!v.empty()) out.add(k, v);
  }
};

void check_arity(int a) {
  if (a < 1 || a > kMaxArity) throw Error(ErrorCode::ArityMismatch, "arity " + std::to_string(a) + " outside [1, 8]");
}

}  // namespace

MultiMap MultiMap::zero(SpacePtr src, SpacePtr tgt, int arity, int degree) {
  check_arity(arity);
  MultiMap m;
  m.src = std::move(src);
  m.tgt = std::move(tgt);
  m.arity = arity;
  m.degree = degree;
  return m;
}

MultiMap MultiMap::from_graded(const GradedMap& f) {
  MultiMap m = zero(f.src, f.tgt, 1, f.degree);
  for (int s = 0; s < f.src->total(); ++s) {
    SparseVec v = f.apply(s);
    if (!v.empty()) m.entries.emplace(static_cast<TupleKey>(s), std::move(v));
  }
  return m;
}

GradedMap MultiMap::to_graded() const {
  if (arity != 1) throw Error(ErrorCode::ArityMismatch, "to_graded needs arity 1");
  GradedMap f = GradedMap::zero(src, tgt, degree);
  for (const auto& [k, v] : entries)
    for (const auto& [t, c] : v) f.set(t, static_cast<int>(k), c);
  return f;
}

void MultiMap::add(TupleKey t, const SparseVec& v, const Scalar& c) {
  if (v.empty() || hominduce::is_zero(c)) return;
  auto it = entries.find(t);
  if (it == entries.end()) {
    int out_deg = input_degree(t) + degree;
    for (const auto& [i, x] : v)
      if (tgt->degree_of(i) != out_deg) throw Error(ErrorCode::SpaceMismatch, "inhomogeneous multimap entry");
    entries.emplace(t, scaled(v, c));
    return;
  }
  axpy(it->second, c, v);
  if (it->second.empty()) entries.erase(it);
}

SparseVec MultiMap::eval(const std::vector<int>& t) const {
  auto it = entries.find(pack_tuple(t));
  return it == entries.end() ? SparseVec{} : it->second;
}

int MultiMap::input_degree(TupleKey t) const { return tuple_degree(*src, t, arity, arity); }

std::size_t MultiMap::nnz() const {
  std::size_t n = 0;
  for (const auto& [k, v] : entries) n += v.size();
  return n;
}

namespace {
void check_same_shape(const MultiMap& a, const MultiMap& b) {
  if (!same_space(a.src, b.src) || !same_space(a.tgt, b.tgt) || a.arity != b.arity || a.degree != b.degree)
    throw Error(ErrorCode::SpaceMismatch, "multimaps with different shapes");
}
}  // namespace

MultiMap& MultiMap::operator+=(const MultiMap& o) {
  check_same_shape(*this, o);
  for (const auto& [k, v] : o.entries) add(k, v);
  return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& o) {
  check_same_shape(*this, o);
  for (const auto& [k, v] : o.entries) add(k, v, Scalar(-1));
  return *this;
}

bool operator==(const MultiMap& a, const MultiMap& b) {
  return same_space(a.src, b.src) && same_space(a.tgt, b.tgt) && a.arity == b.arity && a.degree == b.degree &&
         a.entries == b.entries;
}

MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }

MultiMap operator*(const Scalar& s, const MultiMap& a) {
  MultiMap r = MultiMap::zero(a.src, a.tgt, a.arity, a.degree);
  if (is_zero(s)) return r;
  for (const auto& [k, v] : a.entries) r.entries.emplace(k, scaled(v, s));
  return r;
}

MultiMap post_compose(const GradedMap& f, const MultiMap& phi) {
  if (!same_space(f.src, phi.tgt)) throw Error(ErrorCode::SpaceMismatch, "post_compose: map source differs from target");
  MultiMap r = MultiMap::zero(phi.src, f.tgt, phi.arity, phi.degree + f.degree);
  std::vector<SparseVec> cols = f.columns();
  for (const auto& [k, v] : phi.entries) {
    SparseVec out;
    for (const auto& [i, c] : v) axpy(out, c, cols[i]);
    if (!out.empty()) r.entries.emplace(k, std::move(out));
  }
  return r;
}

MultiMap koszul_apply(const MultiMap& phi, int r, const MultiMap& g) {
  if (r < 0 || r >= phi.arity) throw Error(ErrorCode::ArityMismatch, "koszul_apply: slot out of range");
  if (!same_space(g.tgt, phi.src) || !same_space(g.src, phi.src))
    throw Error(ErrorCode::SpaceMismatch, "koszul_apply: inserted map must be an endomorphism of the source");
  const int n = phi.arity, a = g.arity;
  check_arity(n + a - 1);
  MultiMap out = MultiMap::zero(phi.src, phi.tgt, n + a - 1, phi.degree + g.degree);
  // Index φ's entries by the basis element sitting in slot r.
  std::unordered_map<int, std::vector<std::pair<TupleKey, const SparseVec*>>> by_slot;
  for (const auto& [k, v] : phi.entries) by_slot[slot_of(k, n, r)].emplace_back(k, &v);
  const int tail = n - r - 1;
  const bool odd = (g.degree & 1) != 0;
  Accumulator acc;
  for (const auto& [y, gv] : g.entries)
    for (const auto& [j, c] : gv) {
      auto it = by_slot.find(j);
      if (it == by_slot.end()) continue;
      for (const auto& [k, w] : it->second) {
        TupleKey prefix = k >> (8 * (n - r));
        TupleKey suffix = k & low_mask(tail);
        TupleKey key = (((prefix << (8 * a)) | y) << (8 * tail)) | suffix;
        Scalar coef = c;
        if (odd && (tuple_degree(*phi.src, k, n, r) & 1)) coef = -coef;
        acc.add(key, *w, coef);
      }
    }
  acc.emit(out);
  return out;
}

MultiMap koszul_apply(const MultiMap& phi, int r, const GradedMap& g) {
  return koszul_apply(phi, r, MultiMap::from_graded(g));
}

namespace {

struct MultiComposer {
  const MultiMap& outer;
  const std::vector<const MultiMap*>& inner;
  std::vector<std::set<TupleKey>> prefixes;
  std::vector<std::vector<std::pair<TupleKey, int>>> inner_keys;  // key, input degree
  Accumulator acc;
  int result_arity = 0;

  MultiComposer(const MultiMap& o, const std::vector<const MultiMap*>& in) : outer(o), inner(in) {
    const int k = static_cast<int>(inner.size());
    prefixes.resize(k + 1);
    for (const auto& [key, v] : outer.entries)
      for (int len = 0; len <= k; ++len) prefixes[len].insert(key >> (8 * (k - len)));
    for (const auto* m : inner) {
      inner_keys.emplace_back();
      for (const auto& [key, v] : m->entries) inner_keys.back().emplace_back(key, m->input_degree(key));
      result_arity += m->arity;
    }
  }

  void run(std::size_t j, TupleKey in_key, int in_deg, const Scalar& coef, TupleKey out_prefix) {
    if (j == inner.size()) {
      auto it = outer.entries.find(out_prefix);
      if (it != outer.entries.end()) acc.add(in_key, it->second, coef);
      return;
    }
    const MultiMap& m = *inner[j];
    const bool flip = (m.degree & 1) && (in_deg & 1);
    const auto& keys = inner_keys[j];
    std::size_t idx = 0;
    for (const auto& [y, v] : m.entries) {
      int ydeg = keys[idx++].second;
      for (const auto& [o, c] : v) {
        TupleKey np = (out_prefix << 8) | static_cast<TupleKey>(o);
        if (!prefixes[j + 1].count(np)) continue;
        Scalar nc = coef * c;
        if (flip) nc = -nc;
        run(j + 1, concat_keys(in_key, y, m.arity), in_deg + ydeg, nc, np);
      }
    }
  }
};

}  // namespace

MultiMap compose_multi(const MultiMap& outer, const std::vector<const MultiMap*>& inner) {
  if (static_cast<int>(inner.size()) != outer.arity) throw Error(ErrorCode::ArityMismatch, "compose_multi: wrong number of inner maps");
  int deg = outer.degree;
  for (const auto* m : inner) {
    if (!same_space(m->tgt, outer.src) || !same_space(m->src, inner.front()->src))
      throw Error(ErrorCode::SpaceMismatch, "compose_multi: incompatible inner maps");
    deg += m->degree;
  }
  MultiComposer mc(outer, inner);
  check_arity(mc.result_arity);
  MultiMap out = MultiMap::zero(inner.front()->src, outer.tgt, mc.result_arity, deg);
  mc.run(0, 0, 0, Scalar(1), 0);
  mc.acc.emit(out);
  return out;
}

MultiMap apply_parity_mask(const MultiMap& phi, std::uint32_t mask) {
  if (mask == 0) return phi;
  MultiMap r = MultiMap::zero(phi.src, phi.tgt, phi.arity, phi.degree);
  for (const auto& [k, v] : phi.entries) {
    int s = 0;
    for (int i = 0; i < phi.arity; ++i)
      if (mask & (1u << i)) s += phi.src->degree_of(slot_of(k, phi.arity, i));
    r.entries.emplace(k, (s & 1) ? scaled(v, Scalar(-1)) : v);
  }
  return r;
}

MultiMap hom_differential(const MultiMap& phi, const GradedMap& d_tgt, const GradedMap& d_src) {
  if (d_tgt.degree != 1 || d_src.degree != 1) throw Error(ErrorCode::SpaceMismatch, "differentials must have degree +1");
  MultiMap out = post_compose(d_tgt, phi);
  MultiMap dsrc = MultiMap::from_graded(d_src);
  const Scalar s = (phi.degree & 1) ? Scalar(1) : Scalar(-1);
  for (int r = 0; r < phi.arity; ++r) {
    MultiMap t = koszul_apply(phi, r, dsrc);
    for (const auto& [k, v] : t.entries) out.add(k, v, s);
  }
  return out;
}

MultiMap op_compose(const MultiMap& mi, const MultiMap& mk) {
  const int i = mi.arity, k = mk.arity;
  MultiMap out = MultiMap::zero(mi.src, mi.tgt, i + k - 1, mi.degree + mk.degree);
  for (int j = 0; j < i; ++j) {
    MultiMap t = koszul_apply(mi, j, mk);
    out.degree = t.degree;
    const Scalar s = sign_of(j + i + k * (i - j - 1));
    for (const auto& [key, v] : t.entries) out.add(key, v, s);
  }
  return out;
}

MultiMap insert_homotopy_all_slots(const MultiMap& phi, const GradedMap& h) {
  MultiMap hm = MultiMap::from_graded(h);
  MultiMap out = MultiMap::zero(phi.src, phi.tgt, phi.arity, phi.degree + h.degree);
  for (int r = 0; r < phi.arity; ++r) out += koszul_apply(phi, r, hm);
  return out;
}

MultiMap a_infinity_defect(const Products& m, int n) {
  auto get = [&](int a) -> const MultiMap& {
    auto it = m.find(a);
    if (it == m.end()) throw Error(ErrorCode::MissingProduct, "m_" + std::to_string(a) + " is missing");
    return it->second;
  };
  const MultiMap& m1 = get(1);
  MultiMap out = MultiMap::zero(m1.src, m1.tgt, n, 3 - n);
  for (int s = 1; s <= n; ++s)
    for (int r = 0; r + s <= n; ++r) {
      int t = n - r - s;
      const MultiMap& outer = get(r + t + 1);
      const MultiMap& inner = get(s);
      MultiMap term = koszul_apply(outer, r, inner);
      const Scalar sg = sign_of(r + s * t);
      for (const auto& [k, v] : term.entries) out.add(k, v, sg);
    }
  return out;
}

SparseVec naive_koszul_apply(const MultiMap& phi, int r, const MultiMap& g, const std::vector<int>& inputs) {
  std::vector<int> block(inputs.begin() + r, inputs.begin() + r + g.arity);
  SparseVec inner = g.eval(block);
  int left = 0;
  for (int i = 0; i < r; ++i) left += phi.src->degree_of(inputs[i]);
  Scalar s = ((g.degree & 1) && (left & 1)) ? Scalar(-1) : Scalar(1);
  SparseVec out;
  for (const auto& [j, c] : inner) {
    std::vector<int> t(inputs.begin(), inputs.begin() + r);
    t.push_back(j);
    t.insert(t.end(), inputs.begin() + r + g.arity, inputs.end());
    axpy(out, s * c, phi.eval(t));
  }
  return out;
}

}  // namespace hominduce
