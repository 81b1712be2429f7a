#include "hominduce/instances.hpp"

#include "hominduce/errors.hpp"
#include "hominduce/homcomplex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace hominduce {

namespace {

/// Collects labelled basis elements in any order and lays them out by degree.
struct Basis {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<int> global;  ///< filled by build()

  int add(const std::string& label, int degree) {
    labels.push_back(label);
    degrees.push_back(degree);
    return static_cast<int>(labels.size()) - 1;
  }
  SpacePtr build() {
    if (labels.empty()) return make_space(GradedSpace(0, {{}}));
    int lo = *std::min_element(degrees.begin(), degrees.end());
    int hi = *std::max_element(degrees.begin(), degrees.end());
    std::vector<std::vector<std::string>> per(hi - lo + 1);
    std::vector<int> local(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      local[i] = static_cast<int>(per[degrees[i] - lo].size());
      per[degrees[i] - lo].push_back(labels[i]);
    }
    SpacePtr s = make_space(GradedSpace(lo, per));
    global.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) global[i] = s->offset(degrees[i]) + local[i];
    return s;
  }
};

SparseVec e(int i, const Scalar& c = Scalar(1)) { return SparseVec{{i, c}}; }

Scalar wedge_coeff_sign(const std::vector<int>& s, const std::vector<int>& t) {
  int inv = 0;
  for (int a : s)
    for (int b : t) {
      if (a == b) return Scalar(0);
      if (a > b) ++inv;
    }
  return Scalar(sign_of(inv));
}

std::string join_theta(const std::vector<int>& s, int n) {
  if (s.empty()) return "1";
  std::string out;
  for (int i : s) out += n == 1 ? "θ" : "θ" + std::to_string(i + 1);
  return out;
}

Dga exterior(int n) {
  if (n < 1 || n > 3) throw Error(ErrorCode::InvalidInput, "exterior:n needs 1 <= n <= 3");
  Basis b;
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    subsets.push_back(s);
    b.add(join_theta(s, n), static_cast<int>(s.size()));
  }
  Dga a{"exterior:" + std::to_string(n), b.build(), {}, {}};
  a.d = GradedMap::zero(a.space, a.space, 1);
  a.wedge = MultiMap::zero(a.space, a.space, 2, 0);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      Scalar c = wedge_coeff_sign(subsets[i], subsets[j]);
      if (c == 0) continue;
      std::vector<int> u = subsets[i];
      u.insert(u.end(), subsets[j].begin(), subsets[j].end());
      std::sort(u.begin(), u.end());
      int k = static_cast<int>(std::find(subsets.begin(), subsets.end(), u) - subsets.begin());
      a.wedge.add({b.global[i], b.global[j]}, e(b.global[k], c));
    }
  return a;
}

Dga dual_numbers() {
  Basis b;
  b.add("1", 0);
  b.add("ε", 0);
  Dga a{"dual", b.build(), {}, {}};
  a.d = GradedMap::zero(a.space, a.space, 1);
  a.wedge = MultiMap::zero(a.space, a.space, 2, 0);
  const int one = b.global[0], eps = b.global[1];
  a.wedge.add({one, one}, e(one));
  a.wedge.add({one, eps}, e(eps));
  a.wedge.add({eps, one}, e(eps));
  return a;
}

Dga truncated_poly(int deg) {
  if (deg < 1 || deg > 4) throw Error(ErrorCode::InvalidInput, "poly:D needs 1 <= D <= 4");
  Basis b;
  for (int k = 0; k <= deg; ++k) b.add(k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)), 2 * k);
  Dga a{"poly:" + std::to_string(deg), b.build(), {}, {}};
  a.d = GradedMap::zero(a.space, a.space, 1);
  a.wedge = MultiMap::zero(a.space, a.space, 2, 0);
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) a.wedge.add({b.global[i], b.global[j]}, e(b.global[i + j]));
  return a;
}

Dga acyclic() {
  Basis b;
  b.add("x", 1);
  b.add("y", 2);
  Dga a{"acyclic", b.build(), {}, {}};
  a.d = GradedMap::zero(a.space, a.space, 1);
  a.d.set(b.global[1], b.global[0], 1);
  a.wedge = MultiMap::zero(a.space, a.space, 2, 0);
  a.wedge.add({b.global[0], b.global[0]}, e(b.global[1]));
  return a;
}

/// Bilinear evaluation of a MultiMap of arity 2 on two vectors.
SparseVec apply2(const MultiMap& m, const SparseVec& x, const SparseVec& y) {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) axpy(out, a * b, m.eval({i, j}));
  return out;
}

using LeftFn = std::function<SparseVec(const SparseVec& x, int b)>;
using RightFn = std::function<SparseVec(int b, const SparseVec& x)>;

/// Tabulates actions on the image basis of Z.
void fill_actions(HomotopyData::Parts& p, const LeftFn& left, const RightFn& right) {
  std::vector<SparseVec> imz;
  image_z_coordinates(p.Z, &imz);
  p.lact.clear();
  p.ract.clear();
  for (int k = 0; k < static_cast<int>(imz.size()); ++k)
    for (int b = 0; b < p.B->total(); ++b) {
      SparseVec l = left(imz[k], b);
      if (!l.empty()) p.lact[{k, b}] = l;
      SparseVec r = right(b, imz[k]);
      if (!r.empty()) p.ract[{b, k}] = r;
    }
}

}  // namespace

std::vector<std::string> catalogue_names() { return {"exterior:1", "exterior:2", "exterior:3", "dual", "poly:2", "acyclic"}; }

Dga catalogue_dga(const std::string& name) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  int arg = 0;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      arg = std::stoi(name.substr(colon + 1), &used);
      if (used != name.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "bad catalogue parameter in '" + name + "'");
    }
  }
  if (kind == "exterior" && colon != std::string::npos) return exterior(arg);
  if (kind == "dual" && colon == std::string::npos) return dual_numbers();
  if (kind == "poly" && colon != std::string::npos) return truncated_poly(arg);
  if (kind == "acyclic" && colon == std::string::npos) return acyclic();
  throw Error(ErrorCode::InvalidInput, "unknown dga '" + name + "'");
}

HomotopyData gen_trivial(const Dga& a) {
  HomotopyData::Parts p;
  p.A = p.B = a.space;
  p.dA = p.dB = a.d;
  p.Y = p.Z = GradedMap::identity(a.space);
  p.hA = p.hB = GradedMap::zero(a.space, a.space, -1);
  p.wedge = a.wedge;
  fill_actions(
      p, [&](const SparseVec& x, int b) { return apply2(a.wedge, x, e(b)); },
      [&](int b, const SparseVec& x) { return apply2(a.wedge, e(b), x); });
  p.provenance = {{"kind", "trivial"}, {"dga", a.name}};
  return HomotopyData(std::move(p));
}

HomotopyData gen_interval(const Dga& a) {
  const GradedSpace& A = *a.space;
  const int n = A.total();
  static const char* kname[3] = {"1", "u", "du"};
  const int kdeg[3] = {0, 0, 1};
  Basis bb;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 3; ++k) bb.add(A.label(i) + "⊗" + kname[k], A.degree_of(i) + kdeg[k]);
  SpacePtr B = bb.build();
  auto idx = [&](int i, int k) { return bb.global[3 * i + k]; };

  HomotopyData::Parts p;
  p.A = a.space;
  p.B = B;
  p.dA = a.d;
  p.wedge = a.wedge;
  p.dB = GradedMap::zero(B, B, 1);
  p.Y = GradedMap::zero(a.space, B, 0);
  p.Z = GradedMap::zero(B, a.space, 0);
  p.hA = GradedMap::zero(a.space, a.space, -1);
  p.hB = GradedMap::zero(B, B, -1);
  for (int i = 0; i < n; ++i) {
    const Scalar s = sign_of(A.degree_of(i));
    for (int k = 0; k < 3; ++k)
      for (const auto& [j, c] : a.d.apply(i)) p.dB.add(idx(j, k), idx(i, k), c);
    p.dB.add(idx(i, 2), idx(i, 1), s);
    p.Y.set(idx(i, 0), i, 1);
    p.Z.set(i, idx(i, 0), 1);
    p.hB.set(idx(i, 1), idx(i, 2), s);
  }
  auto tensor_k = [&](const SparseVec& av, int k) {
    SparseVec out;
    for (const auto& [j, c] : av) out.emplace_back(idx(j, k), c);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  };
  fill_actions(
      p,
      [&](const SparseVec& x, int b) {
        int i = b, k = 0;
        for (int ii = 0; ii < n; ++ii)
          for (int kk = 0; kk < 3; ++kk)
            if (idx(ii, kk) == b) i = ii, k = kk;
        return tensor_k(apply2(a.wedge, x, e(i)), k);
      },
      [&](int b, const SparseVec& x) {
        int i = b, k = 0;
        for (int ii = 0; ii < n; ++ii)
          for (int kk = 0; kk < 3; ++kk)
            if (idx(ii, kk) == b) i = ii, k = kk;
        SparseVec out;
        for (const auto& [j, c] : x) axpy(out, c * sign_of(kdeg[k] * A.degree_of(j)), apply2(a.wedge, e(i), e(j)));
        return tensor_k(out, k);
      });
  p.provenance = {{"kind", "interval"}, {"dga", a.name}};
  return HomotopyData(std::move(p));
}

HomotopyData gen_split(const Dga& a) {
  const GradedSpace& A0 = *a.space;
  Basis bb;
  for (int i = 0; i < A0.total(); ++i) bb.add(A0.label(i), A0.degree_of(i));
  const int f = bb.add("f", 0);
  const int x = bb.add("x", -1);
  SpacePtr S = bb.build();
  auto g = [&](int local) { return bb.global[local]; };

  HomotopyData::Parts p;
  p.A = p.B = S;
  p.dA = GradedMap::zero(S, S, 1);
  p.wedge = MultiMap::zero(S, S, 2, 0);
  for (int i = 0; i < A0.total(); ++i)
    for (const auto& [j, c] : a.d.apply(i)) p.dA.add(g(j), g(i), c);
  p.dA.add(g(f), g(x), 1);
  for (const auto& [key, v] : a.wedge.entries) {
    auto t = unpack_tuple(key, 2);
    SparseVec w;
    for (const auto& [j, c] : v) w.emplace_back(g(j), c);
    p.wedge.add({g(t[0]), g(t[1])}, w);
  }
  p.wedge.add({g(f), g(f)}, e(g(f)));
  p.wedge.add({g(f), g(x)}, e(g(x)));
  p.wedge.add({g(x), g(f)}, e(g(x)));
  p.dB = p.dA;
  p.Z = GradedMap::identity(S);
  p.Y = GradedMap::zero(S, S, 0);
  for (int i = 0; i < A0.total(); ++i) p.Y.set(g(i), g(i), 1);
  p.hA = GradedMap::zero(S, S, -1);
  p.hA.set(g(x), g(f), 1);
  p.hB = p.hA;
  const MultiMap w = p.wedge;
  fill_actions(
      p, [&](const SparseVec& v, int b) { return apply2(w, v, e(b)); },
      [&](int b, const SparseVec& v) { return apply2(w, e(b), v); });
  p.provenance = {{"kind", "split"}, {"dga", a.name}};
  return HomotopyData(std::move(p));
}

namespace {

/// One odd coordinate: forms θ^ε dθ^k and integral forms θδ^{(k)}, δ^{(j)}, all with their weights.
struct Factor {
  struct Elem {
    std::string label;
    int degree;
    int weight;
  };
  std::vector<Elem> a, b;
  std::map<std::pair<int, int>, std::pair<int, Scalar>> prod;  // a-index pair -> (a-index, coeff)
  std::map<int, std::pair<int, Scalar>> da, iota, db, mu;     // single-term linear maps
  int a_unit = 0, b_top = 0;
};

Factor make_factor(int cutoff, const std::string& th) {
  Factor F;
  std::map<std::pair<int, int>, int> aidx;  // (eps, k)
  for (int w = 0; w <= cutoff; ++w)
    for (int eps = 0; eps <= 1; ++eps) {
      int k = w - eps;
      if (k < 0) continue;
      std::string lab;
      if (eps) lab += th;
      if (k == 1) lab += "d" + th;
      if (k > 1) lab += "d" + th + "^" + std::to_string(k);
      if (lab.empty()) lab = "1";
      aidx[{eps, k}] = static_cast<int>(F.a.size());
      F.a.push_back({lab, k, w});
    }
  for (const auto& [ek, i] : aidx)
    for (const auto& [ek2, j] : aidx) {
      if (ek.first && ek2.first) continue;
      int eps = ek.first + ek2.first, k = ek.second + ek2.second;
      auto it = aidx.find({eps, k});
      if (it == aidx.end()) continue;
      F.prod[{i, j}] = {it->second, Scalar(sign_of(ek.second * ek2.first))};
    }
  for (const auto& [ek, i] : aidx) {
    if (ek.first == 1) F.da[i] = {aidx.at({0, ek.second + 1}), Scalar(1)};
    if (ek.first == 0 && ek.second >= 1) F.iota[i] = {aidx.at({1, ek.second - 1}), Scalar(ek.second)};
  }
  F.a_unit = aidx.at({0, 0});
  std::map<std::pair<int, int>, int> bidx;  // (has θ, order)
  for (int w = 0; w <= cutoff; ++w) {
    std::string dl = "δ" + (th == "θ" ? std::string() : th.substr(std::string("θ").size()));
    bidx[{1, w}] = static_cast<int>(F.b.size());
    F.b.push_back({th + dl + (w ? "^(" + std::to_string(w) + ")" : ""), -w, w});
    if (w >= 1) {
      bidx[{0, w - 1}] = static_cast<int>(F.b.size());
      F.b.push_back({dl + (w > 1 ? "^(" + std::to_string(w - 1) + ")" : ""), 1 - w, w});
    }
  }
  for (int k = 1; k <= cutoff; ++k) {
    F.db[bidx.at({1, k})] = {bidx.at({0, k - 1}), Scalar(-k)};
    F.mu[bidx.at({0, k - 1})] = {bidx.at({1, k}), Scalar(-1)};
  }
  F.b_top = bidx.at({1, 0});
  return F;
}

/// Multi-indices over n factors with total weight ≤ cutoff, in lexicographic order.
std::vector<std::vector<int>> multi_indices(const std::vector<Factor::Elem>& elems, int n, int cutoff) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int pos, int w) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < static_cast<int>(elems.size()); ++i)
      if (w + elems[i].weight <= cutoff) {
        cur.push_back(i);
        rec(pos + 1, w + elems[i].weight);
        cur.pop_back();
      }
  };
  rec(0, 0);
  return out;
}

}  // namespace

HomotopyData gen_grassmann_super(int n_odd, int cutoff) {
  if (n_odd < 1 || n_odd > 2) throw Error(ErrorCode::InvalidInput, "grassmann_super needs n_odd in {1, 2}");
  if (cutoff < 1 || cutoff > 3) throw Error(ErrorCode::InvalidInput, "grassmann_super needs 1 <= D <= 3");
  std::vector<Factor> fac;
  for (int v = 0; v < n_odd; ++v) fac.push_back(make_factor(cutoff, n_odd == 1 ? "θ" : "θ" + std::to_string(v + 1)));
  const auto ma = multi_indices(fac[0].a, n_odd, cutoff);
  const auto mb = multi_indices(fac[0].b, n_odd, cutoff);

  auto build = [&](const std::vector<std::vector<int>>& mi, bool is_a, std::map<std::vector<int>, int>& pos) {
    Basis bs;
    for (const auto& m : mi) {
      std::string lab;
      int deg = 0;
      for (int v = 0; v < n_odd; ++v) {
        const auto& el = is_a ? fac[v].a[m[v]] : fac[v].b[m[v]];
        lab += (v ? "⊗" : "") + el.label;
        deg += el.degree;
      }
      bs.add(lab, deg);
    }
    SpacePtr s = bs.build();
    for (std::size_t i = 0; i < mi.size(); ++i) pos[mi[i]] = bs.global[i];
    return s;
  };
  std::map<std::vector<int>, int> pa, pb;
  SpacePtr A = build(ma, true, pa);
  SpacePtr B = build(mb, false, pb);

  auto weight = [&](const std::vector<int>& m, bool is_a) {
    int w = 0;
    for (int v = 0; v < n_odd; ++v) w += is_a ? fac[v].a[m[v]].weight : fac[v].b[m[v]].weight;
    return w;
  };
  auto prefix_degree = [&](const std::vector<int>& m, int upto, bool is_a) {
    int s = 0;
    for (int v = 0; v < upto; ++v) s += is_a ? fac[v].a[m[v]].degree : fac[v].b[m[v]].degree;
    return s;
  };
  // Odd-degree single-factor operator extended as a Koszul-signed derivation.
  auto derivation = [&](GradedMap& out, const std::vector<std::vector<int>>& mi, bool is_a,
                        std::map<int, std::pair<int, Scalar>> Factor::*op, bool normalize) {
    const auto& pos = is_a ? pa : pb;
    for (const auto& m : mi) {
      int w = weight(m, is_a);
      if (normalize && w == 0) continue;
      for (int v = 0; v < n_odd; ++v) {
        const auto& table = fac[v].*op;
        auto it = table.find(m[v]);
        if (it == table.end()) continue;
        std::vector<int> m2 = m;
        m2[v] = it->second.first;
        auto t = pos.find(m2);
        if (t == pos.end()) continue;
        Scalar c = it->second.second * sign_of(prefix_degree(m, v, is_a));
        if (normalize) c /= w;
        out.add(t->second, pos.at(m), c);
      }
    }
  };

  HomotopyData::Parts p;
  p.A = A;
  p.B = B;
  p.dA = GradedMap::zero(A, A, 1);
  p.dB = GradedMap::zero(B, B, 1);
  p.hA = GradedMap::zero(A, A, -1);
  p.hB = GradedMap::zero(B, B, -1);
  derivation(p.dA, ma, true, &Factor::da, false);
  derivation(p.dB, mb, false, &Factor::db, false);
  derivation(p.hA, ma, true, &Factor::iota, true);
  derivation(p.hB, mb, false, &Factor::mu, true);
  std::vector<int> unit(n_odd), top(n_odd);
  for (int v = 0; v < n_odd; ++v) unit[v] = fac[v].a_unit, top[v] = fac[v].b_top;
  p.Y = GradedMap::zero(A, B, 0);
  p.Z = GradedMap::zero(B, A, 0);
  p.Y.set(pb.at(top), pa.at(unit), 1);
  p.Z.set(pa.at(unit), pb.at(top), 1);

  p.wedge = MultiMap::zero(A, A, 2, 0);
  for (const auto& m1 : ma)
    for (const auto& m2 : ma) {
      std::vector<int> r(n_odd);
      Scalar c(1);
      bool zero = false;
      for (int v = 0; v < n_odd && !zero; ++v) {
        auto it = fac[v].prod.find({m1[v], m2[v]});
        if (it == fac[v].prod.end()) {
          zero = true;
          break;
        }
        r[v] = it->second.first;
        c *= it->second.second;
        // Koszul sign for moving m2's factors left of m1's later factors.
        for (int u = v + 1; u < n_odd; ++u) c *= sign_of(fac[u].a[m1[u]].degree * fac[v].a[m2[v]].degree);
      }
      if (zero) continue;
      auto t = pa.find(r);
      if (t != pa.end()) p.wedge.add({pa.at(m1), pa.at(m2)}, e(t->second, c));
    }

  p.provenance = {{"kind", "grassmann_super"},
                  {"n_odd", std::to_string(n_odd)},
                  {"cutoff", std::to_string(cutoff)},
                  {"coefficients", "eigenvalue-normalized"}};
  auto fix = [&](GradedMap& h, const GradedMap& d, const GradedMap& proj, const std::string& key) {
    if ((GradedMap::identity(h.src) - proj) == differential_of(h, d)) {
      p.provenance[key] = "normalized";
    } else {
      h = synthesize_homotopy(d, proj);
      p.provenance[key] = "synthesized";
    }
  };
  fix(p.hA, p.dA, compose(p.Z, p.Y), "homotopy_A");
  fix(p.hB, p.dB, compose(p.Y, p.Z), "homotopy_B");
  // Im Z is spanned by the unit, acting by scalars.
  const int u = pa.at(unit);
  fill_actions(
      p, [&](const SparseVec& x, int b) { return scaled(e(b), coeff(x, u)); },
      [&](int b, const SparseVec& x) { return scaled(e(b), coeff(x, u)); });
  return HomotopyData(std::move(p));
}

const std::vector<std::string>& perturbable_conditions() { return condition_names(); }

HomotopyData gen_perturbed(const HomotopyData& base, std::uint64_t seed, const std::vector<std::string>& keep,
                           const std::vector<std::string>& brk) {
  const auto& names = condition_names();
  for (const auto* list : {&keep, &brk})
    for (const auto& c : *list)
      if (std::find(names.begin(), names.end(), c) == names.end())
        throw Error(ErrorCode::InvalidInput, "unknown condition '" + c + "'");
  for (const auto& c : keep)
    if (std::find(brk.begin(), brk.end(), c) != brk.end())
      throw Error(ErrorCode::InvalidInput, "condition '" + c + "' both kept and broken");

  const HomotopyData::Parts& P = base.parts();
  const std::set<std::string> hb_dependent = {"SC_left", "SC_right", "SC_sq", "WSC"};
  for (const auto& c : keep)
    if (!hb_dependent.count(c) && !base.flag(c))
      throw Error(ErrorCode::BreakUnsatisfiable, c + " is false and does not depend on h_B");
  for (const auto& c : brk)
    if (!hb_dependent.count(c) && base.flag(c))
      throw Error(ErrorCode::BreakUnsatisfiable, c + " is true and does not depend on h_B");

  HomCoordinates cm1 = hom_coordinates(P.B, P.B, 1, -1);
  HomCoordinates c0 = hom_coordinates(P.B, P.B, 1, 0);
  SparseMatrix M = differential_matrix(cm1, c0, P.dB, P.dB);
  DenseVec rhs(M.rows.size());

  // Each kept linear condition L(h_B + τ) = 0 becomes L(τ) = -L(h_B).
  auto impose = [&](const std::function<GradedMap(const GradedMap&)>& L) {
    std::vector<Matrix> cols;
    for (int c = 0; c < cm1.size(); ++c) cols.push_back(L(cm1.unit(c).to_graded()).global_matrix());
    Matrix target = L(P.hB).global_matrix();
    for (int r = 0; r < target.rows; ++r)
      for (int q = 0; q < target.cols; ++q) {
        SparseVec row;
        for (int c = 0; c < cm1.size(); ++c)
          if (!is_zero(cols[c].at(r, q))) row.emplace_back(c, cols[c].at(r, q));
        if (row.empty() && is_zero(target.at(r, q))) continue;
        M.rows.push_back(row);
        rhs.push_back(-target.at(r, q));
      }
  };
  const GradedMap YZ = compose(P.Y, P.Z);
  for (const auto& c : keep) {
    if (c == "SC_left") impose([&](const GradedMap& t) { return compose(t, P.Y); });
    if (c == "SC_right") impose([&](const GradedMap& t) { return compose(P.Z, t); });
    if (c == "WSC") {
      impose([&](const GradedMap& t) { return compose(YZ, t); });
      impose([&](const GradedMap& t) { return compose(t, YZ); });
    }
  }
  auto particular = solve(M, rhs);
  if (!particular) throw Error(ErrorCode::EmptyPerturbationSpace, "constraints on τ are inconsistent");
  std::vector<SparseVec> kernel = kernel_basis(M);
  SparseVec tau0 = to_sparse(*particular);
  if (kernel.empty() && tau0.empty()) throw Error(ErrorCode::EmptyPerturbationSpace, "constraints force τ = 0");

  std::mt19937_64 rng(seed);
  const int tries = kernel.empty() ? 1 : 200;
  for (int attempt = 0; attempt < tries; ++attempt) {
    SparseVec tau = tau0;
    for (const auto& k : kernel) {
      long c = static_cast<long>(rng() % 5) - 2;
      if (c) axpy(tau, Scalar(c), k);
    }
    if (tau.empty()) continue;
    GradedMap t = cm1.from_vec(to_dense(tau, cm1.size())).to_graded();
    HomotopyData::Parts q = P;
    q.hB = P.hB + t;
    ConditionReport r = compute_conditions(q);
    bool ok = true;
    for (const auto& c : keep) ok = ok && r.get(c);
    for (const auto& c : brk) ok = ok && !r.get(c);
    if (!ok) continue;
    auto joined = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
      return s;
    };
    q.provenance["base"] = P.provenance.count("kind") ? P.provenance.at("kind") : "unknown";
    q.provenance["kind"] = "perturbed";
    q.provenance["seed"] = std::to_string(seed);
    q.provenance["keep"] = joined(keep);
    q.provenance["break"] = joined(brk);
    return HomotopyData(std::move(q));
  }
  throw Error(ErrorCode::BreakUnsatisfiable, "no sampled perturbation met the keep/break request");
}

HomotopyData gen_perturbed_hA(const HomotopyData& base, std::uint64_t seed) {
  const HomotopyData::Parts& P = base.parts();
  HomCoordinates cm1 = hom_coordinates(P.A, P.A, 1, -1);
  HomCoordinates c0 = hom_coordinates(P.A, P.A, 1, 0);
  std::vector<SparseVec> kernel = kernel_basis(differential_matrix(cm1, c0, P.dA, P.dA));
  if (kernel.empty()) throw Error(ErrorCode::EmptyPerturbationSpace, "no closed degree -1 maps on A");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    SparseVec tau;
    for (const auto& k : kernel) {
      long c = static_cast<long>(rng() % 5) - 2;
      if (c) axpy(tau, Scalar(c), k);
    }
    if (tau.empty()) continue;
    HomotopyData::Parts q = P;
    q.hA = P.hA + cm1.from_vec(to_dense(tau, cm1.size())).to_graded();
    if (compose(q.hA, q.Z).is_zero()) continue;
    q.provenance["base"] = P.provenance.count("kind") ? P.provenance.at("kind") : "unknown";
    q.provenance["kind"] = "perturbed_hA";
    q.provenance["seed"] = std::to_string(seed);
    return HomotopyData(std::move(q));
  }
  throw Error(ErrorCode::BreakUnsatisfiable, "no sampled perturbation gave h_A Z != 0");
}

}  // namespace hominduce
