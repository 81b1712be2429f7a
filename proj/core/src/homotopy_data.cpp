#include "hominduce/homotopy_data.hpp"

#include "hominduce/errors.hpp"
#include "hominduce/homcomplex.hpp"

#include <functional>
#include <sstream>

namespace hominduce {

namespace {

std::string render_vec(const GradedSpace& s, const SparseVec& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    os << (first ? "" : " + ") << to_string(c) << "*" << s.label(i);
    first = false;
  }
  return first ? "0" : os.str();
}

SparseVec unit_vec(int i) { return SparseVec{{i, Scalar(1)}}; }

int vec_degree(const GradedSpace& s, const SparseVec& v) { return v.empty() ? 0 : s.degree_of(v.front().first); }

Check map_is_zero(const std::string& name, const GradedMap& m) {
  Check c{name, true, ""};
  c.witness = zero_witness(m);
  c.holds = c.witness.empty();
  return c;
}

Check maps_equal(const std::string& name, const GradedMap& a, const GradedMap& b) { return map_is_zero(name, a - b); }

SparseVec bilinear(const Bilinear& op, const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) axpy(out, x * y, op.apply(i, j));
  return out;
}

Bilinear wedge_table(const MultiMap& w) {
  Bilinear bl{w.src, w.src, w.tgt, {}};
  for (const auto& [k, v] : w.entries) {
    auto t = unpack_tuple(k, 2);
    bl.table.emplace(std::make_pair(t[0], t[1]), v);
  }
  return bl;
}

}  // namespace

std::string zero_witness(const GradedMap& m) {
  for (int s = 0; s < m.src->total(); ++s) {
    SparseVec v = m.apply(s);
    if (!v.empty()) return m.src->label(s) + " -> " + render_vec(*m.tgt, v);
  }
  return "";
}

GradedMap differential_of(const GradedMap& h, const GradedMap& d) { return commutator(h, d, d); }

const std::vector<std::string>& condition_names() {
  static const std::vector<std::string> names = {"SC_left",  "SC_right", "SC_sq", "SC_left_A", "SC_right_A", "SC_sq_A",
                                                 "WSC",      "ZYZ",      "YZY",   "YZ_proj",   "ZY_proj"};
  return names;
}

bool ConditionReport::get(const std::string& name) const { return at(name).holds; }

const Check& ConditionReport::at(const std::string& name) const {
  for (const auto& c : flags)
    if (c.name == name) return c;
  throw Error(ErrorCode::InvalidInput, "unknown condition '" + name + "'");
}

std::vector<SparseVec> image_z_coordinates(const GradedMap& Z, std::vector<SparseVec>* basis) {
  const int n = Z.tgt->total();
  Matrix zm = Z.global_matrix();
  std::vector<DenseVec> img = image_basis(zm);
  std::vector<DenseVec> full = img;
  for (int i = 0; i < n && static_cast<int>(full.size()) < n; ++i) {
    DenseVec e(n);
    e[i] = 1;
    Matrix m(n, static_cast<int>(full.size()) + 1);
    for (std::size_t k = 0; k < full.size(); ++k)
      for (int r = 0; r < n; ++r) m.at(r, static_cast<int>(k)) = full[k][r];
    for (int r = 0; r < n; ++r) m.at(r, static_cast<int>(full.size())) = e[r];
    if (rank(m) == static_cast<int>(full.size()) + 1) full.push_back(e);
  }
  if (basis) {
    basis->clear();
    for (const auto& v : img) basis->push_back(to_sparse(v));
  }
  std::vector<SparseVec> coords(n);
  if (n == 0) return coords;
  Matrix q(n, n);
  for (int k = 0; k < n; ++k)
    for (int r = 0; r < n; ++r) q.at(r, k) = full[k][r];
  Matrix qinv = *inverse(q);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < static_cast<int>(img.size()); ++k)
      if (!is_zero(qinv.at(k, i))) coords[i].emplace_back(k, qinv.at(k, i));
  return coords;
}

std::vector<Check> check_axioms(const HomotopyData::Parts& p) {
  std::vector<Check> out;
  auto fail_shape = [&](const std::string& what) {
    out.push_back(Check{"shapes", false, what});
    return out;
  };
  auto shape = [](const GradedMap& m, const SpacePtr& s, const SpacePtr& t, int deg) {
    return same_space(m.src, s) && same_space(m.tgt, t) && m.degree == deg;
  };
  if (!shape(p.dA, p.A, p.A, 1)) return fail_shape("dA must be a degree +1 endomorphism of A");
  if (!shape(p.dB, p.B, p.B, 1)) return fail_shape("dB must be a degree +1 endomorphism of B");
  if (!shape(p.Y, p.A, p.B, 0)) return fail_shape("Y must map A -> B in degree 0");
  if (!shape(p.Z, p.B, p.A, 0)) return fail_shape("Z must map B -> A in degree 0");
  if (!shape(p.hA, p.A, p.A, -1)) return fail_shape("hA must be a degree -1 endomorphism of A");
  if (!shape(p.hB, p.B, p.B, -1)) return fail_shape("hB must be a degree -1 endomorphism of B");
  if (!same_space(p.wedge.src, p.A) || !same_space(p.wedge.tgt, p.A) || p.wedge.arity != 2 || p.wedge.degree != 0)
    return fail_shape("wedge must be a degree 0 product on A");
  out.push_back(Check{"shapes", true, ""});

  out.push_back(map_is_zero("dA^2 = 0", compose(p.dA, p.dA)));
  out.push_back(map_is_zero("dB^2 = 0", compose(p.dB, p.dB)));
  out.push_back(maps_equal("Y chain map", compose(p.dB, p.Y), compose(p.Y, p.dA)));
  out.push_back(maps_equal("Z chain map", compose(p.dA, p.Z), compose(p.Z, p.dB)));
  out.push_back(maps_equal("1_A - Z Y = [dA, hA]", GradedMap::identity(p.A) - compose(p.Z, p.Y),
                           differential_of(p.hA, p.dA)));
  out.push_back(maps_equal("1_B - Y Z = [dB, hB]", GradedMap::identity(p.B) - compose(p.Y, p.Z),
                           differential_of(p.hB, p.dB)));

  auto multimap_zero = [&](const std::string& name, const MultiMap& m, const GradedSpace& in) {
    Check c{name, m.is_zero(), ""};
    if (!c.holds) {
      const auto& [k, v] = *m.entries.begin();
      std::ostringstream os;
      auto t = unpack_tuple(k, m.arity);
      for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "⊗" : "") << in.label(t[i]);
      os << " -> " << render_vec(*m.tgt, v);
      c.witness = os.str();
    }
    return c;
  };
  out.push_back(multimap_zero("wedge associative",
                              koszul_apply(p.wedge, 0, p.wedge) - koszul_apply(p.wedge, 1, p.wedge), *p.A));
  out.push_back(multimap_zero("wedge Leibniz", hom_differential(p.wedge, p.dA, p.dA), *p.A));

  std::vector<SparseVec> imz;
  std::vector<SparseVec> coords = image_z_coordinates(p.Z, &imz);
  Bilinear wedge = wedge_table(p.wedge);
  // Membership test: projecting onto Im Z and back must reproduce the vector.
  auto in_imz = [&](const SparseVec& a) {
    SparseVec back;
    for (const auto& [i, x] : a)
      for (const auto& [k, y] : coords[i]) axpy(back, x * y, imz[k]);
    SparseVec diff = a;
    axpy(diff, Scalar(-1), back);
    return diff.empty();
  };
  auto imz_coords = [&](const SparseVec& a) {
    SparseVec c;
    for (const auto& [i, x] : a) axpy(c, x, coords[i]);
    return c;
  };
  auto lact = [&](const SparseVec& a, const SparseVec& b) {
    SparseVec out_v;
    for (const auto& [k, x] : imz_coords(a))
      for (const auto& [j, y] : b) {
        auto it = p.lact.find({k, j});
        if (it != p.lact.end()) axpy(out_v, x * y, it->second);
      }
    return out_v;
  };
  auto ract = [&](const SparseVec& b, const SparseVec& a) {
    SparseVec out_v;
    for (const auto& [k, x] : imz_coords(a))
      for (const auto& [j, y] : b) {
        auto it = p.ract.find({j, k});
        if (it != p.ract.end()) axpy(out_v, x * y, it->second);
      }
    return out_v;
  };
  auto label_imz = [&](int k) { return "x" + std::to_string(k) + "=" + render_vec(*p.A, imz[k]); };
  const int r = static_cast<int>(imz.size());

  for (const auto& [key, v] : p.lact) {
    if (key.first < 0 || key.first >= r || key.second < 0 || key.second >= p.B->total())
      return fail_shape("left action table indexes outside Im Z x B");
    if (!v.empty() && p.B->degree_of(v.front().first) != vec_degree(*p.A, imz[key.first]) + p.B->degree_of(key.second))
      return fail_shape("left action table is inhomogeneous");
  }
  for (const auto& [key, v] : p.ract) {
    if (key.second < 0 || key.second >= r || key.first < 0 || key.first >= p.B->total())
      return fail_shape("right action table indexes outside B x Im Z");
    if (!v.empty() && p.B->degree_of(v.front().first) != vec_degree(*p.A, imz[key.second]) + p.B->degree_of(key.first))
      return fail_shape("right action table is inhomogeneous");
  }

  Check closed{"Im Z closed under wedge", true, ""};
  for (int k = 0; k < r && closed.holds; ++k)
    for (int l = 0; l < r && closed.holds; ++l)
      if (!in_imz(bilinear(wedge, imz[k], imz[l]))) {
        closed.holds = false;
        closed.witness = label_imz(k) + ", " + label_imz(l);
      }
  out.push_back(closed);
  if (!closed.holds) return out;

  struct Law {
    std::string name;
    std::function<SparseVec(int, int, int)> lhs_minus_rhs;  // x index, y index or unused, basis index
    bool two_imz;
  };
  const GradedSpace& B = *p.B;
  auto dB = [&](const SparseVec& v) { return p.dB.apply(v); };
  auto dA = [&](const SparseVec& v) { return p.dA.apply(v); };
  auto diff = [](SparseVec a, const SparseVec& b) {
    axpy(a, Scalar(-1), b);
    return a;
  };
  std::vector<Law> laws = {
      {"left module", [&](int k, int l, int b) {
         return diff(lact(imz[k], lact(imz[l], unit_vec(b))), lact(bilinear(wedge, imz[k], imz[l]), unit_vec(b)));
       }, true},
      {"right module", [&](int k, int l, int b) {
         return diff(ract(ract(unit_vec(b), imz[k]), imz[l]), ract(unit_vec(b), bilinear(wedge, imz[k], imz[l])));
       }, true},
      {"bimodule compatibility", [&](int k, int l, int b) {
         return diff(ract(lact(imz[k], unit_vec(b)), imz[l]), lact(imz[k], ract(unit_vec(b), imz[l])));
       }, true},
      {"left action Leibniz", [&](int k, int, int b) {
         SparseVec rhs = lact(dA(imz[k]), unit_vec(b));
         axpy(rhs, sign_of(vec_degree(*p.A, imz[k])), lact(imz[k], dB(unit_vec(b))));
         return diff(dB(lact(imz[k], unit_vec(b))), rhs);
       }, false},
      {"right action Leibniz", [&](int k, int, int b) {
         SparseVec rhs = ract(dB(unit_vec(b)), imz[k]);
         axpy(rhs, sign_of(B.degree_of(b)), ract(unit_vec(b), dA(imz[k])));
         return diff(dB(ract(unit_vec(b), imz[k])), rhs);
       }, false},
      {"Z(x > b) = x ^ Z(b)", [&](int k, int, int b) {
         return diff(p.Z.apply(lact(imz[k], unit_vec(b))), bilinear(wedge, imz[k], p.Z.apply(b)));
       }, false},
      {"Z(b < x) = Z(b) ^ x", [&](int k, int, int b) {
         return diff(p.Z.apply(ract(unit_vec(b), imz[k])), bilinear(wedge, p.Z.apply(b), imz[k]));
       }, false},
  };
  for (const auto& law : laws) {
    Check c{law.name, true, ""};
    for (int k = 0; k < r && c.holds; ++k)
      for (int l = 0; l < (law.two_imz ? r : 1) && c.holds; ++l)
        for (int b = 0; b < B.total() && c.holds; ++b) {
          SparseVec d = law.lhs_minus_rhs(k, l, b);
          if (!d.empty()) {
            c.holds = false;
            c.witness = label_imz(k) + (law.two_imz ? ", " + label_imz(l) : "") + ", " + B.label(b) + " -> " +
                        render_vec(law.name.rfind("Z(", 0) == 0 ? *p.A : B, d);
          }
        }
    out.push_back(c);
  }
  // Y is a bimodule map from A (acting through Im Z) to B.
  Check yl{"Y(x ^ a) = x > Y(a)", true, ""};
  Check yr{"Y(a ^ x) = Y(a) < x", true, ""};
  for (int k = 0; k < r; ++k)
    for (int a = 0; a < p.A->total(); ++a) {
      if (yl.holds) {
        SparseVec d = diff(p.Y.apply(bilinear(wedge, imz[k], unit_vec(a))), lact(imz[k], p.Y.apply(a)));
        if (!d.empty()) {
          yl.holds = false;
          yl.witness = label_imz(k) + ", " + p.A->label(a) + " -> " + render_vec(B, d);
        }
      }
      if (yr.holds) {
        SparseVec d = diff(p.Y.apply(bilinear(wedge, unit_vec(a), imz[k])), ract(p.Y.apply(a), imz[k]));
        if (!d.empty()) {
          yr.holds = false;
          yr.witness = p.A->label(a) + ", " + label_imz(k) + " -> " + render_vec(B, d);
        }
      }
    }
  out.push_back(yl);
  out.push_back(yr);
  return out;
}

ConditionReport compute_conditions(const HomotopyData::Parts& p) {
  ConditionReport r;
  GradedMap YZ = compose(p.Y, p.Z);
  GradedMap ZY = compose(p.Z, p.Y);
  r.flags.push_back(map_is_zero("SC_left", compose(p.hB, p.Y)));
  r.flags.push_back(map_is_zero("SC_right", compose(p.Z, p.hB)));
  r.flags.push_back(map_is_zero("SC_sq", compose(p.hB, p.hB)));
  r.flags.push_back(map_is_zero("SC_left_A", compose(p.hA, p.Z)));
  r.flags.push_back(map_is_zero("SC_right_A", compose(p.Y, p.hA)));
  r.flags.push_back(map_is_zero("SC_sq_A", compose(p.hA, p.hA)));
  Check w1 = map_is_zero("WSC", compose(YZ, p.hB));
  Check w2 = map_is_zero("WSC", compose(p.hB, YZ));
  Check wsc{"WSC", w1.holds && w2.holds, !w1.holds ? "YZhB: " + w1.witness : (!w2.holds ? "hBYZ: " + w2.witness : "")};
  r.flags.push_back(wsc);
  r.flags.push_back(maps_equal("ZYZ", compose(p.Z, YZ), p.Z));
  r.flags.push_back(maps_equal("YZY", compose(YZ, p.Y), p.Y));
  r.flags.push_back(maps_equal("YZ_proj", compose(YZ, YZ), YZ));
  r.flags.push_back(maps_equal("ZY_proj", compose(ZY, ZY), ZY));
  return r;
}

HomotopyData::HomotopyData(Parts parts) : p_(std::move(parts)) {
  axioms_ = check_axioms(p_);
  for (const auto& c : axioms_)
    if (!c.holds) throw Error(ErrorCode::AxiomViolation, c.name + " fails: " + c.witness);
  build();
}

void HomotopyData::build() {
  std::vector<SparseVec> coords = image_z_coordinates(p_.Z, &imz_);
  wedge_bl_ = wedge_table(p_.wedge);
  lact_bl_ = Bilinear{p_.A, p_.B, p_.B, {}};
  ract_bl_ = Bilinear{p_.B, p_.A, p_.B, {}};
  for (int a = 0; a < p_.A->total(); ++a)
    for (const auto& [k, x] : coords[a])
      for (int b = 0; b < p_.B->total(); ++b) {
        auto il = p_.lact.find({k, b});
        if (il != p_.lact.end()) axpy(lact_bl_.table[{a, b}], x, il->second);
        auto ir = p_.ract.find({b, k});
        if (ir != p_.ract.end()) axpy(ract_bl_.table[{b, a}], x, ir->second);
      }
  for (auto* t : {&lact_bl_.table, &ract_bl_.table})
    for (auto it = t->begin(); it != t->end();) it = it->second.empty() ? t->erase(it) : std::next(it);
  flags_ = compute_conditions(p_);
  rebind();
}

void HomotopyData::rebind() {
  ops_ = Operations{p_.A,   p_.B,   &p_.dA,     &p_.dB,    &p_.Y,    &p_.Z,
                    &p_.hA, &p_.hB, &wedge_bl_, &lact_bl_, &ract_bl_};
}

HomotopyData::HomotopyData(const HomotopyData& o)
    : p_(o.p_), imz_(o.imz_), wedge_bl_(o.wedge_bl_), lact_bl_(o.lact_bl_), ract_bl_(o.ract_bl_),
      axioms_(o.axioms_), flags_(o.flags_) {
  rebind();
}

HomotopyData::HomotopyData(HomotopyData&& o) noexcept
    : p_(std::move(o.p_)), imz_(std::move(o.imz_)), wedge_bl_(std::move(o.wedge_bl_)),
      lact_bl_(std::move(o.lact_bl_)), ract_bl_(std::move(o.ract_bl_)), axioms_(std::move(o.axioms_)),
      flags_(std::move(o.flags_)) {
  rebind();
}

HomotopyData& HomotopyData::operator=(const HomotopyData& o) {
  if (this != &o) {
    HomotopyData tmp(o);
    *this = std::move(tmp);
  }
  return *this;
}

HomotopyData& HomotopyData::operator=(HomotopyData&& o) noexcept {
  p_ = std::move(o.p_);
  imz_ = std::move(o.imz_);
  wedge_bl_ = std::move(o.wedge_bl_);
  lact_bl_ = std::move(o.lact_bl_);
  ract_bl_ = std::move(o.ract_bl_);
  axioms_ = std::move(o.axioms_);
  flags_ = std::move(o.flags_);
  rebind();
  return *this;
}

HomotopyData HomotopyData::with_hB(const GradedMap& hB, const std::string& note) const {
  Parts q = p_;
  q.hB = hB;
  q.provenance["modified"] = q.provenance.count("modified") ? q.provenance["modified"] + "," + note : note;
  return HomotopyData(std::move(q));
}

HomotopyData HomotopyData::with_hA(const GradedMap& hA, const std::string& note) const {
  Parts q = p_;
  q.hA = hA;
  q.provenance["modified"] = q.provenance.count("modified") ? q.provenance["modified"] + "," + note : note;
  return HomotopyData(std::move(q));
}

namespace {
void require(const HomotopyData& inst, const std::string& flag, const std::string& op) {
  if (!inst.flag(flag))
    throw Error(ErrorCode::PreconditionFailed, op + " requires " + flag + "; witness " + inst.conditions().at(flag).witness);
}
}  // namespace

HomotopyData modify_h_right(const HomotopyData& inst) {
  require(inst, "ZYZ", "modify_h_right");
  GradedMap h = compose(differential_of(inst.hB(), inst.dB()), inst.hB());
  return inst.with_hB(h, "h_right");
}

HomotopyData modify_h_left(const HomotopyData& inst) {
  require(inst, "YZY", "modify_h_left");
  GradedMap h = compose(inst.hB(), differential_of(inst.hB(), inst.dB()));
  return inst.with_hB(h, "h_left");
}

HomotopyData modify_h_weak(const HomotopyData& inst) {
  require(inst, "YZ_proj", "modify_h_weak");
  GradedMap dh = differential_of(inst.hB(), inst.dB());
  return inst.with_hB(compose(compose(dh, inst.hB()), dh), "h_weak");
}

HomotopyData modify_h_square(const HomotopyData& inst) {
  GradedMap h = compose(compose(inst.hB(), inst.dB()), inst.hB());
  HomotopyData::Parts q = inst.parts();
  q.hB = h;
  ConditionReport c = compute_conditions(q);
  if (!c.get("WSC")) throw Error(ErrorCode::WSCLost, "h d h violates WSC: " + c.at("WSC").witness);
  return inst.with_hB(h, "h_square");
}

HomotopyData modify_hA_markl(const HomotopyData& inst) {
  require(inst, "SC_right", "modify_hA_markl");
  GradedMap h = compose(differential_of(inst.hA(), inst.dA()), inst.hA());
  return inst.with_hA(h, "hA_markl");
}

MarklBResult modify_hB_markl(const HomotopyData& inst) {
  MarklBResult r;
  r.sc_right_before = inst.flag("SC_right");
  GradedMap h = inst.hB() + compose(compose(inst.Y(), inst.hA()), inst.Z());
  HomotopyData::Parts q = inst.parts();
  q.hB = h;
  r.homotopy_identity =
      (GradedMap::identity(q.B) - compose(q.Y, q.Z)) == differential_of(h, q.dB);
  r.sc_right_after = compose(q.Z, h).is_zero();
  if (r.homotopy_identity) r.instance.emplace(inst.with_hB(h, "hB_markl"));
  return r;
}

GradedMap synthesize_homotopy(const GradedMap& d, const GradedMap& projector) {
  GradedMap target = GradedMap::identity(d.src) - projector;
  auto sol = solve_primitive(MultiMap::from_graded(target), d, d);
  if (!sol) throw Error(ErrorCode::NoSolution, "1 - projector is not a commutator [d, h]");
  return sol->to_graded();
}

}  // namespace hominduce
