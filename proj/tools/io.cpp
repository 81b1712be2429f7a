#include "io.hpp"

#include "hominduce/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hominduce::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Scalar as_scalar(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) bad("scalar must be a \"p/q\" string");
  return parse_scalar(j.get<std::string>());
}

Json vec_to_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [i, c] : v) out.push_back(Json::array({i, to_string(c)}));
  return out;
}

SparseVec vec_from_json(const Json& j, int dim) {
  if (!j.is_array()) bad("vector must be an array of [index, value] pairs");
  SparseVec v;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) bad("vector entry must be [index, value]");
    const int i = as_int(e[0], "vector index");
    if (i < 0 || i >= dim) bad("vector index out of range");
    axpy(v, as_scalar(e[1]), SparseVec{{i, Scalar(1)}});
  }
  return v;
}

Json bilinear_to_json(const std::map<std::pair<int, int>, SparseVec>& t) {
  Json out = Json::array();
  for (const auto& [k, v] : t) out.push_back(Json::array({k.first, k.second, vec_to_json(v)}));
  return out;
}

std::map<std::pair<int, int>, SparseVec> bilinear_from_json(const Json& j, int left, int right, int out_dim) {
  if (!j.is_array()) bad("action table must be an array");
  std::map<std::pair<int, int>, SparseVec> t;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) bad("action entry must be [i, j, vector]");
    const int a = as_int(e[0], "action index"), b = as_int(e[1], "action index");
    if (a < 0 || a >= left || b < 0 || b >= right) bad("action index out of range");
    SparseVec v = vec_from_json(e[2], out_dim);
    if (!v.empty()) t[{a, b}] = std::move(v);
  }
  return t;
}

}  // namespace

int max_dim() {
  const char* env = std::getenv("HOMINDUCE_MAX_DIM");
  if (!env || !*env) return kDefaultMaxDim;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end || v <= 0) bad("HOMINDUCE_MAX_DIM must be a positive integer");
  return static_cast<int>(v);
}

void check_size(const HomotopyData& inst) {
  const int cap = max_dim();
  for (const auto& [name, s] : {std::pair{"A", inst.A()}, std::pair{"B", inst.B()}})
    if (s->total() > cap)
      throw Error(ErrorCode::SizeLimit, std::string(name) + " has dimension " + std::to_string(s->total()) +
                                            ", above HOMINDUCE_MAX_DIM = " + std::to_string(cap));
}

Json space_to_json(const GradedSpace& s) { return Json{{"g_min", s.g_min()}, {"labels", s.labels()}}; }

SpacePtr space_from_json(const Json& j) {
  const int g = as_int(field(j, "g_min"), "g_min");
  const Json& l = field(j, "labels");
  if (!l.is_array()) bad("labels must be an array of arrays");
  std::vector<std::vector<std::string>> labels;
  for (const auto& row : l) {
    if (!row.is_array()) bad("labels must be an array of arrays");
    std::vector<std::string> r;
    for (const auto& x : row) {
      if (!x.is_string()) bad("labels must be strings");
      r.push_back(x.get<std::string>());
    }
    labels.push_back(std::move(r));
  }
  return make_space(GradedSpace(g, std::move(labels)));
}

Json map_to_json(const GradedMap& f) {
  Json blocks = Json::object();
  for (const auto& [g, m] : f.blocks) {
    if (m.is_zero()) continue;
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols; ++c) row.push_back(to_string(m.at(r, c)));
      rows.push_back(std::move(row));
    }
    blocks[std::to_string(g)] = std::move(rows);
  }
  return Json{{"degree", f.degree}, {"blocks", blocks}};
}

GradedMap map_from_json(const Json& j, const SpacePtr& src, const SpacePtr& tgt) {
  GradedMap f = GradedMap::zero(src, tgt, as_int(field(j, "degree"), "degree"));
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_object()) bad("blocks must be an object keyed by source degree");
  for (const auto& [key, rows] : blocks.items()) {
    int g = 0;
    try {
      g = std::stoi(key);
    } catch (const std::exception&) {
      bad("block key '" + key + "' is not a degree");
    }
    auto it = f.blocks.find(g);
    if (it == f.blocks.end()) bad("block for degree " + key + " falls outside the windows");
    Matrix& m = it->second;
    if (!rows.is_array() || static_cast<int>(rows.size()) != m.rows) bad("block " + key + " has the wrong row count");
    for (int r = 0; r < m.rows; ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != m.cols) bad("block " + key + " has the wrong column count");
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = as_scalar(rows[r][c]);
    }
  }
  return f;
}

Json multimap_to_json(const MultiMap& m) {
  Json entries = Json::array();
  for (const auto& [k, v] : m.entries) entries.push_back(Json::array({unpack_tuple(k, m.arity), vec_to_json(v)}));
  return Json{{"arity", m.arity}, {"degree", m.degree}, {"entries", entries}};
}

MultiMap multimap_from_json(const Json& j, const SpacePtr& src, const SpacePtr& tgt) {
  const int arity = as_int(field(j, "arity"), "arity");
  if (arity < 1 || arity > kMaxTowerArity) bad("arity out of range");
  MultiMap m = MultiMap::zero(src, tgt, arity, as_int(field(j, "degree"), "degree"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) bad("entries must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_array() || static_cast<int>(e[0].size()) != arity)
      bad("entry must be [[inputs...], vector]");
    std::vector<int> t;
    int deg = 0;
    for (const auto& x : e[0]) {
      const int i = as_int(x, "input index");
      if (i < 0 || i >= src->total()) bad("input index out of range");
      deg += src->degree_of(i);
      t.push_back(i);
    }
    SparseVec v = vec_from_json(e[1], tgt->total());
    for (const auto& [o, c] : v)
      if (tgt->degree_of(o) != deg + m.degree) bad("entry is not homogeneous of the stated degree");
    m.add(t, v);
  }
  return m;
}

Json instance_to_json(const HomotopyData& inst) {
  const auto& p = inst.parts();
  Json flags = Json::object();
  for (const auto& c : inst.conditions().flags) flags[c.name] = c.holds;
  return Json{{"schema_version", kSchemaVersion},
              {"provenance", p.provenance},
              {"spaces", {{"A", space_to_json(*p.A)}, {"B", space_to_json(*p.B)}}},
              {"maps",
               {{"dA", map_to_json(p.dA)},
                {"dB", map_to_json(p.dB)},
                {"Y", map_to_json(p.Y)},
                {"Z", map_to_json(p.Z)},
                {"hA", map_to_json(p.hA)},
                {"hB", map_to_json(p.hB)}}},
              {"wedge", multimap_to_json(p.wedge)},
              {"lact", bilinear_to_json(p.lact)},
              {"ract", bilinear_to_json(p.ract)},
              {"flags", flags}};
}

HomotopyData instance_from_json(const Json& j) {
  if (as_int(field(j, "schema_version"), "schema_version") != kSchemaVersion) bad("unsupported schema_version");
  HomotopyData::Parts p;
  const Json& spaces = field(j, "spaces");
  p.A = space_from_json(field(spaces, "A"));
  p.B = space_from_json(field(spaces, "B"));
  const int cap = max_dim();
  if (p.A->total() > cap || p.B->total() > cap)
    throw Error(ErrorCode::SizeLimit, "instance exceeds HOMINDUCE_MAX_DIM = " + std::to_string(cap));
  const Json& maps = field(j, "maps");
  p.dA = map_from_json(field(maps, "dA"), p.A, p.A);
  p.dB = map_from_json(field(maps, "dB"), p.B, p.B);
  p.Y = map_from_json(field(maps, "Y"), p.A, p.B);
  p.Z = map_from_json(field(maps, "Z"), p.B, p.A);
  p.hA = map_from_json(field(maps, "hA"), p.A, p.A);
  p.hB = map_from_json(field(maps, "hB"), p.B, p.B);
  p.wedge = multimap_from_json(field(j, "wedge"), p.A, p.A);
  // Action tables index Im Z by position; the validator rejects out-of-range rows.
  p.lact = bilinear_from_json(field(j, "lact"), p.A->total(), p.B->total(), p.B->total());
  p.ract = bilinear_from_json(field(j, "ract"), p.B->total(), p.A->total(), p.B->total());
  if (j.contains("provenance")) {
    if (!j["provenance"].is_object()) bad("provenance must be an object");
    for (const auto& [k, v] : j["provenance"].items()) {
      if (!v.is_string()) bad("provenance values must be strings");
      p.provenance[k] = v.get<std::string>();
    }
  }
  HomotopyData inst(std::move(p));
  if (j.contains("flags")) {
    const Json& f = j["flags"];
    if (!f.is_object()) bad("flags must be an object");
    for (const auto& [k, v] : f.items()) {
      if (!v.is_boolean()) bad("flag values must be booleans");
      if (inst.conditions().get(k) != v.get<bool>()) bad("stored flag " + k + " disagrees with the data");
    }
  }
  return inst;
}

Json tower_to_json(const AInftyTower& t, const SpacePtr& B) {
  Json products = Json::object(), exprs = Json::object(), certs = Json::object();
  for (const auto& [n, m] : t.m) products[std::to_string(n)] = multimap_to_json(m);
  for (const auto& [n, e] : t.expr) exprs[std::to_string(n)] = e.render();
  for (int n = 1; n <= t.N; ++n) certs[std::to_string(n)] = a_infinity_defect(t.m, n).is_zero();
  return Json{{"schema_version", kSchemaVersion},
              {"method", t.method},
              {"k1", to_string(t.k1)},
              {"k2", to_string(t.k2)},
              {"N", t.N},
              {"convention", "sum (-1)^(r+st) m(1^r x m_s x 1^t) = 0"},
              {"space", space_to_json(*B)},
              {"products", products},
              {"expressions", exprs},
              {"defect_zero", certs},
              {"notes", t.notes}};
}

AInftyTower tower_from_json(const Json& j, SpacePtr* B) {
  if (as_int(field(j, "schema_version"), "schema_version") != kSchemaVersion) bad("unsupported schema_version");
  AInftyTower t;
  const Json& method = field(j, "method");
  if (!method.is_string()) bad("method must be a string");
  t.method = method.get<std::string>();
  t.k1 = as_scalar(field(j, "k1"));
  t.k2 = as_scalar(field(j, "k2"));
  t.N = as_int(field(j, "N"), "N");
  if (t.N < 1 || t.N > kMaxTowerArity) bad("N out of range");
  *B = space_from_json(field(j, "space"));
  if ((*B)->total() > max_dim()) throw Error(ErrorCode::SizeLimit, "tower space exceeds HOMINDUCE_MAX_DIM");
  const Json& products = field(j, "products");
  if (!products.is_object()) bad("products must be an object keyed by arity");
  for (const auto& [key, pj] : products.items()) {
    MultiMap m = multimap_from_json(pj, *B, *B);
    if (std::to_string(m.arity) != key) bad("product key " + key + " does not match its arity");
    if (m.degree != 2 - m.arity) bad("product m" + key + " must have degree 2 - n");
    t.m.emplace(m.arity, std::move(m));
  }
  for (int n = 1; n <= t.N; ++n)
    if (!t.m.count(n)) bad("tower lacks m" + std::to_string(n));
  return t;
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"command", r.command}, {"status", r.all_pass() ? "pass" : "fail"}, {"checks", checks}, {"data", r.data}};
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << r.command << ": " << (r.all_pass() ? "pass" : "fail") << "\n";
  for (const auto& c : r.checks) {
    os << (c.pass ? "  PASS " : "  FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  if (!r.data.empty())
    for (const auto& [k, v] : r.data.items()) os << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  return os.str();
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path + " is not valid JSON: " + e.what());
  }
}

}  // namespace hominduce::io
