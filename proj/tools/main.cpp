// hominduce command-line driver.
#include "io.hpp"

#include "hominduce/errors.hpp"
#include "hominduce/instances.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hominduce;
using io::CheckResult;
using io::Json;
using io::Report;

namespace {

struct Options {
  std::string kind, dga = "exterior:1", base, input, method = "hmi-sc", output, format = "json";
  std::string k1 = "1", k2 = "1";
  int N = kDefaultArity;
  std::uint64_t seed = 1;
  std::vector<std::string> keep, brk;
  int n_odd = 1, cutoff = 1;
  bool timing = false;
};

std::vector<std::string> split_list(const std::vector<std::string>& v) {
  std::vector<std::string> out;
  for (const auto& item : v) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

void emit(const std::string& text, const Options& o) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + o.output);
  out << text;
}

int emit_report(const Report& r, const Options& o) {
  emit(o.format == "text" ? io::report_to_text(r) : io::report_to_json(r).dump(2) + "\n", o);
  return r.all_pass() ? 0 : 1;
}

HomotopyData load_instance(const std::string& path) {
  HomotopyData inst = io::instance_from_json(io::read_json(path));
  io::check_size(inst);
  return inst;
}

std::string method_name(const std::string& m) {
  if (m == "ht") return "ht";
  if (m == "hmi-sc") return "hmi_sc";
  if (m == "hmi-general") return "hmi_general";
  throw Error(ErrorCode::InvalidInput, "unknown method '" + m + "' (ht, hmi-sc, hmi-general)");
}

AInftyTower build_tower(const HomotopyData& inst, const std::string& method, const Scalar& k1, const Scalar& k2, int N) {
  const std::string m = method_name(method);
  if (m == "ht") return ht_tower(inst, N);
  try {
    if (m == "hmi_sc") return hmi_tower_sc(inst, k1, k2, N);
    return hmi_tower_general(inst, k1, k2, N);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionFailed) throw;
    const char* thm = m == "hmi_sc" ? "Homotopy Module-Induction with SC"
                                    : "Homotopy Module-Induced A-infinity-Algebra (WSC or k1 = -k2)";
    std::string msg = e.what();
    msg.erase(0, msg.find(": ") + 2);
    throw Error(ErrorCode::PreconditionFailed, msg + "; hypothesis of theorem '" + thm + "'");
  }
}

bool full_sc(const HomotopyData& inst) { return inst.flag("SC_left") && inst.flag("SC_right") && inst.flag("SC_sq"); }

int cmd_gen(const Options& o) {
  HomotopyData inst = [&]() -> HomotopyData {
    if (o.kind == "trivial") return gen_trivial(catalogue_dga(o.dga));
    if (o.kind == "interval") return gen_interval(catalogue_dga(o.dga));
    if (o.kind == "split") return gen_split(catalogue_dga(o.dga));
    if (o.kind == "grassmann") return gen_grassmann_super(o.n_odd, o.cutoff);
    if (o.kind == "perturbed" || o.kind == "perturbed-hA") {
      if (o.base.empty()) throw Error(ErrorCode::InvalidInput, o.kind + " needs --base");
      HomotopyData base = load_instance(o.base);
      if (o.kind == "perturbed-hA") return gen_perturbed_hA(base, o.seed);
      return gen_perturbed(base, o.seed, split_list(o.keep), split_list(o.brk));
    }
    throw Error(ErrorCode::InvalidInput,
                "unknown generator '" + o.kind + "' (trivial, interval, split, grassmann, perturbed, perturbed-hA)");
  }();
  io::check_size(inst);
  emit(io::instance_to_json(inst).dump(2) + "\n", o);
  return 0;
}

Report tower_report(const AInftyTower& t) {
  Report r;
  r.command = "tower";
  for (int n = 1; n <= t.N; ++n)
    r.checks.push_back({"A-infinity relation at arity " + std::to_string(n), a_infinity_defect(t.m, n).is_zero(), ""});
  Json vanish = Json::array();
  for (const auto& [n, m] : t.m)
    if (n >= 3 && m.is_zero()) vanish.push_back(n);
  r.data["vanishing_products"] = vanish;
  return r;
}

int cmd_tower(const Options& o) {
  HomotopyData inst = load_instance(o.input);
  AInftyTower t = build_tower(inst, o.method, parse_scalar(o.k1), parse_scalar(o.k2), o.N);
  if (o.format == "text") return emit_report(tower_report(t), o);
  emit(io::tower_to_json(t, inst.B()).dump(2) + "\n", o);
  return 0;
}

int cmd_verify(const Options& o) {
  SpacePtr B;
  AInftyTower t = io::tower_from_json(io::read_json(o.input), &B);
  Report r = tower_report(t);
  r.command = "verify";
  r.data["method"] = t.method;
  return emit_report(r, o);
}

int cmd_obstruction(const Options& o) {
  HomotopyData inst = load_instance(o.input);
  Report r;
  r.command = "obstruction";
  HomObstruction ob = obstruction_class(inst);
  r.checks.push_back({"Z hB - hA Z closed", true, ""});
  r.checks.push_back({"obstruction certificate re-verifies", reverify(ob, inst), ""});
  ClassCertificate w = wedge_class(inst);
  r.checks.push_back({"wedge class certificate re-verifies", reverify(w, inst.wedge(), inst.dA(), inst.dA()), ""});
  r.data["obstruction_class_zero"] = ob.class_zero();
  r.data["obstruction_representative_zero"] = ob.representative.is_zero();
  r.data["wedge_class_zero"] = w.zero;
  if (ob.class_zero()) r.data["obstruction_primitive"] = io::multimap_to_json(*ob.certificate.primitive);
  return emit_report(r, o);
}

int cmd_massey(const Options& o) {
  HomotopyData inst = load_instance(o.input);
  const Scalar k1 = parse_scalar(o.k1), k2 = parse_scalar(o.k2);
  AInftyTower t = build_tower(inst, full_sc(inst) ? "hmi-sc" : "hmi-general", k1, k2, o.N);
  MasseyTower M = massey_transfer(inst, t, o.N);
  Report r;
  r.command = "massey";
  for (int n = 1; n <= o.N; ++n) {
    r.checks.push_back({"Massey relation at arity " + std::to_string(n), a_infinity_defect(M.M, n).is_zero(), ""});
    r.checks.push_back({"Massey ht relation at arity " + std::to_string(n), a_infinity_defect(M.M_ht, n).is_zero(), ""});
  }
  r.checks.push_back({"M1 = 0", M.M.at(1).is_zero(), ""});
  r.data["method"] = t.method;
  r.data["H_dims"] = M.model.H->dims();
  r.data["H_g_min"] = M.model.H->g_min();
  r.data["M2_zero"] = M.M.at(2).is_zero();
  r.data["M2_equals_k1_plus_k2_times_M2ht"] = M.M.at(2) == (k1 + k2) * M.M_ht.at(2);
  Json products = Json::object(), products_ht = Json::object();
  for (const auto& [n, m] : M.M) products[std::to_string(n)] = io::multimap_to_json(m);
  for (const auto& [n, m] : M.M_ht) products_ht[std::to_string(n)] = io::multimap_to_json(m);
  r.data["M"] = products;
  r.data["M_ht"] = products_ht;
  r.data["notes"] = M.notes;
  return emit_report(r, o);
}

int cmd_hochschild(const Options& o) {
  HomotopyData inst = load_instance(o.input);
  DeformationReport d = check_infinitesimal_deformation(inst, parse_scalar(o.k1), parse_scalar(o.k2), o.N);
  Report r;
  r.command = "hochschild";
  AInftyTower ht = ht_tower(inst, o.N);
  Cochain dd = hochschild_differential(d.dH, ht, o.N);
  bool nil = true;
  for (const auto& [n, c] : dd) nil = nil && c.is_zero();
  r.checks.push_back({"dH dH = 0 through arity " + std::to_string(o.N), nil, ""});
  std::string verdict = d.trivially_zero          ? "deformation trivially zero"
                        : d.first_nonzero == 0 ? "dH mu = 0 through the computed arities"
                                               : "not an infinitesimal deformation";
  r.data["verdict"] = verdict;
  r.data["first_nonzero_arity"] = d.first_nonzero;
  r.data["witness"] = d.witness;
  return emit_report(r, o);
}

int cmd_conditions(const Options& o) {
  HomotopyData inst = load_instance(o.input);
  Report r;
  r.command = "conditions";
  for (const auto& a : inst.axioms()) r.checks.push_back({a.name, a.holds, a.witness});
  Json flags = Json::object();
  for (const auto& c : inst.conditions().flags)
    flags[c.name] = c.holds ? Json("true") : Json("false: " + c.witness);
  r.data["flags"] = flags;
  r.data["hA_Z_zero"] = compose(inst.hA(), inst.Z()).is_zero();
  return emit_report(r, o);
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput:
    case ErrorCode::SizeLimit:
    case ErrorCode::SpaceMismatch:
    case ErrorCode::ArityMismatch:
    case ErrorCode::TypeCheckFailure:
    case ErrorCode::AxiomViolation:
    case ErrorCode::NotADifferential:
    case ErrorCode::TruncationTooTight:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact A-infinity towers from homotopy data with bimodule structure"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool coefficients) {
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", o.timing, "Append wall-clock time to stderr");
    if (coefficients) {
      sub->add_option("--k1", o.k1, "Coefficient k1 (p/q)");
      sub->add_option("--k2", o.k2, "Coefficient k2 (p/q)");
      sub->add_option("-N,--max-arity", o.N, "Highest arity")->check(CLI::Range(1, kMaxTowerArity));
    }
  };
  auto* gen = app.add_subcommand("gen", "Generate a validated instance");
  gen->add_option("kind", o.kind, "trivial | interval | split | grassmann | perturbed | perturbed-hA")->required();
  gen->add_option("--dga", o.dga, "Catalogue dga (exterior:n, dual, poly:D, acyclic)");
  gen->add_option("--base", o.base, "Base instance for perturbations");
  gen->add_option("--seed", o.seed, "Perturbation seed");
  gen->add_option("--keep", o.keep, "Conditions to keep (comma separated)");
  gen->add_option("--break", o.brk, "Conditions to break (comma separated)");
  gen->add_option("--n-odd", o.n_odd, "Odd generators for grassmann")->check(CLI::Range(1, 2));
  gen->add_option("--cutoff", o.cutoff, "Weight cutoff for grassmann")->check(CLI::Range(1, 3));
  common(gen, false);

  auto* tower = app.add_subcommand("tower", "Build and certify a tower");
  tower->add_option("instance", o.input)->required();
  tower->add_option("--method", o.method, "ht | hmi-sc | hmi-general");
  common(tower, true);

  auto* verify = app.add_subcommand("verify", "Recheck the A-infinity relations of a tower file");
  verify->add_option("tower", o.input)->required();
  common(verify, false);

  auto* obstruction = app.add_subcommand("obstruction", "Obstruction class of Z hB - hA Z and class of the wedge");
  obstruction->add_option("instance", o.input)->required();
  common(obstruction, false);

  auto* massey = app.add_subcommand("massey", "Transfer both towers to cohomology");
  massey->add_option("instance", o.input)->required();
  common(massey, true);

  auto* hoch = app.add_subcommand("hochschild", "Infinitesimal deformation check");
  hoch->add_option("instance", o.input)->required();
  common(hoch, true);

  auto* cond = app.add_subcommand("conditions", "Axioms and side-condition flags");
  cond->add_option("instance", o.input)->required();
  common(cond, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (*gen) rc = cmd_gen(o);
    else if (*tower) rc = cmd_tower(o);
    else if (*verify) rc = cmd_verify(o);
    else if (*obstruction) rc = cmd_obstruction(o);
    else if (*massey) rc = cmd_massey(o);
    else if (*hoch) rc = cmd_hochschild(o);
    else if (*cond) rc = cmd_conditions(o);
  } catch (const Error& e) {
    std::cerr << "hominduce: " << e.what() << "\n";
    rc = exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "hominduce: " << e.what() << "\n";
    rc = 2;
  }
  if (o.timing)
    std::cerr << "elapsed "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return rc;
}
