#include "fixtures.hpp"

namespace hominduce::testing {

const std::vector<KPair>& k_pairs() {
  static const std::vector<KPair> ks = {
      {Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)}, {Scalar(2), Scalar(3)},
      {Scalar(1), Scalar(-1)}};
  return ks;
}

std::string k_label(const KPair& k) { return "(" + to_string(k.first) + "," + to_string(k.second) + ")"; }

const std::vector<Fixture>& sc_fixtures() {
  static const std::vector<Fixture> fs = [] {
    std::vector<Fixture> v;
    for (const char* d : {"exterior:1", "exterior:2", "dual", "poly:2", "acyclic"})
      v.push_back({std::string("interval/") + d, gen_interval(catalogue_dga(d))});
    v.push_back({"grassmann(1,1)", gen_grassmann_super(1, 1)});
    v.push_back({"grassmann(1,2)", gen_grassmann_super(1, 2)});
    v.push_back({"grassmann(2,1)", gen_grassmann_super(2, 1)});
    return v;
  }();
  return fs;
}

const std::vector<Fixture>& no_condition_fixtures() {
  static const std::vector<Fixture> fs = [] {
    std::vector<Fixture> v;
    const HomotopyData base = gen_interval(catalogue_dga("exterior:1"));
    for (std::uint64_t s = 1; s <= 3; ++s)
      v.push_back({"perturbed/exterior:1/seed" + std::to_string(s),
                   gen_perturbed(base, s, {}, {"SC_left", "SC_right", "SC_sq", "WSC"})});
    return v;
  }();
  return fs;
}

const std::vector<Fixture>& wsc_only_fixtures() {
  static const std::vector<Fixture> fs = [] {
    std::vector<Fixture> v;
    for (const char* d : {"exterior:1", "exterior:2", "dual", "poly:2", "acyclic"})
      v.push_back({std::string("split/") + d, gen_split(catalogue_dga(d))});
    return v;
  }();
  return fs;
}

const HomotopyData& interval_hA_perturbed() {
  static const HomotopyData inst = gen_perturbed_hA(gen_interval(catalogue_dga("exterior:1")), 1);
  return inst;
}

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fs = [] {
    std::vector<Fixture> v;
    for (const char* d : {"exterior:1", "dual", "poly:2", "acyclic"})
      v.push_back({std::string("trivial/") + d, gen_trivial(catalogue_dga(d))});
    for (const auto& f : sc_fixtures()) v.push_back(f);
    for (const auto& f : wsc_only_fixtures()) v.push_back(f);
    for (const auto& f : no_condition_fixtures()) v.push_back(f);
    const HomotopyData ext2 = gen_interval(catalogue_dga("exterior:2"));
    v.push_back({"perturbed/exterior:2/keepWSC-breakSC_sq", gen_perturbed(ext2, 1, {"WSC"}, {"SC_sq"})});
    v.push_back({"perturbed/poly:2/breakSC_left", gen_perturbed(gen_interval(catalogue_dga("poly:2")), 1, {}, {"SC_left"})});
    v.push_back({"perturbed-hA/exterior:1", interval_hA_perturbed()});
    v.push_back({"perturbed-hA/split/exterior:1", gen_perturbed_hA(gen_split(catalogue_dga("exterior:1")), 1)});
    v.push_back({"perturbed-hA/split/exterior:2", gen_perturbed_hA(gen_split(catalogue_dga("exterior:2")), 2)});
    return v;
  }();
  return fs;
}

}  // namespace hominduce::testing
