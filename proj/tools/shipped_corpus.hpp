#pragma once

// Files under corpus/ and the seeded results recorded next to them. Shared by
// make_corpus and the corpus test.

#include <algorithm>
#include <string>
#include <vector>

#include "normgraph/analysis.hpp"
#include "normgraph/corpus.hpp"
#include "normgraph/decode.hpp"
#include "normgraph/duality.hpp"
#include "normgraph/graphcore.hpp"
#include "normgraph/io.hpp"
#include "normgraph/minimize.hpp"

namespace normgraph::shipped {

inline constexpr std::uint64_t kRandomSeed = 20261019;
inline constexpr int kRandomCount = 10;

struct File {
  std::string name;  // without .json
  NormalRealization realization;
};

inline std::string file_name(std::string s) {
  for (auto& c : s)
    if (c == '(' || c == ')') c = '_';
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  return s;
}

// A state shared by three constraints.
inline NormalRealization bad_degree() {
  Alphabet b = Alphabet::vector_space(2, 1);
  NormalRealization r;
  r.symbols = {{"a0", b}, {"a1", b}, {"a2", b}};
  r.states = {{"s", b, std::nullopt}};
  for (int i = 0; i < 3; ++i) {
    std::string a = "a" + std::to_string(i);
    r.constraints.push_back({"c" + std::to_string(i), {a, "s"}, equality_code(b, {a, "s"})});
  }
  return r;
}

inline std::vector<File> files() {
  std::vector<File> out;
  for (const auto& e : corpus::fixtures()) {
    std::string name = e.name == "repetition3" ? "rep3" : e.name == "repetition3_padded" ? "rep3_padded" : e.name;
    out.push_back({name, e.realization});
  }
  out.push_back({"bad_degree", bad_degree()});
  using T = corpus::Topology;
  using F = corpus::Family;
  for (const auto& e : corpus::random_corpus(kRandomSeed, kRandomCount,
                                             {T::Path, T::Tree, T::Cycle, T::CyclePendant, T::Theta},
                                             {F::GF2, F::GF3, F::Z4, F::Mixed}, 0, 0.3))
    out.push_back({file_name(e.name), e.realization});
  return out;
}

struct PriorFile {
  std::string name;      // without .json
  std::string target;    // realization file it belongs to
  io::Json weights;
};

inline std::vector<PriorFile> prior_files() {
  return {
      {"rep3_priors", "rep3", io::Json{{"a0", {0.9, 0.1}}, {"a1", {0.9, 0.1}}, {"a2", {0.9, 0.1}}}},
      {"hamming74_priors", "hamming74_trellis",
       io::Json{{"a0", {0.8, 0.2}}, {"a1", {0.3, 0.7}}, {"a2", {0.9, 0.1}}, {"a3", {0.6, 0.4}},
                {"a4", {0.5, 0.5}}, {"a5", {"1/3", "2/3"}}, {"a6", {0.95, 0.05}}}},
      {"tail_biting_priors", "tail_biting_0011",
       io::Json{{"a0", {0.9, 0.1}}, {"a1", {0.7, 0.3}}, {"a2", {0.2, 0.8}}, {"a3", {0.4, 0.6}}}},
  };
}

inline io::Json orders(const NormalRealization& r) {
  io::Json out = io::Json::array();
  for (const auto& s : r.internal_states()) out.push_back(r.alphabet(s).order().str());
  return out;
}

// Deterministic results for one valid realization.
inline io::Json summary(const NormalRealization& r) {
  io::Json j;
  auto bundle = behavior_bundle(r);
  j["code_order"] = bundle.code.order().str();
  j["behavior_order"] = bundle.behavior.order().str();
  j["cyclomatic_number"] = cyclomatic_number(r);
  j["state_orders"] = orders(r);
  j["duality_verified"] = verify_duality(r).ok();
  auto oc = obs_ctrl(r);
  j["observable"] = {oc.externally_observable, oc.internally_observable, oc.totally_observable};
  j["controllable"] = {oc.externally_controllable, oc.internally_controllable, oc.totally_controllable};
  if (is_cycle_free(r)) j["minimized_state_orders"] = orders(minimize_cycle_free(r));
  return j;
}

inline io::Json golden() {
  io::Json j;
  j["random_seed"] = kRandomSeed;
  j["random_count"] = kRandomCount;
  io::Json entries = io::Json::object();
  for (const auto& f : files()) {
    if (!validate(f.realization).ok()) {
      entries[f.name] = io::Json{{"valid", false}};
      continue;
    }
    auto s = summary(f.realization);
    s["valid"] = true;
    entries[f.name] = s;
  }
  j["realizations"] = entries;
  io::Json dec = io::Json::object();
  for (const auto& p : prior_files()) {
    NormalRealization r;
    for (const auto& f : files())
      if (f.name == p.target) r = f.realization;
    if (is_cycle_free(r))
      dec[p.name] = io::weights_to_json(decode_exact(r, io::priors_exact(p.weights)).marginals);
    else
      dec[p.name] = io::weights_to_json(brute_force_app(r, io::priors_exact(p.weights)).marginals);
  }
  j["marginals"] = dec;
  return j;
}

}  // namespace normgraph::shipped
