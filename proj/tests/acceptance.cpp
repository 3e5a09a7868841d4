// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "fragment_support.hpp"
#include "normgraph/analysis.hpp"
#include "normgraph/corpus.hpp"
#include "normgraph/decode.hpp"
#include "normgraph/decomposition.hpp"
#include "normgraph/duality.hpp"
#include "normgraph/graphcore.hpp"
#include "normgraph/minimize.hpp"
#include "normgraph/oracle.hpp"
#include "normgraph/quotient.hpp"
#include "random_groups.hpp"

using namespace normgraph;
namespace orc = normgraph::oracle;
using T = corpus::Topology;
using F = corpus::Family;

namespace {

// Pinned sizes and tolerances.
constexpr int kDualityRealizations = 200;
constexpr int kDualityMaxCoordinates = 12;
constexpr int kAlgebraSubgroups = 1000;
constexpr std::uint64_t kAlgebraMaxAmbient = 4096;
constexpr int kFtspProducts = 500;
constexpr int kCycleFree = 100;
constexpr int kLemmaPairsPerPart = 200;
constexpr int kLemmaMaxSamples = 40000;
constexpr int kPlantedCores = 60;
constexpr int kStateTrimInstances = 100;
constexpr int kGraphMaxEdges = 12;
constexpr double kFloatTolerance = 1e-9;  // float decode vs exact, relative
constexpr double kSuiteSeconds = 60.0;

const std::vector<T> kAllTopologies{T::Path, T::Tree, T::Cycle, T::CyclePendant, T::Theta};
const std::vector<F> kAllFamilies{F::GF2, F::GF3, F::Z4, F::Mixed};

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::vector<corpus::Entry> full_corpus() {
  auto out = corpus::fixtures();
  for (auto& e : corpus::random_corpus(9001, 150, kAllTopologies, kAllFamilies, 0, 0.3)) out.push_back(std::move(e));
  for (auto& e : corpus::random_corpus(9002, 50, kAllTopologies, kAllFamilies, 1, 0.3)) out.push_back(std::move(e));
  return out;
}

std::vector<corpus::Entry> cycle_free_corpus() {
  std::vector<corpus::Entry> out;
  for (auto& e : corpus::fixtures())
    if (is_cycle_free(e.realization)) out.push_back(std::move(e));
  for (auto& e : corpus::random_corpus(9003, 130, {T::Path, T::Tree}, kAllFamilies, 0, 0.3))
    out.push_back(std::move(e));
  return out;
}

std::size_t coordinate_count(const NormalRealization& r) {
  return r.symbols.size() + r.states.size();
}

// ---------------------------------------------------------------------------

void duality_suite(Outcome& o) {
  std::map<F, int> per_family;
  int n = 0;
  std::uint64_t seed = 1;
  while (n < kDualityRealizations && seed < 40) {
    for (int b : {0, 1}) {
      auto batch = corpus::random_corpus(seed++, 40, kAllTopologies, kAllFamilies, b, 0.5);
      for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto& r = batch[i].realization;
        if (coordinate_count(r) > kDualityMaxCoordinates) continue;
        auto chk = verify_duality(r);
        o.require(chk.dual_route && chk.lemma_route, batch[i].name + " routes");
        o.require(orc::from_subgroup(chk.dual_code) == orc::orthogonal(orc::code(r)), batch[i].name + " vs enumeration");
        ++per_family[kAllFamilies[(i / kAllTopologies.size()) % kAllFamilies.size()]];
        ++n;
      }
    }
  }
  for (const auto& e : corpus::fixtures()) {
    auto chk = verify_duality(e.realization);
    o.require(chk.ok(), e.name);
    ++n;
  }
  o.require(n >= kDualityRealizations, "count");
  for (auto f : kAllFamilies) o.require(per_family[f] > 0, std::string("family ") + corpus::to_string(f));
  o.note << n << " realizations (GF2 " << per_family[F::GF2] << ", GF3 " << per_family[F::GF3] << ", Z4 "
         << per_family[F::Z4] << ", mixed " << per_family[F::Mixed] << "), both routes exact";
}

void algebra_suite(Outcome& o) {
  std::mt19937_64 rng(4242);
  int n = 0;
  while (n < kAlgebraSubgroups) {
    auto s = testing::random_space(rng, kAlgebraMaxAmbient, 5);
    CodeSubgroup a(s, testing::random_rows(rng, s)), b(s, testing::random_rows(rng, s));
    auto ea = orc::from_subgroup(a), eb = orc::from_subgroup(b);
    auto pa = orthogonal(a), pb = orthogonal(b);
    auto epa = orc::orthogonal(ea);
    o.require(orc::from_subgroup(pa) == epa, "orthogonal vs enumeration");
    o.require(orthogonal(pa) == a, "double orthogonal");
    o.require(orc::orthogonal(epa) == ea, "double orthogonal (enumeration)");
    o.require(a.order() * pa.order() == s.order(), "order product");
    o.require(ea.size() * epa.size() == *s.order().to_u64(), "order product (enumeration)");
    o.require(orthogonal(sum(a, b)) == intersect(pa, pb), "sum/intersection");
    o.require(orthogonal(intersect(a, b)) == sum(pa, pb), "intersection/sum");
    o.require(orc::orthogonal(orc::sum(ea, eb)) == orc::intersect(epa, orc::from_subgroup(pb)),
              "sum/intersection (enumeration)");
    auto labels = s.labels();
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(std::uniform_int_distribution<std::size_t>(1, labels.size())(rng));
    o.require(orthogonal(project(a, labels)) == cross_section(pa, labels), "projection/cross-section");
    o.require(orthogonal(cross_section(a, labels)) == project(pa, labels), "cross-section/projection");
    o.require(orc::orthogonal(orc::project(ea, labels)) == orc::cross_section(epa, labels),
              "projection/cross-section (enumeration)");
    o.require(orc::from_subgroup(project(a, labels)) == orc::project(ea, labels), "projection vs enumeration");
    o.require(orc::from_subgroup(cross_section(a, labels)) == orc::cross_section(ea, labels),
              "cross-section vs enumeration");
    ++n;
  }
  o.note << n << " subgroups, ambient order <= " << kAlgebraMaxAmbient;
}

// Two-constraint realization joined through the quotient alphabets.
NormalRealization interface_realization(const Ftsp& f) {
  NormalRealization r;
  const auto& space = f.interface_a.ambient();
  for (const auto& l : f.part_a) r.symbols.push_back({l, space.alphabet(l)});
  for (const auto& l : f.part_b) r.symbols.push_back({l, f.interface_b.ambient().alphabet(l)});
  const std::string q = "q";
  r.states.push_back({q, f.quot_a.alphabet(), std::nullopt});
  auto la = f.part_a;
  la.push_back(f.state_a);
  auto ca = la;
  ca.back() = q;
  r.constraints.push_back({"A", ca, relabel(f.interface_a, ca)});
  auto back = f.iso.inverse().graph(f.state_b, q);
  auto lb = f.part_b;
  lb.push_back(q);
  r.constraints.push_back({"B", lb, join(f.interface_b, back, lb)});
  return r;
}

void ftsp_suite(Outcome& o) {
  std::mt19937_64 rng(555);
  int n = 0;
  while (n < kFtspProducts) {
    auto s = testing::random_space(rng, 1024);
    if (s.size() < 2) continue;
    CodeSubgroup c(s, testing::random_rows(rng, s));
    auto labels = s.labels();
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(std::uniform_int_distribution<std::size_t>(1, labels.size() - 1)(rng));
    auto f = ftsp_decompose(c, labels);
    // C is a subdirect product of C|A and C|B.
    auto ec = orc::from_subgroup(c);
    std::uint64_t pa = orc::project(ec, f.part_a).size(), xa = orc::cross_section(ec, f.part_a).size();
    std::uint64_t pb = orc::project(ec, f.part_b).size(), xb = orc::cross_section(ec, f.part_b).size();
    std::uint64_t q1 = pa / xa, q2 = pb / xb, q3 = ec.size() / (xa * xb), q4 = pa * pb / ec.size();
    o.require(q1 == q2 && q2 == q3 && q3 == q4, "four orders (enumeration)");
    o.require(f.quot_a.alphabet().order() == Order(static_cast<Int>(q1)), "quotient order");
    o.require(f.quot_b.alphabet().order() == Order(static_cast<Int>(q1)), "quotient order B");
    auto r = interface_realization(f);
    o.require(validate(r).ok(), "interface realization valid");
    o.require(rearrange(external_behavior(r), s.labels()) == c, "interface realization reproduces C");
    o.require(orc::code(r) == orc::from_subgroup(rearrange(c, r.external_labels())),
              "interface realization (enumeration)");
    ++n;
  }
  o.note << n << " subdirect products; four orders agree; interface realizations reproduce C";
}

void controllability_suite(Outcome& o) {
  int n = 0;
  for (const auto& e : full_corpus()) {
    auto t = controllability_test(e.realization);
    o.require(t.identity_holds, e.name + " identity");
    o.require(t.controllable.divides(t.states), e.name + " S^c <= S");
    o.require(t.universe / t.extended == t.controllable, e.name + " |U|/|B| = |S^c|");
    ++n;
  }
  auto red = controllability_test(corpus::tanner({{1, 1, 1, 1}, {1, 1, 1, 1}}, 2));
  std::vector<int> dims{red.universe.exponent(2), red.extended.exponent(2), red.states.exponent(2),
                        red.controllable.exponent(2)};
  o.require(dims == std::vector<int>{10, 3, 8, 7}, "redundant fixture dims");
  o.require(!red.is_controllable, "redundant fixture uncontrollable");
  auto ind = controllability_test(corpus::tanner({{1, 1, 1, 1}, {0, 0, 1, 1}}, 2));
  o.require(ind.is_controllable, "independent fixture controllable");
  o.note << n << " realizations; redundant fixture dims (" << dims[0] << "," << dims[1] << "," << dims[2] << ","
         << dims[3] << ") uncontrollable, independent variant controllable";
}

void obs_ctrl_duality_suite(Outcome& o) {
  int n = 0;
  for (const auto& e : full_corpus()) {
    const auto& r = e.realization;
    auto d = dualize(r);
    auto a = obs_ctrl(r), ad = obs_ctrl(d);
    o.require(a.internal_controllable == orthogonal(ad.internal_unobservable), e.name + " S^c = (S^u dual)^perp");
    o.require(ad.internal_controllable == orthogonal(a.internal_unobservable), e.name + " dual side");
    o.require(a.internal_unobservable.order() == ad.internal_states / ad.controllable, e.name + " size identity");
    auto beh = orc::behavior(r);
    o.require(orc::from_subgroup(a.internal_unobservable) == orc::cross_section(beh, behavior_bundle(r).tails),
              e.name + " S^u vs enumeration");
    ++n;
  }
  o.note << n << " realizations; S^c(R) = (S^u(R dual))^perp and |S^u| = |S dual|/|S^c dual| exact";
}

std::uint64_t oracle_effective(const orc::ElementSet& code, const std::vector<std::string>& side) {
  if (side.empty()) return 1;
  return orc::project(code, side).size() / orc::cross_section(code, side).size();
}

std::vector<std::string> side_symbols(const NormalRealization& r, const std::string& state, bool tail) {
  auto c = cut(r, {state});
  const auto& e = c.edges[0];
  return c.fragments[tail ? e.tail_fragment : e.head_fragment].symbol_labels();
}

std::vector<std::uint64_t> state_orders(const NormalRealization& r) {
  std::vector<std::uint64_t> out;
  for (const auto& s : r.internal_states()) out.push_back(r.alphabet(s).size());
  return out;
}

void minimization_suite(Outcome& o) {
  int n = 0;
  auto check = [&](const corpus::Entry& e) {
    const auto& r = e.realization;
    auto code = orc::code(r);
    auto m = minimize_cycle_free(r);
    o.require(internally_trim(m, Scope::States) && internally_proper(m, Scope::States), e.name + " trim+proper");
    o.require(orc::code(m) == orc::from_subgroup(rearrange(external_behavior(r), m.external_labels())) &&
                  orc::from_subgroup(rearrange(external_behavior(m), r.external_labels())) == code,
              e.name + " code preserved");
    for (const auto& s : m.internal_states()) {
      auto ord = m.alphabet(s).size();
      o.require(ord == oracle_effective(code, side_symbols(r, s, true)), e.name + " tail side " + s);
      o.require(ord == oracle_effective(code, side_symbols(r, s, false)), e.name + " head side " + s);
    }
    o.require(same_structure(minimize_cycle_free(m), m), e.name + " fixpoint");
    return m;
  };
  for (const auto& e : cycle_free_corpus()) {
    check(e);
    ++n;
  }
  auto rep = check({"rep3", corpus::repetition3()});
  o.require(state_orders(rep) == std::vector<std::uint64_t>{2, 2}, "rep-3 profile");
  auto pairs = check({"pairs", corpus::trellis({{1, 1, 0, 0}, {0, 0, 1, 1}}, 2)});
  o.require(state_orders(pairs) == std::vector<std::uint64_t>{2, 1, 2}, "pairs profile");
  auto ham_r = corpus::trellis(corpus::hamming74_generator(), 2);
  auto ham = check({"hamming", ham_r});
  auto hc = orc::code(ham_r);
  std::vector<std::uint64_t> oracle_profile;
  for (const auto& s : ham.internal_states()) oracle_profile.push_back(oracle_effective(hc, side_symbols(ham_r, s, true)));
  o.require(state_orders(ham) == oracle_profile, "hamming profile");
  o.require(n >= kCycleFree, "count");
  auto fmt = [](const std::vector<std::uint64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  o.note << n << " cycle-free realizations; rep-3 " << fmt(state_orders(rep)) << ", pairs " << fmt(state_orders(pairs))
         << ", Hamming " << fmt(state_orders(ham)) << " = oracle " << fmt(oracle_profile);
}

void lemma_suite(Outcome& o) {
  std::mt19937_64 rng(7777);
  std::map<char, int> hits;
  int samples = 0;
  auto done = [&] {
    for (char p : testing::kLemmaParts)
      if (hits[p] < kLemmaPairsPerPart) return false;
    return true;
  };
  while (!done() && samples < kLemmaMaxSamples) {
    auto pair = testing::random_fragment_pair(rng, 0.5);
    ++samples;
    auto x = testing::fragment_flags(pair.f1), y = testing::fragment_flags(pair.f2);
    bool any = false;
    for (char p : testing::kLemmaParts)
      any = any || (testing::lemma_hypothesis(p, x) && testing::lemma_hypothesis(p, y));
    if (!any) continue;
    auto z = testing::fragment_flags(pair.joined);
    for (char p : testing::kLemmaParts) {
      if (!testing::lemma_hypothesis(p, x) || !testing::lemma_hypothesis(p, y)) continue;
      ++hits[p];
      o.require(testing::lemma_conclusion(p, z), std::string("part ") + p);
    }
  }
  int least = kLemmaMaxSamples;
  for (char p : testing::kLemmaParts) {
    o.require(hits[p] >= kLemmaPairsPerPart, std::string("too few pairs for part ") + p);
    least = std::min(least, hits[p]);
  }

  int planted = 0;
  for (int i = 0; i < kPlantedCores; ++i) {
    bool observable = i % 2 == 0;
    auto pc = testing::planted_cyclic(rng, observable);
    const auto& r = pc.realization;
    auto tc = two_core(r);
    o.require(tc.core.has_value(), "planted core present");
    if (!tc.core) continue;
    o.require(obs_ctrl(r).internally_observable == observable, "planted observability");
    o.require(obs_ctrl(*tc.core).internally_observable == observable, "core observability");
    o.require((orc::cross_section(orc::behavior(r), behavior_bundle(r).tails).size() == 1) == observable,
              "planted observability (enumeration)");
    auto d = dualize(r);
    auto dc = two_core(d);
    o.require(obs_ctrl(d).internally_controllable == observable, "dual controllability");
    o.require(dc.core && obs_ctrl(*dc.core).internally_controllable == observable, "dual core controllability");
    ++planted;
  }
  o.note << samples << " sampled pairs, at least " << least << " hypothesis-satisfying pairs per part (a..h); "
         << planted << " planted 2-core fixtures";
}

void state_trim_suite(Outcome& o) {
  int instances = 0, edges = 0;
  std::vector<corpus::Entry> cyclic;
  for (auto& f : corpus::fixtures())
    if (!is_cycle_free(f.realization)) cyclic.push_back(std::move(f));
  for (auto& e : corpus::random_corpus(8080, 200, {T::Cycle, T::CyclePendant, T::Theta}, kAllFamilies, 0, 0.4))
    cyclic.push_back(std::move(e));
  for (const auto& e : cyclic) {
    const auto& r = e.realization;
    auto d = dualize(r);
    bool counted = false;
    for (const auto& s : r.internal_states()) {
      if (is_cut_edge(r, s)) continue;
      auto st = state_trim_status(r, s);
      auto c = cut(r, {s});
      const auto& ce = c.edges[0];
      auto frag = c.fragments[0];
      // Exhaustive classification of U^(\j).
      auto classify = [&](const NormalRealization& g, const CutEdge& edge, const NormalRealization& whole) {
        auto code = orc::code(g);
        auto u = orc::cross_section(code, {edge.tail_label, edge.head_label});
        auto phi = whole.edge_map(edge.state);
        bool diagonal = true, nonzero_diagonal = false;
        for (const auto& x : u.elements()) {
          auto a = u.space().slot(x, edge.tail_label), b = u.space().slot(x, edge.head_label);
          bool diag = phi.apply(a) == b;
          diagonal = diagonal && diag;
          if (diag && a != whole.alphabet(edge.state).zero()) nonzero_diagonal = true;
        }
        return std::tuple{u, diagonal, !nonzero_diagonal};
      };
      auto [u, diagonal, no_nonzero] = classify(frag, ce, r);
      o.require(orc::from_subgroup(st.unobservable_transitions) == u, e.name + " U^(j) " + s);
      o.require(st.dual_state_trim == diagonal, e.name + " dual state-trim " + s);
      o.require(st.observable == no_nonzero, e.name + " observable " + s);
      bool ext_obs = obs_ctrl(frag).externally_observable;
      o.require(ext_obs == (diagonal && no_nonzero), e.name + " observability theorem " + s);
      // Dual statement, classified on the dual realization.
      auto dcut = cut(d, {s});
      auto [du, ddiag, dno] = classify(dcut.fragments[0], dcut.edges[0], d);
      bool ext_ctrl = obs_ctrl(frag).externally_controllable;
      o.require(ext_ctrl == (st.state_trim && st.controllable), e.name + " controllability theorem " + s);
      o.require(ext_ctrl == (ddiag && dno), e.name + " controllability vs dual classification " + s);
      ++edges;
      counted = true;
    }
    if (counted) ++instances;
  }
  o.require(instances >= kStateTrimInstances, "count");
  o.note << instances << " cyclic instances, " << edges << " non-cut edges classified exhaustively";
}

template <class W>
bool within(const WeightMap<W>& a, const WeightMap<Rational>& b, double rel) {
  for (const auto& [l, w] : b)
    for (std::size_t i = 0; i < w.size(); ++i) {
      double x = w[i].template convert_to<double>();
      if (std::abs(double(a.at(l)[i]) - x) > rel * std::max(1.0, std::abs(x))) return false;
    }
  return true;
}

void decoding_suite(Outcome& o) {
  std::mt19937_64 rng(1234);
  int n = 0;
  DecodeOptions reduce;
  reduce.reduce_messages = true;
  for (const auto& e : cycle_free_corpus()) {
    const auto& r = e.realization;
    WeightMap<Rational> p;
    std::uniform_int_distribution<int> d(0, 5);
    for (const auto& l : r.external_labels()) {
      Weights<Rational> w(r.alphabet(l).size());
      for (auto& x : w) x = Rational(d(rng), 5);
      p[l] = w;
    }
    auto bf = brute_force_app(r, p);
    auto ex = decode_exact(r, p);
    o.require(ex.marginals == bf.marginals, e.name + " exact vs brute force");
    o.require(decode_exact(r, p, reduce).marginals == ex.marginals, e.name + " reduced messages");
    auto it = decode_iterative(r, p);
    o.require(it.iterations == 1 && it.converged && it.marginals == ex.marginals, e.name + " one sweep");
    WeightMap<double> pf;
    for (const auto& [l, w] : p)
      for (const auto& x : w) pf[l].push_back(x.convert_to<double>());
    o.require(within(decode_exact(r, pf).marginals, bf.marginals, kFloatTolerance), e.name + " float mode");
    ++n;
  }
  auto rep = corpus::repetition3();
  WeightMap<Rational> p;
  for (const auto& s : rep.symbol_labels()) p[s] = {Rational(9, 10), Rational(1, 10)};
  auto res = decode_exact(rep, p);
  bool ok = true;
  for (const auto& s : rep.symbol_labels())
    ok = ok && res.marginals.at(s) == Weights<Rational>{Rational(729, 730), Rational(1, 730)};
  o.require(ok, "rep-3 729/730");
  o.note << n << " cycle-free instances exact; rep-3 marginal " << res.marginals.at("a0")[0] << "; reduction changes nothing";
}

struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

int brute_force_cycle_rank(const NormalRealization& r) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (const auto& s : r.internal_states()) e.push_back(r.ends(s));
  int best = static_cast<int>(e.size());
  for (std::uint32_t mask = 0; mask < (1u << e.size()); ++mask) {
    int removed = __builtin_popcount(mask);
    if (removed >= best) continue;
    Dsu d(r.constraints.size());
    bool forest = true;
    for (std::size_t k = 0; k < e.size() && forest; ++k)
      if (!(mask >> k & 1)) forest = d.join(e[k].first, e[k].second);
    if (forest) best = removed;
  }
  return best;
}

void graph_suite(Outcome& o) {
  std::mt19937_64 rng(31337);
  int ranks = 0, cores = 0, decomps = 0;
  for (const auto& e : full_corpus()) {
    const auto& r = e.realization;
    if (static_cast<int>(r.internal_states().size()) <= kGraphMaxEdges) {
      o.require(cyclomatic_number(r) == brute_force_cycle_rank(r), e.name + " cyclomatic number");
      ++ranks;
    }
    auto base = two_core_constraints(r);
    for (int k = 0; k < 5; ++k) o.require(two_core_constraints(r, &rng) == base, e.name + " order independence");
    auto tc = two_core(r);
    o.require(cyclomatic_number(tc.core ? *tc.core : r) == cyclomatic_number(r), e.name + " cyclomatic preserved");
    ++cores;
    if (!r.boundary.empty()) continue;
    auto m = reduce_until_fixpoint(r);
    auto d = second_canonical_decomposition(m);
    auto lifted = lift(d);
    o.require(orc::code(lifted) == orc::from_subgroup(rearrange(external_behavior(r), lifted.external_labels())),
              e.name + " second decomposition round trip");
    ++decomps;
  }
  o.note << ranks << " graphs vs brute-force cycle rank; " << cores << " 2-cores order-independent; " << decomps
         << " second decompositions round-trip C";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria{
      {"duality", duality_suite},
      {"algebra dualities", algebra_suite},
      {"FTSP", ftsp_suite},
      {"controllability test", controllability_suite},
      {"observability/controllability duality", obs_ctrl_duality_suite},
      {"cycle-free minimization", minimization_suite},
      {"connected fragments and 2-core localization", lemma_suite},
      {"state-trimness", state_trim_suite},
      {"decoding", decoding_suite},
      {"graph suite", graph_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kSuiteSeconds) {
      o.pass = false;
      o.note << "; exceeded " << kSuiteSeconds << " s";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.note.str().c_str(),
                secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
