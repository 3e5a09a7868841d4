#include <doctest.h>

#include <random>

#include "normgraph/analysis.hpp"
#include "normgraph/corpus.hpp"
#include "normgraph/decomposition.hpp"
#include "normgraph/error.hpp"
#include "normgraph/graphcore.hpp"
#include "normgraph/minimize.hpp"
#include "normgraph/oracle.hpp"

using namespace normgraph;
namespace orc = normgraph::oracle;

namespace {

using T = corpus::Topology;
using F = corpus::Family;

std::vector<corpus::Entry> cycle_free_corpus(std::uint64_t seed, int n) {
  return corpus::random_corpus(seed, n, {T::Path, T::Tree}, {F::GF2, F::GF3, F::Z4, F::Mixed}, 0, 0.3);
}

std::vector<int> state_dims(const NormalRealization& r) {
  auto s = r.internal_states();
  std::sort(s.begin(), s.end());
  std::vector<int> out;
  for (const auto& x : s) out.push_back(r.alphabet(x).order().exponent(2));
  return out;
}

// |C|A| / |C:A| from the codeword list.
std::uint64_t oracle_effective(const orc::ElementSet& code, const std::vector<std::string>& side) {
  if (side.empty()) return 1;
  return orc::project(code, side).size() / orc::cross_section(code, side).size();
}

std::vector<std::string> side_symbols(const NormalRealization& r, const std::string& state, bool tail) {
  auto c = cut(r, {state});
  const auto& e = c.edges[0];
  return c.fragments[tail ? e.tail_fragment : e.head_fragment].symbol_labels();
}

bool realizes(const NormalRealization& r, const orc::ElementSet& code, const std::vector<std::string>& labels) {
  return orc::from_subgroup(rearrange(external_behavior(r), labels)) == code;
}

// Local reductions applied in a random order until none changes anything.
NormalRealization shuffled_reduction(const NormalRealization& r, std::mt19937_64& rng) {
  NormalRealization cur = r;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::string, bool>> steps;
    for (const auto& s : cur.internal_states()) {
      steps.push_back({s, true});
      steps.push_back({s, false});
    }
    std::shuffle(steps.begin(), steps.end(), rng);
    for (const auto& [s, tail] : steps) {
      auto [t, h] = cur.ends(s);
      auto lr = local_reduce(cur, cur.constraints[tail ? t : h].id, s);
      if (lr.changed) {
        cur = lr.realization;
        changed = true;
      }
    }
  }
  return cur;
}

}  // namespace

TEST_CASE("minimal trellis examples") {
  auto rep = corpus::repetition3();
  auto m = minimize_cycle_free(rep);
  CHECK(same_structure(m, rep));
  CHECK(state_dims(m) == std::vector<int>{1, 1});

  auto padded = minimize_cycle_free(corpus::trellis({{1, 1, 1}}, 2, 1));
  CHECK(state_dims(padded) == std::vector<int>{1, 1});

  auto pairs = corpus::trellis({{1, 1, 0, 0}, {0, 0, 1, 1}}, 2);
  auto code = orc::code(pairs);
  CHECK(code.size() == 4);
  auto mp = minimize_cycle_free(pairs);
  CHECK(state_dims(mp) == std::vector<int>{1, 0, 1});
  for (const auto& s : mp.internal_states()) {
    auto past = side_symbols(pairs, s, true);
    CHECK(mp.alphabet(s).order() == Order(static_cast<Int>(oracle_effective(code, past))));
  }
  CHECK(realizes(mp, code, pairs.external_labels()));

  auto ham = corpus::trellis(corpus::hamming74_generator(), 2);
  auto hc = orc::code(ham);
  CHECK(hc.size() == 16);
  auto mh = minimize_cycle_free(ham);
  for (const auto& s : mh.internal_states()) {
    INFO(s);
    auto ord = mh.alphabet(s).order();
    CHECK(ord == Order(static_cast<Int>(oracle_effective(hc, side_symbols(ham, s, true)))));
    CHECK(ord == Order(static_cast<Int>(oracle_effective(hc, side_symbols(ham, s, false)))));
  }
  CHECK(realizes(mh, hc, ham.external_labels()));
}

TEST_CASE("minimization of random cycle-free realizations") {
  std::mt19937_64 rng(2);
  for (const auto& e : cycle_free_corpus(61, 120)) {
    INFO(e.name);
    const auto& r = e.realization;
    auto code = orc::code(r);
    auto m = minimize_cycle_free(r);
    CHECK(realizes(m, code, r.external_labels()));
    CHECK(internally_trim(m, Scope::States));
    CHECK(internally_proper(m, Scope::States));
    CHECK(same_structure(minimize_cycle_free(m), m));
    for (const auto& s : m.internal_states()) {
      auto ord = m.alphabet(s).order();
      CHECK(ord == Order(static_cast<Int>(oracle_effective(code, side_symbols(r, s, true)))));
      CHECK(ord == Order(static_cast<Int>(oracle_effective(code, side_symbols(r, s, false)))));
      // Minimal: no realization on this tree can use a smaller state space.
      CHECK(ord.divides(r.alphabet(s).order()));
      auto rep = verify_state_space_theorem(m, s);
      CHECK(rep.holds());
    }
    auto other = shuffled_reduction(r, rng);
    for (const auto& s : m.internal_states()) CHECK(other.alphabet(s).order() == m.alphabet(s).order());
  }
}

TEST_CASE("minimization preconditions") {
  CHECK_THROWS_AS(minimize_cycle_free(corpus::z4_ring()), Error);
  try {
    minimize_cycle_free(corpus::tail_biting({{1, 1, 0, 0}, {0, 0, 1, 1}}, 2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCycleFree);
  }
  auto a = corpus::repetition3();
  auto b = corpus::single_constraint("p", zero_sum_code(Alphabet::vector_space(2, 1), {"x", "y"}));
  a.symbols.insert(a.symbols.end(), b.symbols.begin(), b.symbols.end());
  a.constraints.insert(a.constraints.end(), b.constraints.begin(), b.constraints.end());
  try {
    minimize_cycle_free(a);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
  CHECK_THROWS_AS(verify_state_space_theorem(corpus::trellis({{1, 1, 1}}, 2, 1), "s1"), Error);
}

TEST_CASE("state space theorem on trivial code") {
  auto r = corpus::repetition3();
  for (auto& c : r.constraints) c.code = CodeSubgroup::zero(c.code.ambient());
  auto m = minimize_cycle_free(r);
  for (const auto& s : m.internal_states()) {
    CHECK(m.alphabet(s).order().is_one());
    CHECK(verify_state_space_theorem(m, s).holds());
  }
}

TEST_CASE("recovering internal states") {
  auto rep = corpus::repetition3();
  std::map<std::string, Element> ext;
  for (const auto& s : rep.symbols) ext[s.id] = {1};
  auto st = recover_internal_states(rep, ext);
  for (const auto& [k, v] : st) CHECK(v == Element{1});
  for (auto& [k, v] : ext) v = {0};
  for (const auto& [k, v] : recover_internal_states(rep, ext)) CHECK(v == Element{0});
  ext["a0"] = {1};
  CHECK_THROWS_AS(recover_internal_states(rep, ext), Error);

  std::mt19937_64 rng(4);
  int checked = 0;
  for (const auto& e :
       corpus::random_corpus(62, 80, {T::Path, T::Tree}, {F::GF2, F::GF3, F::Z4, F::Mixed}, 1, 0.3)) {
    auto f = reduce_until_fixpoint(e.realization);
    if (!internally_proper(f, Scope::States)) continue;
    INFO(e.name);
    auto b = behavior_bundle(f);
    auto ext_labels = f.external_labels();
    auto elems = orc::behavior(f).elements();
    std::shuffle(elems.begin(), elems.end(), rng);
    if (elems.size() > 40) elems.resize(40);
    for (const auto& x : elems) {
      std::map<std::string, Element> in;
      for (const auto& l : ext_labels) in[l] = b.behavior.ambient().slot(x, l);
      auto got = recover_internal_states(f, in);
      for (const auto& t : b.tails) CHECK(got.at(t) == b.behavior.ambient().slot(x, t));
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("canonical decomposition") {
  Alphabet b = Alphabet::vector_space(2, 1);
  // {00, 01}: a0 never takes 1, a1 is nondynamical.
  auto r = corpus::single_constraint("c", CodeSubgroup(ProductSpace({{"a0", b}, {"a1", b}}), {{0, 1}}));
  auto d = canonical_decomposition(r);
  REQUIRE(d.interfaces.size() == 2);
  CHECK(d.interfaces[0].trimmed.is_zero());
  CHECK(d.interfaces[1].nondynamical.is_full());
  CHECK(d.interfaces[0].alphabet.order().is_one());
  CHECK(realizes(compose(d), orc::code(r), r.external_labels()));

  auto eq = corpus::equality_node(Alphabet::vector_space(3, 1), 3);
  auto de = canonical_decomposition(eq);
  CHECK(de.interfaces.empty());
  CHECK(same_structure(de.core, eq));

  for (const auto& e : corpus::random_corpus(63, 100, {T::Path, T::Tree, T::Cycle, T::Theta},
                                             {F::GF2, F::GF3, F::Z4, F::Mixed}, 0, 0.3)) {
    INFO(e.name);
    auto dd = canonical_decomposition(e.realization);
    CHECK(internally_trim(dd.core));
    CHECK(internally_proper(dd.core));
    for (const auto& n : dd.interfaces) CHECK(n.alphabet.order() == n.trimmed.order() / n.nondynamical.order());
    CHECK(realizes(compose(dd), orc::code(e.realization), e.realization.external_labels()));
  }
}

TEST_CASE("second canonical decomposition") {
  auto ring = corpus::ring_with_parallel_branches();
  auto m = reduce_until_fixpoint(ring);
  auto d = second_canonical_decomposition(m);
  CHECK(d.core_constraints.size() == 3);
  CHECK(d.leaves.size() == 3);
  for (const auto& l : d.leaves) {
    CHECK(l.state_isomorphic);
    // Two symbols of a parallel branch carry one effective bit.
    CHECK(l.alphabet.order() == Order(2));
    CHECK(l.trimmed.order() == Order(4));
  }
  CHECK(realizes(lift(d), orc::code(ring), ring.external_labels()));

  auto pure = corpus::tail_biting({{1, 1, 0, 0}, {0, 0, 1, 1}}, 2);
  auto dp = second_canonical_decomposition(reduce_until_fixpoint(pure));
  CHECK(dp.leaves.empty());

  auto rep = corpus::repetition3();
  auto dr = second_canonical_decomposition(rep);
  REQUIRE(dr.leaves.size() == 2);
  for (const auto& l : dr.leaves) CHECK(l.state_isomorphic);
  CHECK(realizes(lift(dr), orc::code(rep), rep.external_labels()));

  CHECK_THROWS_AS(second_canonical_decomposition(corpus::trellis({{1, 1, 1}}, 2, 1)), Error);

  for (const auto& e : corpus::random_corpus(64, 120, {T::CyclePendant, T::Theta, T::Cycle, T::Path, T::Tree},
                                             {F::GF2, F::GF3, F::Z4, F::Mixed}, 0, 0.4)) {
    INFO(e.name);
    auto r = reduce_until_fixpoint(e.realization);
    auto sd = second_canonical_decomposition(r);
    for (const auto& l : sd.leaves) CHECK(l.state_isomorphic);
    CHECK(realizes(lift(sd), orc::code(e.realization), e.realization.external_labels()));
    if (!sd.core_constraints.empty()) CHECK(internally_trim(sd.effective_core, Scope::States));
  }
}
