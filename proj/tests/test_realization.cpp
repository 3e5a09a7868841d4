#include <doctest.h>

#include <random>

#include "normgraph/corpus.hpp"
#include "normgraph/error.hpp"
#include "normgraph/oracle.hpp"
#include "normgraph/realization.hpp"

using namespace normgraph;
namespace orc = normgraph::oracle;

namespace {

bool matches_oracle(const NormalRealization& r) {
  auto b = behavior_bundle(r);
  return orc::from_subgroup(b.behavior) == orc::behavior(r) && orc::from_subgroup(b.code) == orc::code(r);
}

std::vector<corpus::Entry> mixed_corpus(std::uint64_t seed, int n, double iso = 0.3) {
  using T = corpus::Topology;
  using F = corpus::Family;
  return corpus::random_corpus(seed, n, {T::Path, T::Tree, T::Cycle, T::CyclePendant, T::Theta},
                               {F::GF2, F::GF3, F::Z4, F::Mixed}, 0, iso);
}

}  // namespace

TEST_CASE("repetition code trellis") {
  auto r = corpus::repetition3();
  CHECK(validate(r).ok());
  auto c = external_behavior(r);
  CHECK(enumerate(c) == std::vector<Element>{{0, 0, 0}, {1, 1, 1}});
}

TEST_CASE("fixtures are valid and match the oracle") {
  for (const auto& e : corpus::fixtures()) {
    INFO(e.name);
    CHECK(validate(e.realization).ok());
    CHECK(matches_oracle(e.realization));
  }
}

TEST_CASE("z4 path realizes its code") {
  auto c = external_behavior(corpus::z4_path());
  ProductSpace s = c.ambient();
  CHECK(c == CodeSubgroup(s, {{1, 1, 2, 0}, {0, 2, 1, 1}}));
}

TEST_CASE("random realizations match the oracle") {
  for (const auto& e : mixed_corpus(7, 120)) {
    INFO(e.name);
    REQUIRE(validate(e.realization).ok());
    CHECK(matches_oracle(e.realization));
  }
}

TEST_CASE("validation reports structural problems") {
  auto r = corpus::repetition3();
  auto bad = r;
  bad.constraints[1].vars = {"s1", "a1", "s1"};
  CHECK_FALSE(validate(bad).ok());
  bad = r;
  bad.symbols.push_back({"zz", Alphabet::vector_space(2, 1)});
  auto rep = validate(bad);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues[0].kind == "degree");
  CHECK(rep.issues[0].subject == "zz");
  bad = r;
  bad.states[0].alphabet = Alphabet::vector_space(3, 1);
  CHECK(validate(bad).issues.at(0).kind == "alphabet-mismatch");
  CHECK_THROWS_AS(behavior_bundle(bad), Error);
}

TEST_CASE("disconnected realization realizes the product code") {
  auto a = corpus::repetition3();
  auto b = corpus::single_constraint("p", zero_sum_code(Alphabet::vector_space(2, 1), {"x", "y"}));
  NormalRealization r = a;
  r.symbols.insert(r.symbols.end(), b.symbols.begin(), b.symbols.end());
  r.constraints.insert(r.constraints.end(), b.constraints.begin(), b.constraints.end());
  CHECK(validate(r).issues.at(0).kind == "disconnected");
  CHECK(validate(r, false).ok());
  CHECK(external_behavior(r) == direct_product(external_behavior(a), external_behavior(b)));
}

TEST_CASE("cut then reassemble is the identity") {
  std::mt19937_64 rng(3);
  for (const auto& e : mixed_corpus(19, 80)) {
    const auto& r = e.realization;
    auto states = r.internal_states();
    if (states.empty()) continue;
    std::shuffle(states.begin(), states.end(), rng);
    states.resize(std::uniform_int_distribution<std::size_t>(1, states.size())(rng));
    auto c = cut(r, states);
    for (const auto& f : c.fragments) CHECK(validate(f).ok());
    auto back = reassemble(c);
    INFO(e.name);
    CHECK(same_structure(back, r));
    CHECK(external_behavior(back) == rearrange(external_behavior(r), external_behavior(back).ambient().labels()));
  }
  CHECK_THROWS_AS(cut(corpus::repetition3(), {"a0"}), Error);
}

TEST_CASE("cutting a cycle edge leaves one fragment with two boundary ends") {
  auto r = corpus::tail_biting({{1, 1}}, 2);
  auto c = cut(r, {"s0"});
  REQUIRE(c.fragments.size() == 1);
  CHECK(c.fragments[0].boundary == std::vector<std::string>{"s0", "s0'"});
}

TEST_CASE("connect checks alphabets and overlap") {
  auto r = corpus::repetition3();
  auto c = cut(r, {"s1"});
  REQUIRE(c.fragments.size() == 2);
  CHECK_THROWS_AS(connect(c.fragments[0], "s1", c.fragments[0], "s1"), Error);
  auto f2 = c.fragments[1];
  f2.states[0].alphabet = Alphabet::vector_space(3, 1);
  CHECK_THROWS_AS(connect(c.fragments[0], "s1", f2, "s1"), Error);
}

TEST_CASE("normalization of general realizations") {
  auto g = corpus::tanner_general({{1, 1, 1}}, 2);
  auto r = normalize(g);
  CHECK(validate(r).ok());
  CHECK(r.constraints.size() == 1);
  CHECK(r.states.empty());
  CHECK(r.symbols.size() == 3);

  auto t = corpus::tanner({{1, 1, 1, 1}, {1, 1, 1, 1}}, 2);
  CHECK(validate(t).ok());
  CHECK(t.constraints.size() == 6);
  CHECK(t.internal_states().size() == 8);
  CHECK(external_behavior(t).order().exponent(2) == 3);

  // A degree-1 state is projected out; a degree-3 state is replicated.
  Alphabet f2 = Alphabet::vector_space(2, 1);
  GeneralRealization h;
  h.symbols = {{"a", f2}, {"b", f2}, {"c", f2}, {"unused", f2}};
  h.states = {{"x", f2}, {"y", f2}};
  auto sp = [&](int n) {
    std::vector<Factor> fs;
    for (int i = 0; i < n; ++i) fs.push_back({"p" + std::to_string(i), f2});
    return ProductSpace(fs);
  };
  h.constraints = {{"k0", {"a", "x", "y"}, equality_code(f2, {"p0", "p1", "p2"})},
                   {"k1", {"b", "x"}, equality_code(f2, {"p0", "p1"})},
                   {"k2", {"c", "x"}, CodeSubgroup(sp(2), {{1, 1}})}};
  auto n = normalize(h);
  CHECK(validate(n, false).ok());
  CHECK_FALSE(n.has_variable("y"));
  CHECK(n.has_variable("x~3"));
  auto code = external_behavior(n);
  CHECK(code.order().exponent(2) == 2);
  CHECK(code.contains({1, 1, 1, 0}));
  CHECK(code.contains({0, 0, 0, 1}));
}
