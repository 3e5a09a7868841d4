#include <doctest.h>

#include "normgraph/corpus.hpp"
#include "normgraph/duality.hpp"
#include "normgraph/oracle.hpp"

using namespace normgraph;
namespace orc = normgraph::oracle;

TEST_CASE("dual of the repetition trellis") {
  auto r = corpus::repetition3();
  auto d = dualize(r);
  for (const auto& s : d.states) CHECK_FALSE(s.iso.has_value());
  auto chk = verify_duality(r);
  CHECK(chk.ok());
  CHECK(chk.dual_code.order().to_u64() == 4u);
}

TEST_CASE("z4 plain edges become sign inverters") {
  auto r = corpus::z4_path();
  auto d = dualize(r);
  for (const auto& s : d.states) {
    REQUIRE(s.iso.has_value());
    CHECK(*s.iso == Homomorphism::negation(s.alphabet));
  }
  CHECK(verify_duality(r).ok());
}

TEST_CASE("dualization is an involution") {
  for (const auto& e : corpus::random_corpus(5, 100,
                                             {corpus::Topology::Cycle, corpus::Topology::Tree,
                                              corpus::Topology::Theta},
                                             {corpus::Family::Z4, corpus::Family::Mixed, corpus::Family::GF3}, 0,
                                             0.6)) {
    INFO(e.name);
    CHECK(dualize(dualize(e.realization)) == e.realization);
  }
}

TEST_CASE("dual code equals the orthogonal code on fixtures and random input") {
  auto all = corpus::fixtures();
  auto more = corpus::random_corpus(
      6, 100,
      {corpus::Topology::Path, corpus::Topology::Cycle, corpus::Topology::CyclePendant, corpus::Topology::Theta},
      {corpus::Family::GF2, corpus::Family::GF3, corpus::Family::Z4, corpus::Family::Mixed}, 1, 0.5);
  all.insert(all.end(), more.begin(), more.end());
  for (const auto& e : all) {
    INFO(e.name);
    auto chk = verify_duality(e.realization);
    CHECK(chk.dual_route);
    CHECK(chk.lemma_route);
    if (e.realization.external_labels().size() <= 12)
      CHECK(orc::from_subgroup(chk.dual_code) == orc::orthogonal(orc::code(e.realization)));
  }
}
