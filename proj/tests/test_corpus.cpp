#include <doctest.h>

#include "normgraph/oracle.hpp"
#include "shipped_corpus.hpp"

using namespace normgraph;
namespace orc = normgraph::oracle;

namespace {

std::string path(const std::string& name) { return std::string(NORMGRAPH_CORPUS_DIR) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("shipped files match their generators") {
  for (const auto& f : shipped::files()) {
    CAPTURE(f.name);
    CHECK(io::load(path(f.name)) == f.realization);
  }
  for (const auto& p : shipped::prior_files()) {
    CAPTURE(p.name);
    CHECK(io::load_json(path(p.name)) == p.weights);
  }
}

TEST_CASE("golden results are reproduced") {
  auto stored = io::load_json(path("golden"));
  auto fresh = shipped::golden();
  CHECK(stored["random_seed"] == fresh["random_seed"]);
  for (const auto& [name, entry] : fresh["realizations"].items()) {
    CAPTURE(name);
    CHECK(stored["realizations"][name] == entry);
  }
  CHECK(stored["marginals"] == fresh["marginals"]);
}

TEST_CASE("golden results agree with enumeration") {
  auto stored = io::load_json(path("golden"));
  for (const auto& f : shipped::files()) {
    CAPTURE(f.name);
    const auto& g = stored["realizations"][f.name];
    if (!g["valid"].get<bool>()) {
      CHECK_FALSE(validate(f.realization).ok());
      continue;
    }
    CHECK(g["code_order"] == std::to_string(orc::code(f.realization).size()));
    CHECK(g["behavior_order"] == std::to_string(orc::behavior(f.realization).size()));
  }
  CHECK(stored["realizations"]["rep3_padded"]["minimized_state_orders"] == io::Json{"2", "2"});
  CHECK(stored["marginals"]["rep3_priors"]["a0"] == io::Json{"729/730", "1/730"});
}

TEST_CASE("decoding the shipped priors") {
  for (const auto& p : shipped::prior_files()) {
    CAPTURE(p.name);
    NormalRealization r = io::load(path(p.target));
    auto priors = io::priors_exact(io::load_json(path(p.name)));
    auto bf = brute_force_app(r, priors);
    if (is_cycle_free(r)) CHECK(decode_exact(r, priors).marginals == bf.marginals);
  }
}
