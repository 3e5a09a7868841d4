#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "normgraph/realization.hpp"

namespace normgraph::corpus {

// Single constraint whose variables are all symbols.
NormalRealization single_constraint(const std::string& id, const CodeSubgroup& code);

NormalRealization equality_node(const Alphabet& a, int n);
NormalRealization zero_sum_node(const Alphabet& a, int n);
NormalRealization sign_inversion_node(const Alphabet& a);

// Conventional trellis whose states carry the whole information vector of
// the generator matrix, padded with `pad` free coordinates.
NormalRealization trellis(const std::vector<Vec>& g, Int p, int pad = 0);
// Same sections closed into a ring by a state between the last and first section.
NormalRealization tail_biting(const std::vector<Vec>& g, Int p);

GeneralRealization tanner_general(const std::vector<Vec>& h, Int p);
NormalRealization tanner(const std::vector<Vec>& h, Int p);

std::vector<Vec> hamming74_generator();
NormalRealization repetition3();
// Length-4 path over Z4 realizing span{(1,1,2,0),(0,2,1,1)}.
NormalRealization z4_path();
// Two-section ring over Z4 joined by a sign inverter.
NormalRealization z4_ring();
// Tail-biting ring of three sections, each hanging a leaf with two symbols.
NormalRealization ring_with_parallel_branches();

enum class Topology { Path, Tree, Cycle, CyclePendant, Theta };
enum class Family { GF2, GF3, Z4, Mixed };

const char* to_string(Topology t);
const char* to_string(Family f);

struct RandomOptions {
  Topology topology = Topology::Path;
  Family family = Family::GF2;
  int constraints = 3;
  int max_variables = 12;
  int boundary = 0;
  double iso_probability = 0.0;
  std::uint64_t max_configurations = std::uint64_t{1} << 18;
  std::string prefix;
};

NormalRealization random_realization(std::mt19937_64& rng, const RandomOptions& opt);

Alphabet random_alphabet(std::mt19937_64& rng, Family f, bool state);
Homomorphism random_automorphism(std::mt19937_64& rng, const Alphabet& a);
CodeSubgroup random_code(std::mt19937_64& rng, const ProductSpace& s, int max_rows = -1);

// Seeded collection used by tests and the acceptance run.
struct Entry {
  std::string name;
  NormalRealization realization;
};
std::vector<Entry> fixtures();
std::vector<Entry> random_corpus(std::uint64_t seed, int count, const std::vector<Topology>& topologies,
                                 const std::vector<Family>& families, int boundary = 0,
                                 double iso_probability = 0.3);

}  // namespace normgraph::corpus
