#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "normgraph/realization.hpp"

namespace normgraph {

// |E| - |V| + number of components, over internal edges.
int cyclomatic_number(const NormalRealization& r);
bool is_cycle_free(const NormalRealization& r);
bool is_cut_edge(const NormalRealization& r, const std::string& state);

struct LeafFragment {
  NormalRealization fragment;
  std::optional<std::string> attachment;  // edge into the core
};

struct TwoCore {
  std::vector<std::size_t> core_constraints;  // indices into the input
  std::optional<NormalRealization> core;      // empty when cycle-free
  std::vector<LeafFragment> leaves;           // sorted by attachment label
};

// Strips degree <= 1 constraints until none remain. With `rng`, the
// stripping order is shuffled.
std::vector<std::size_t> two_core_constraints(const NormalRealization& r, std::mt19937_64* rng = nullptr);
TwoCore two_core(const NormalRealization& r, std::mt19937_64* rng = nullptr);

// Graphviz description; constraints in `core` are drawn as boxes.
std::string to_dot(const NormalRealization& r, const std::vector<std::size_t>& core = {});

}  // namespace normgraph
