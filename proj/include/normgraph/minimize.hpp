#pragma once

#include <map>
#include <string>
#include <vector>

#include "normgraph/realization.hpp"

namespace normgraph {

// Local reductions until every constraint is trim and proper at its states.
NormalRealization minimize_cycle_free(const NormalRealization& r);

struct StateSpaceReport {
  std::string state;
  Order state_order;
  std::vector<std::string> tail_symbols, head_symbols;
  Order tail_effective, head_effective;  // |C|A^F| / |C:A^F| for each side
  bool reconstructs = false;             // C rebuilt from the two interfaces and their isomorphism
  bool holds() const { return reconstructs && tail_effective == state_order && head_effective == state_order; }
};

StateSpaceReport verify_state_space_theorem(const NormalRealization& r, const std::string& state);

// Internal state values (tail coordinates, keyed by state id) of an internally
// proper cycle-free fragment, found by peeling leaf constraints.
std::map<std::string, Element> recover_internal_states(const NormalRealization& f,
                                                       const std::map<std::string, Element>& external);

}  // namespace normgraph
