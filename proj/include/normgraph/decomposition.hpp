#pragma once

#include <string>
#include <vector>

#include "normgraph/quotient.hpp"
#include "normgraph/realization.hpp"

namespace normgraph {

// Symbol k seen through its effective alphabet Abar_k / Aunder_k.
struct InterfaceNode {
  std::string symbol;
  std::string effective;       // label of the effective symbol in the core
  CodeSubgroup trimmed;        // C|A_k
  CodeSubgroup nondynamical;   // C:A_k
  Alphabet alphabet;           // effective alphabet
  CodeSubgroup code;           // {(a, pi(a))} over (symbol, effective)
};

struct CanonicalDecomposition {
  std::vector<InterfaceNode> interfaces;  // only symbols that were not trim and proper
  NormalRealization core;                 // trim and proper everywhere
};

CanonicalDecomposition canonical_decomposition(const NormalRealization& r);
// Core with each interface node attached; realizes the original code.
NormalRealization compose(const CanonicalDecomposition& d);

struct LeafSummary {
  std::string edge;             // root edge label in the leaf fragment
  std::string effective;        // label of the effective symbol in the core
  NormalRealization fragment;
  std::vector<std::string> symbols;
  CodeSubgroup behavior;        // C^F over symbols then edge
  CodeSubgroup trimmed;         // C^F|A^F
  CodeSubgroup nondynamical;    // C^F:A^F
  Alphabet alphabet;            // effective alphabet
  CodeSubgroup interface;       // {(a, pi(a))} over symbols then effective
  bool state_isomorphic = false;  // |S| = |effective| and C^F trim and proper at S
};

struct SecondCanonicalDecomposition {
  std::vector<std::size_t> core_constraints;  // empty when cycle-free
  NormalRealization effective_core;           // leaf roots replaced by effective symbols
  std::vector<LeafSummary> leaves;            // sorted by edge label
};

// Requires a connected realization without boundary that is trim and proper
// at every internal state slot. A cycle-free input is split at its first edge.
SecondCanonicalDecomposition second_canonical_decomposition(const NormalRealization& r);
NormalRealization lift(const SecondCanonicalDecomposition& d);

}  // namespace normgraph
