#pragma once

#include "normgraph/realization.hpp"

namespace normgraph {

// Constraint codes replaced by their orthogonals; an internal edge with head
// map phi gets -(adjoint phi)^{-1}, so plain edges become sign inverters.
NormalRealization dualize(const NormalRealization& r);

struct DualityCheck {
  CodeSubgroup orthogonal_code;  // C^perp
  CodeSubgroup dual_code;        // code of the dual realization
  CodeSubgroup lemma_code;       // (U^perp + V^perp) : external
  bool dual_route = false;
  bool lemma_route = false;
  bool ok() const { return dual_route && lemma_route; }
};

DualityCheck verify_duality(const NormalRealization& r);

}  // namespace normgraph
