#include "normgraph/duality.hpp"

#include <algorithm>

namespace normgraph {

NormalRealization dualize(const NormalRealization& r) {
  NormalRealization d = r;
  for (auto& c : d.constraints) c.code = orthogonal(c.code);
  for (auto& s : d.states) {
    if (std::binary_search(d.boundary.begin(), d.boundary.end(), s.id)) continue;
    Homomorphism phi = s.iso ? *s.iso : Homomorphism::identity(s.alphabet);
    Homomorphism psi = phi.adjoint().inverse().negate();
    s.iso = psi.is_identity() ? std::nullopt : std::optional<Homomorphism>(psi);
  }
  return d;
}

DualityCheck verify_duality(const NormalRealization& r) {
  DualityCheck out;
  auto b = behavior_bundle(r);
  out.orthogonal_code = orthogonal(b.code);
  out.dual_code = external_behavior(dualize(r));
  out.lemma_code = cross_section(sum(orthogonal(b.universe), orthogonal(b.validity)), b.external);
  out.dual_route = out.dual_code == out.orthogonal_code;
  out.lemma_route = out.lemma_code == out.orthogonal_code;
  return out;
}

}  // namespace normgraph
