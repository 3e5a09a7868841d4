#include "normgraph/minimize.hpp"

#include <algorithm>

#include "normgraph/analysis.hpp"
#include "normgraph/error.hpp"
#include "normgraph/graphcore.hpp"
#include "normgraph/quotient.hpp"

namespace normgraph {

namespace {

void require_cycle_free(const NormalRealization& r) {
  auto rep = validate(r, false);
  if (!rep.ok()) throw Error(ErrorCode::ValidationFailed, rep.str());
  if (components(r).size() > 1) throw Error(ErrorCode::Disconnected, "realization is not connected");
  if (!is_cycle_free(r)) throw Error(ErrorCode::NotCycleFree, "cyclomatic number " + std::to_string(cyclomatic_number(r)));
}

std::vector<std::string> concat_labels(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

NormalRealization minimize_cycle_free(const NormalRealization& r) {
  require_cycle_free(r);
  return reduce_until_fixpoint(r);
}

StateSpaceReport verify_state_space_theorem(const NormalRealization& r, const std::string& state) {
  require_cycle_free(r);
  if (!r.has_variable(state) || r.kind(state) != VarKind::State) throw Error(ErrorCode::NotAStateEdge, state);
  if (!internally_trim(r, Scope::States) || !internally_proper(r, Scope::States))
    throw Error(ErrorCode::NotTrimProper, "realization is not trim and proper at its states");
  auto c = external_behavior(r);
  auto parts = cut(r, {state});
  const auto& e = parts.edges[0];
  StateSpaceReport rep;
  rep.state = state;
  rep.state_order = r.alphabet(state).order();
  std::vector<std::string> tail_all = parts.fragments[e.tail_fragment].external_labels();
  std::vector<std::string> head_all = parts.fragments[e.head_fragment].external_labels();
  for (const auto& l : tail_all)
    if (c.ambient().has(l)) rep.tail_symbols.push_back(l);
  for (const auto& l : head_all)
    if (c.ambient().has(l)) rep.head_symbols.push_back(l);
  auto effective = [&](const std::vector<std::string>& side) {
    if (side.empty()) return Order(1);
    return project(c, side).order() / cross_section(c, side).order();
  };
  rep.tail_effective = effective(rep.tail_symbols);
  rep.head_effective = effective(rep.head_symbols);
  if (rep.tail_symbols.empty() || rep.head_symbols.empty()) {
    rep.reconstructs = true;
    return rep;
  }
  auto f = ftsp_decompose(c, rep.tail_symbols, "#qa", "#qb");
  auto graph = f.iso.graph("#qa", "#qb");
  auto left = join(f.interface_a, graph, concat_labels(rep.tail_symbols, {"#qb"}));
  auto both = join(left, f.interface_b, c.ambient().labels());
  rep.reconstructs = both == c;
  return rep;
}

std::map<std::string, Element> recover_internal_states(const NormalRealization& f,
                                                       const std::map<std::string, Element>& external) {
  require_cycle_free(f);
  if (!internally_proper(f, Scope::States))
    throw Error(ErrorCode::NotInternallyProper, "fragment is not proper at its states");
  // Slot values per constraint.
  std::vector<std::map<std::string, Element>> known(f.constraints.size());
  for (const auto& l : f.external_labels()) {
    auto it = external.find(l);
    if (it == external.end()) throw Error(ErrorCode::UnknownVariable, "missing value for " + l);
    if (!f.alphabet(l).contains(it->second)) throw Error(ErrorCode::NotInExternalBehavior, l + " out of range");
    for (auto i : f.incident(l)) known[i][l] = it->second;
  }
  std::map<std::string, Element> out;
  auto states = f.internal_states();
  bool progress = true;
  while (out.size() < states.size() && progress) {
    progress = false;
    for (std::size_t i = 0; i < f.constraints.size(); ++i) {
      const auto& con = f.constraints[i];
      std::vector<std::string> unknown;
      for (const auto& v : con.vars)
        if (!known[i].count(v)) unknown.push_back(v);
      if (unknown.size() != 1) continue;
      const std::string& s = unknown[0];
      std::vector<std::string> order;
      Element prefix;
      for (const auto& v : con.vars)
        if (v != s) {
          order.push_back(v);
          prefix.insert(prefix.end(), known[i][v].begin(), known[i][v].end());
        }
      order.push_back(s);
      auto sol = rearrange(con.code, order).extend(prefix);
      if (!sol) throw Error(ErrorCode::NotInExternalBehavior, "no valid value for " + s + " at " + con.id);
      Element v(sol->begin() + static_cast<std::ptrdiff_t>(prefix.size()), sol->end());
      auto [t, h] = f.ends(s);
      Homomorphism phi = f.edge_map(s);
      Element tail_value = i == t ? v : phi.inverse().apply(v);
      out[s] = tail_value;
      known[t][s] = tail_value;
      known[h][s] = phi.apply(tail_value);
      progress = true;
    }
  }
  if (out.size() < states.size()) throw Error(ErrorCode::NotInExternalBehavior, "states left undetermined");
  for (std::size_t i = 0; i < f.constraints.size(); ++i) {
    const auto& con = f.constraints[i];
    Element x;
    for (const auto& v : con.vars) x.insert(x.end(), known[i][v].begin(), known[i][v].end());
    if (!con.code.contains(x)) throw Error(ErrorCode::NotInExternalBehavior, "constraint " + con.id + " violated");
  }
  return out;
}

}  // namespace normgraph
