#include "normgraph/graphcore.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "normgraph/error.hpp"

namespace normgraph {

int cyclomatic_number(const NormalRealization& r) {
  auto e = static_cast<int>(r.internal_states().size());
  auto v = static_cast<int>(r.constraints.size());
  auto c = static_cast<int>(components(r).size());
  return e - v + c;
}

bool is_cycle_free(const NormalRealization& r) { return cyclomatic_number(r) == 0; }

bool is_cut_edge(const NormalRealization& r, const std::string& state) {
  if (!r.has_variable(state) || r.kind(state) != VarKind::State) throw Error(ErrorCode::UnknownEdge, state);
  return components(r, {state}).size() > components(r).size();
}

std::vector<std::size_t> two_core_constraints(const NormalRealization& r, std::mt19937_64* rng) {
  std::size_t n = r.constraints.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& s : r.internal_states()) {
    auto [a, b] = r.ends(s);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = adj[i].size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    for (auto i : order) {
      if (!alive[i] || deg[i] > 1) continue;
      alive[i] = false;
      changed = true;
      for (auto j : adj[i])
        if (alive[j]) --deg[j];
    }
  }
  std::vector<std::size_t> core;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) core.push_back(i);
  return core;
}

TwoCore two_core(const NormalRealization& r, std::mt19937_64* rng) {
  if (components(r).size() > 1) throw Error(ErrorCode::Disconnected, "two_core needs a connected realization");
  TwoCore out;
  out.core_constraints = two_core_constraints(r, rng);
  std::set<std::size_t> core(out.core_constraints.begin(), out.core_constraints.end());
  if (core.empty()) {
    out.leaves.push_back({r, std::nullopt});
    return out;
  }
  out.core = fragment_of(r, out.core_constraints);
  // Components of the stripped constraints, joined by edges avoiding the core.
  std::vector<std::string> removed;
  std::map<std::size_t, std::string> attach;
  for (const auto& s : r.internal_states()) {
    auto [a, b] = r.ends(s);
    bool ca = core.count(a) > 0, cb = core.count(b) > 0;
    if (ca || cb) removed.push_back(s);
    if (ca != cb) attach[ca ? b : a] = s;
  }
  for (const auto& comp : components(r, removed)) {
    if (core.count(comp.front())) continue;
    LeafFragment leaf{fragment_of(r, comp), std::nullopt};
    for (auto i : comp)
      if (attach.count(i)) leaf.attachment = attach[i];
    out.leaves.push_back(std::move(leaf));
  }
  std::sort(out.leaves.begin(), out.leaves.end(),
            [](const LeafFragment& a, const LeafFragment& b) { return a.attachment < b.attachment; });
  return out;
}

std::string to_dot(const NormalRealization& r, const std::vector<std::size_t>& core) {
  std::set<std::size_t> in(core.begin(), core.end());
  std::ostringstream os;
  os << "graph realization {\n";
  for (std::size_t i = 0; i < r.constraints.size(); ++i)
    os << "  \"" << r.constraints[i].id << "\" [shape=" << (in.count(i) ? "box, style=bold" : "box") << "];\n";
  for (const auto& s : r.internal_states()) {
    auto [a, b] = r.ends(s);
    os << "  \"" << r.constraints[a].id << "\" -- \"" << r.constraints[b].id << "\" [label=\"" << s << "\"];\n";
  }
  for (const auto& ext : r.external_labels()) {
    auto inc = r.incident(ext);
    if (inc.empty()) continue;
    os << "  \"ext:" << ext << "\" [shape=plaintext, label=\"" << ext << "\"];\n";
    os << "  \"" << r.constraints[inc[0]].id << "\" -- \"ext:" << ext << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace normgraph
