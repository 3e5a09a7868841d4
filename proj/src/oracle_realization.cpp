#include <map>

#include "normgraph/error.hpp"
#include "normgraph/oracle.hpp"

namespace normgraph::oracle {

ElementSet behavior(const NormalRealization& r) {
  auto rep = validate(r, false);
  if (!rep.ok()) throw Error(ErrorCode::ValidationFailed, rep.str());
  std::vector<std::string> order = r.external_labels();
  auto tails = r.internal_states();
  order.insert(order.end(), tails.begin(), tails.end());
  std::vector<Factor> fs;
  std::map<std::string, std::size_t> pos;
  for (const auto& l : order) {
    pos[l] = fs.size();
    fs.push_back({l, r.alphabet(l)});
  }
  ProductSpace space(fs);
  ElementSet out(space);

  struct Check {
    const ConstraintDef* c;
    std::size_t ci;
    ElementSet table;
  };
  // Constraints grouped by the last variable they depend on.
  std::vector<std::vector<Check>> checks(order.size() + 1);
  for (std::size_t ci = 0; ci < r.constraints.size(); ++ci) {
    const auto& c = r.constraints[ci];
    std::size_t last = 0;
    for (const auto& v : c.vars) last = std::max(last, pos.at(v) + 1);
    checks[last].push_back({&c, ci, span(c.code.ambient(), c.code.rows())});
  }
  std::map<std::string, std::size_t> head_at;
  std::map<std::string, Homomorphism> maps;
  for (const auto& t : tails) {
    head_at[t] = r.ends(t).second;
    maps.emplace(t, r.edge_map(t));
  }
  std::vector<Element> value(order.size());
  auto ok = [&](const Check& ch) {
    Element x;
    for (const auto& v : ch.c->vars) {
      Element val = value[pos.at(v)];
      auto h = head_at.find(v);
      if (h != head_at.end() && h->second == ch.ci) val = maps.at(v).apply(val);
      x.insert(x.end(), val.begin(), val.end());
    }
    return ch.table.contains(x);
  };
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    for (const auto& ch : checks[depth])
      if (!ok(ch)) return;
    if (depth == order.size()) {
      Element x;
      for (const auto& v : value) x.insert(x.end(), v.begin(), v.end());
      out.insert(x);
      return;
    }
    const Alphabet& a = fs[depth].alphabet;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
      value[depth] = a.element_at(i);
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return out;
}

ElementSet code(const NormalRealization& r) { return project(behavior(r), r.external_labels()); }

}  // namespace normgraph::oracle
