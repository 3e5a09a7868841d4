#include "normgraph/realization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "normgraph/error.hpp"

namespace normgraph {

std::string head_label(const std::string& state) { return state + "@head"; }

VarKind NormalRealization::kind(const std::string& id) const {
  for (const auto& s : symbols)
    if (s.id == id) return VarKind::Symbol;
  for (const auto& s : states)
    if (s.id == id)
      return std::binary_search(boundary.begin(), boundary.end(), id) ? VarKind::Boundary : VarKind::State;
  throw Error(ErrorCode::UnknownVariable, id);
}

bool NormalRealization::has_variable(const std::string& id) const {
  for (const auto& s : symbols)
    if (s.id == id) return true;
  for (const auto& s : states)
    if (s.id == id) return true;
  return false;
}

const Alphabet& NormalRealization::alphabet(const std::string& id) const {
  for (const auto& s : symbols)
    if (s.id == id) return s.alphabet;
  return state(id).alphabet;
}

const StateDef& NormalRealization::state(const std::string& id) const {
  for (const auto& s : states)
    if (s.id == id) return s;
  throw Error(ErrorCode::UnknownVariable, id);
}

std::size_t NormalRealization::constraint_index(const std::string& id) const {
  for (std::size_t i = 0; i < constraints.size(); ++i)
    if (constraints[i].id == id) return i;
  throw Error(ErrorCode::UnknownVariable, "constraint " + id);
}

std::vector<std::string> NormalRealization::internal_states() const {
  std::vector<std::string> out;
  for (const auto& s : states)
    if (!std::binary_search(boundary.begin(), boundary.end(), s.id)) out.push_back(s.id);
  return out;
}

std::vector<std::string> NormalRealization::symbol_labels() const {
  std::vector<std::string> out;
  for (const auto& s : symbols) out.push_back(s.id);
  return out;
}

std::vector<std::string> NormalRealization::external_labels() const {
  auto out = symbol_labels();
  out.insert(out.end(), boundary.begin(), boundary.end());
  return out;
}

std::vector<std::size_t> NormalRealization::incident(const std::string& var) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (const auto& v : constraints[i].vars)
      if (v == var) out.push_back(i);
  return out;
}

std::pair<std::size_t, std::size_t> NormalRealization::ends(const std::string& st) const {
  if (kind(st) != VarKind::State) throw Error(ErrorCode::NotAStateEdge, st);
  auto inc = incident(st);
  if (inc.size() != 2) throw Error(ErrorCode::ValidationFailed, "state " + st + " does not have two ends");
  return {inc[0], inc[1]};
}

Homomorphism NormalRealization::edge_map(const std::string& st) const {
  const auto& s = state(st);
  return s.iso ? *s.iso : Homomorphism::identity(s.alphabet);
}

void NormalRealization::sort_boundary() {
  std::sort(boundary.begin(), boundary.end());
  boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
}

std::string ValidationReport::str() const {
  std::string s;
  for (const auto& i : issues) s += i.kind + " [" + i.subject + "]: " + i.message + "\n";
  return s;
}

ValidationReport validate(const NormalRealization& r, bool require_connected) {
  ValidationReport rep;
  auto issue = [&](std::string kind, std::string subject, std::string msg) {
    rep.issues.push_back({std::move(kind), std::move(subject), std::move(msg)});
  };
  std::map<std::string, int> seen;
  for (const auto& s : r.symbols) ++seen[s.id];
  for (const auto& s : r.states) ++seen[s.id];
  for (auto& [id, n] : seen)
    if (n > 1) issue("duplicate", id, "variable declared more than once");
  std::set<std::string> cids;
  for (const auto& c : r.constraints)
    if (!cids.insert(c.id).second) issue("duplicate", c.id, "constraint declared more than once");
  if (!std::is_sorted(r.boundary.begin(), r.boundary.end()) ||
      std::adjacent_find(r.boundary.begin(), r.boundary.end()) != r.boundary.end())
    issue("boundary", "", "boundary list must be sorted and unique");
  std::set<std::string> state_ids;
  for (const auto& s : r.states) state_ids.insert(s.id);
  for (const auto& b : r.boundary)
    if (!state_ids.count(b)) issue("boundary", b, "boundary entry is not a declared state");

  std::map<std::string, int> degree;
  for (const auto& c : r.constraints) {
    std::set<std::string> local;
    for (const auto& v : c.vars) {
      if (!local.insert(v).second) issue("self-loop", c.id, "variable " + v + " appears twice");
      if (!seen.count(v)) {
        issue("unknown-variable", c.id, "references undeclared " + v);
        continue;
      }
      ++degree[v];
    }
    if (c.code.ambient().labels() != c.vars) {
      issue("code-labels", c.id, "code factors do not match the variable list");
      continue;
    }
    for (const auto& v : c.vars)
      if (seen.count(v) && !c.code.ambient().alphabet(v).same_group(r.alphabet(v)))
        issue("alphabet-mismatch", c.id, "slot " + v + " has alphabet " + c.code.ambient().alphabet(v).str() +
                                             ", variable has " + r.alphabet(v).str());
  }
  for (const auto& s : r.symbols)
    if (degree[s.id] != 1) issue("degree", s.id, "symbol has degree " + std::to_string(degree[s.id]) + ", expected 1");
  for (const auto& s : r.states) {
    bool bnd = std::binary_search(r.boundary.begin(), r.boundary.end(), s.id);
    int want = bnd ? 1 : 2;
    if (degree[s.id] != want)
      issue("degree", s.id, "state has degree " + std::to_string(degree[s.id]) + ", expected " + std::to_string(want));
    if (s.iso) {
      if (bnd) issue("iso", s.id, "boundary variable carries an edge map");
      else if (!s.iso->source().same_group(s.alphabet) || !s.iso->target().same_group(s.alphabet))
        issue("iso", s.id, "edge map alphabets differ from the state alphabet");
      else if (!s.iso->is_bijective())
        issue("iso", s.id, "edge map is not an automorphism");
    }
  }
  if (require_connected && rep.ok() && r.constraints.size() > 1 && components(r).size() > 1)
    issue("disconnected", "", "constraint graph has " + std::to_string(components(r).size()) + " components");
  return rep;
}

namespace {

void require_valid(const NormalRealization& r) {
  auto rep = validate(r, false);
  if (!rep.ok()) throw Error(ErrorCode::ValidationFailed, rep.str());
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

}  // namespace

BehaviorBundle behavior_bundle(const NormalRealization& r) {
  require_valid(r);
  BehaviorBundle b;
  b.external = r.external_labels();
  b.tails = r.internal_states();
  for (const auto& t : b.tails) b.heads.push_back(head_label(t));
  std::vector<Factor> fs;
  for (const auto& l : b.external) fs.push_back({l, r.alphabet(l)});
  for (const auto& l : b.tails) fs.push_back({l, r.alphabet(l)});
  for (std::size_t i = 0; i < b.tails.size(); ++i) fs.push_back({b.heads[i], r.alphabet(b.tails[i])});
  ProductSpace big(fs);

  std::map<std::string, std::size_t> head_at;
  for (const auto& t : b.tails) head_at[t] = r.ends(t).second;
  std::vector<Element> urows;
  for (std::size_t ci = 0; ci < r.constraints.size(); ++ci) {
    const auto& c = r.constraints[ci];
    for (const auto& row : c.code.rows()) {
      Element x = big.zero();
      for (const auto& v : c.vars) {
        auto it = head_at.find(v);
        std::string slot = (it != head_at.end() && it->second == ci) ? head_label(v) : v;
        big.set_slot(x, slot, c.code.ambient().slot(row, v));
      }
      urows.push_back(std::move(x));
    }
  }
  b.universe = CodeSubgroup(big, urows);

  std::vector<Element> vrows;
  for (const auto& l : b.external)
    for (std::size_t k = 0; k < r.alphabet(l).rank(); ++k) {
      Element x = big.zero();
      x[big.offset(big.index_of(l)) + k] = 1;
      vrows.push_back(std::move(x));
    }
  for (const auto& t : b.tails) {
    const Alphabet& a = r.alphabet(t);
    auto phi = r.edge_map(t);
    for (std::size_t k = 0; k < a.rank(); ++k) {
      Element e(a.rank(), 0);
      e[k] = 1;
      Element x = big.zero();
      big.set_slot(x, t, e);
      big.set_slot(x, head_label(t), phi.apply(e));
      vrows.push_back(std::move(x));
    }
  }
  b.validity = CodeSubgroup(big, vrows);
  b.extended = intersect(b.universe, b.validity);
  auto et = b.external;
  et.insert(et.end(), b.tails.begin(), b.tails.end());
  b.behavior = project(b.extended, et);
  b.code = project(b.extended, b.external);
  return b;
}

CodeSubgroup external_behavior(const NormalRealization& r) { return behavior_bundle(r).code; }

std::vector<std::vector<std::size_t>> components(const NormalRealization& r, const std::vector<std::string>& removed) {
  std::size_t n = r.constraints.size();
  UnionFind uf(n);
  std::set<std::string> skip(removed.begin(), removed.end());
  for (const auto& s : r.internal_states()) {
    if (skip.count(s)) continue;
    auto inc = r.incident(s);
    if (inc.size() == 2) uf.join(inc[0], inc[1]);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, v] : groups) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

NormalRealization fragment_of(const NormalRealization& r, const std::vector<std::size_t>& idx) {
  std::set<std::size_t> in(idx.begin(), idx.end());
  NormalRealization f;
  for (std::size_t i = 0; i < r.constraints.size(); ++i)
    if (in.count(i)) f.constraints.push_back(r.constraints[i]);
  std::set<std::string> used;
  for (const auto& c : f.constraints) used.insert(c.vars.begin(), c.vars.end());
  for (const auto& s : r.symbols)
    if (used.count(s.id)) f.symbols.push_back(s);
  for (const auto& s : r.states) {
    if (!used.count(s.id)) continue;
    auto inc = r.incident(s.id);
    std::size_t inside = 0;
    for (auto i : inc) inside += in.count(i);
    if (inside == 2) {
      f.states.push_back(s);
    } else {
      f.states.push_back({s.id, s.alphabet, std::nullopt});
      f.boundary.push_back(s.id);
    }
  }
  f.sort_boundary();
  return f;
}

NormalRealization rename_variable(const NormalRealization& r, const std::string& from, const std::string& to) {
  if (from == to) return r;
  NormalRealization out = r;
  for (auto& s : out.symbols)
    if (s.id == from) s.id = to;
  for (auto& s : out.states)
    if (s.id == from) s.id = to;
  for (auto& b : out.boundary)
    if (b == from) b = to;
  out.sort_boundary();
  for (auto& c : out.constraints) {
    bool touched = false;
    for (auto& v : c.vars)
      if (v == from) {
        v = to;
        touched = true;
      }
    if (touched) c.code = relabel(c.code, c.vars);
  }
  return out;
}

namespace {

void rename_slot(ConstraintDef& c, const std::string& from, const std::string& to) {
  for (auto& v : c.vars)
    if (v == from) v = to;
  c.code = relabel(c.code, c.vars);
}

}  // namespace

CutResult cut(const NormalRealization& r, const std::vector<std::string>& edges) {
  require_valid(r);
  for (const auto& e : edges)
    if (!r.has_variable(e) || r.kind(e) != VarKind::State) throw Error(ErrorCode::UnknownEdge, e);
  CutResult out;
  auto comps = components(r, edges);
  std::map<std::size_t, std::size_t> frag_of;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (auto i : comps[k]) frag_of[i] = k;
    out.fragments.push_back(fragment_of(r, comps[k]));
  }
  for (const auto& e : edges) {
    auto [t, h] = r.ends(e);
    CutEdge ce{e, frag_of[t], frag_of[h], e, e, r.state(e).iso};
    if (ce.tail_fragment == ce.head_fragment) {
      NormalRealization& f = out.fragments[ce.tail_fragment];
      std::string hl = e + "'";
      while (f.has_variable(hl)) hl += "'";
      ce.head_label = hl;
      for (auto& s : f.states)
        if (s.id == e) s.iso.reset();
      const std::string& hid = r.constraints[h].id;
      for (auto& c : f.constraints)
        if (c.id == hid) rename_slot(c, e, hl);
      f.states.push_back({hl, r.alphabet(e), std::nullopt});
      f.boundary.push_back(e);
      f.boundary.push_back(hl);
      f.sort_boundary();
    }
    out.edges.push_back(std::move(ce));
  }
  return out;
}

NormalRealization connect(const NormalRealization& f1, const std::string& a, const NormalRealization& f2,
                          const std::string& b, std::optional<Homomorphism> iso) {
  if (!std::binary_search(f1.boundary.begin(), f1.boundary.end(), a)) throw Error(ErrorCode::UnknownVariable, a);
  if (!std::binary_search(f2.boundary.begin(), f2.boundary.end(), b)) throw Error(ErrorCode::UnknownVariable, b);
  const Alphabet& aa = f1.alphabet(a);
  const Alphabet& ab = f2.alphabet(b);
  if (iso) {
    if (!iso->source().same_group(aa) || !iso->target().same_group(ab))
      throw Error(ErrorCode::AlphabetMismatch, "edge map does not match " + a + ", " + b);
    if (iso->is_identity()) iso.reset();
  } else if (!aa.same_group(ab)) {
    throw Error(ErrorCode::AlphabetMismatch, a + " vs " + b);
  }
  NormalRealization g = rename_variable(f2, b, a);
  std::set<std::string> vars1;
  for (const auto& s : f1.symbols) vars1.insert(s.id);
  for (const auto& s : f1.states) vars1.insert(s.id);
  for (const auto& s : g.symbols)
    if (vars1.count(s.id)) throw Error(ErrorCode::FragmentsOverlap, s.id);
  for (const auto& s : g.states)
    if (s.id != a && vars1.count(s.id)) throw Error(ErrorCode::FragmentsOverlap, s.id);
  for (const auto& c : g.constraints)
    for (const auto& c1 : f1.constraints)
      if (c.id == c1.id) throw Error(ErrorCode::FragmentsOverlap, "constraint " + c.id);

  NormalRealization out = f1;
  for (auto& s : out.states)
    if (s.id == a) s.iso = iso;
  out.boundary.erase(std::find(out.boundary.begin(), out.boundary.end(), a));
  out.symbols.insert(out.symbols.end(), g.symbols.begin(), g.symbols.end());
  for (const auto& s : g.states)
    if (s.id != a) out.states.push_back(s);
  for (const auto& bd : g.boundary)
    if (bd != a) out.boundary.push_back(bd);
  out.constraints.insert(out.constraints.end(), g.constraints.begin(), g.constraints.end());
  out.sort_boundary();
  return out;
}

NormalRealization self_connect(const NormalRealization& f, const std::string& a, const std::string& b,
                               std::optional<Homomorphism> iso) {
  if (a == b) throw Error(ErrorCode::SelfLoop, a);
  if (!std::binary_search(f.boundary.begin(), f.boundary.end(), a)) throw Error(ErrorCode::UnknownVariable, a);
  if (!std::binary_search(f.boundary.begin(), f.boundary.end(), b)) throw Error(ErrorCode::UnknownVariable, b);
  if (iso) {
    if (!iso->source().same_group(f.alphabet(a)) || !iso->target().same_group(f.alphabet(b)))
      throw Error(ErrorCode::AlphabetMismatch, a + ", " + b);
  } else if (!f.alphabet(a).same_group(f.alphabet(b))) {
    throw Error(ErrorCode::AlphabetMismatch, a + " vs " + b);
  }
  auto ia = f.incident(a), ib = f.incident(b);
  if (ia.size() != 1 || ib.size() != 1) throw Error(ErrorCode::ValidationFailed, "boundary degree");
  if (ia[0] == ib[0]) throw Error(ErrorCode::SelfLoop, a + " and " + b + " share a constraint");
  NormalRealization out = f;
  rename_slot(out.constraints[ib[0]], b, a);
  out.states.erase(std::find_if(out.states.begin(), out.states.end(), [&](const StateDef& s) { return s.id == b; }));
  out.boundary.erase(std::find(out.boundary.begin(), out.boundary.end(), b));
  out.boundary.erase(std::find(out.boundary.begin(), out.boundary.end(), a));
  if (iso && ia[0] > ib[0]) iso = iso->inverse();
  if (iso && iso->is_identity()) iso.reset();
  for (auto& s : out.states)
    if (s.id == a) s.iso = iso;
  return out;
}

NormalRealization reassemble(const CutResult& c) {
  std::vector<std::optional<NormalRealization>> groups;
  std::vector<std::size_t> group_of(c.fragments.size());
  for (std::size_t i = 0; i < c.fragments.size(); ++i) {
    groups.emplace_back(c.fragments[i]);
    group_of[i] = i;
  }
  auto edges = c.edges;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    std::size_t g1 = group_of[e.tail_fragment], g2 = group_of[e.head_fragment];
    if (g1 == g2) {
      groups[g1] = rename_variable(self_connect(*groups[g1], e.tail_label, e.head_label, e.iso), e.tail_label, e.state);
      continue;
    }
    // Pending ends in g2 may share a label with a variable of g1.
    for (std::size_t j = k + 1; j < edges.size(); ++j) {
      auto fix = [&](std::size_t frag, std::string& label) {
        if (group_of[frag] != g2 || !groups[g1]->has_variable(label)) return;
        std::string fresh = label + "'";
        while (groups[g1]->has_variable(fresh) || groups[g2]->has_variable(fresh)) fresh += "'";
        groups[g2] = rename_variable(*groups[g2], label, fresh);
        label = fresh;
      };
      fix(edges[j].tail_fragment, edges[j].tail_label);
      fix(edges[j].head_fragment, edges[j].head_label);
    }
    groups[g1] = rename_variable(connect(*groups[g1], e.tail_label, *groups[g2], e.head_label, e.iso), e.tail_label, e.state);
    groups[g2].reset();
    for (auto& g : group_of)
      if (g == g2) g = g1;
  }
  std::optional<NormalRealization> out;
  for (auto& g : groups) {
    if (!g) continue;
    if (!out) {
      out = std::move(g);
      continue;
    }
    // Disjoint pieces: concatenate.
    out->symbols.insert(out->symbols.end(), g->symbols.begin(), g->symbols.end());
    out->states.insert(out->states.end(), g->states.begin(), g->states.end());
    out->boundary.insert(out->boundary.end(), g->boundary.begin(), g->boundary.end());
    out->constraints.insert(out->constraints.end(), g->constraints.begin(), g->constraints.end());
    out->sort_boundary();
  }
  return out ? *out : NormalRealization{};
}

bool same_structure(const NormalRealization& a, const NormalRealization& b) {
  auto sym_map = [](const NormalRealization& r) {
    std::map<std::string, Alphabet> m;
    for (const auto& s : r.symbols) m[s.id] = s.alphabet;
    return m;
  };
  if (sym_map(a) != sym_map(b)) return false;
  if (a.boundary != b.boundary) return false;
  if (a.states.size() != b.states.size() || a.constraints.size() != b.constraints.size()) return false;
  for (const auto& c : a.constraints) {
    bool found = false;
    for (const auto& d : b.constraints) {
      if (c.id != d.id) continue;
      found = true;
      std::set<std::string> va(c.vars.begin(), c.vars.end()), vb(d.vars.begin(), d.vars.end());
      if (va != vb || rearrange(d.code, c.vars) != c.code) return false;
    }
    if (!found) return false;
  }
  for (const auto& s : a.states) {
    if (!b.has_variable(s.id) || b.kind(s.id) != a.kind(s.id)) return false;
    if (!(b.alphabet(s.id) == s.alphabet)) return false;
    if (a.kind(s.id) != VarKind::State) continue;
    auto [ta, ha] = a.ends(s.id);
    auto [tb, hb] = b.ends(s.id);
    (void)ha;
    (void)hb;
    auto pa = a.edge_map(s.id), pb = b.edge_map(s.id);
    if (a.constraints[ta].id == b.constraints[tb].id) {
      if (!(pa == pb)) return false;
    } else if (!(pa == pb.inverse())) {
      return false;
    }
  }
  return true;
}

CodeSubgroup equality_code(const Alphabet& a, const std::vector<std::string>& labels) {
  std::vector<Factor> fs;
  for (const auto& l : labels) fs.push_back({l, a});
  ProductSpace s(fs);
  std::vector<Element> rows;
  for (std::size_t k = 0; k < a.rank(); ++k) {
    Element x = s.zero();
    for (std::size_t i = 0; i < labels.size(); ++i) x[i * a.rank() + k] = 1;
    rows.push_back(std::move(x));
  }
  return CodeSubgroup(s, rows);
}

CodeSubgroup zero_sum_code(const Alphabet& a, const std::vector<std::string>& labels) {
  std::vector<Factor> fs;
  for (const auto& l : labels) fs.push_back({l, a});
  ProductSpace s(fs);
  std::vector<Element> rows;
  for (std::size_t i = 1; i < labels.size(); ++i)
    for (std::size_t k = 0; k < a.rank(); ++k) {
      Element x = s.zero();
      x[k] = 1;
      x[i * a.rank() + k] = a.moduli()[k] - 1;
      rows.push_back(std::move(x));
    }
  return CodeSubgroup(s, rows);
}

NormalRealization normalize(const GeneralRealization& g) {
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> slots;  // var -> (constraint, position)
  std::map<std::string, const SymbolDef*> decl;
  std::set<std::string> is_state;
  for (const auto& s : g.symbols) decl[s.id] = &s;
  for (const auto& s : g.states) {
    decl[s.id] = &s;
    is_state.insert(s.id);
  }
  for (std::size_t ci = 0; ci < g.constraints.size(); ++ci) {
    const auto& c = g.constraints[ci];
    if (c.code.ambient().size() != c.vars.size())
      throw Error(ErrorCode::ValidationFailed, "constraint " + c.id + " arity differs from its code");
    for (std::size_t k = 0; k < c.vars.size(); ++k) {
      if (!decl.count(c.vars[k])) throw Error(ErrorCode::UnknownVariable, c.vars[k]);
      if (!c.code.ambient().factors()[k].alphabet.same_group(decl[c.vars[k]]->alphabet))
        throw Error(ErrorCode::AlphabetMismatch, c.id + "/" + c.vars[k]);
      slots[c.vars[k]].push_back({ci, k});
    }
  }
  // New label of each slot; empty means the slot is projected away.
  std::vector<std::vector<std::string>> slot_label(g.constraints.size());
  for (std::size_t ci = 0; ci < g.constraints.size(); ++ci) slot_label[ci].assign(g.constraints[ci].vars.size(), "");

  NormalRealization out;
  std::vector<ConstraintDef> extra;
  auto replicate = [&](const std::string& v, const Alphabet& a, bool keep_symbol) {
    std::vector<std::string> labels;
    if (keep_symbol) labels.push_back(v);
    std::size_t k = 0;
    for (auto [ci, pos] : slots[v]) {
      std::string rep = v + "~" + std::to_string(++k);
      slot_label[ci][pos] = rep;
      labels.push_back(rep);
      out.states.push_back({rep, a, std::nullopt});
    }
    extra.push_back({"eq:" + v, labels, equality_code(a, labels)});
  };
  for (const auto& s : g.symbols) {
    out.symbols.push_back(s);
    auto& sl = slots[s.id];
    if (sl.empty()) {
      extra.push_back({"free:" + s.id, {s.id}, CodeSubgroup::full(ProductSpace({{s.id, s.alphabet}}))});
    } else if (sl.size() == 1) {
      slot_label[sl[0].first][sl[0].second] = s.id;
    } else {
      replicate(s.id, s.alphabet, true);
    }
  }
  for (const auto& s : g.states) {
    auto& sl = slots[s.id];
    if (sl.size() <= 1) continue;
    if (sl.size() == 2 && sl[0].first != sl[1].first) {
      slot_label[sl[0].first][sl[0].second] = s.id;
      slot_label[sl[1].first][sl[1].second] = s.id;
      out.states.push_back({s.id, s.alphabet, std::nullopt});
    } else {
      replicate(s.id, s.alphabet, false);
    }
  }
  for (std::size_t ci = 0; ci < g.constraints.size(); ++ci) {
    const auto& c = g.constraints[ci];
    auto positional = c.code.ambient().labels();
    std::vector<std::string> keep_pos, keep_new;
    for (std::size_t k = 0; k < c.vars.size(); ++k)
      if (!slot_label[ci][k].empty()) {
        keep_pos.push_back(positional[k]);
        keep_new.push_back(slot_label[ci][k]);
      }
    auto code = relabel(project(c.code, keep_pos), keep_new);
    out.constraints.push_back({c.id, keep_new, code});
  }
  out.constraints.insert(out.constraints.end(), extra.begin(), extra.end());
  return out;
}

}  // namespace normgraph
