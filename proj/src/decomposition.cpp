#include "normgraph/decomposition.hpp"

#include <algorithm>

#include "normgraph/analysis.hpp"
#include "normgraph/error.hpp"
#include "normgraph/graphcore.hpp"

namespace normgraph {

namespace {

// Replace the slot `label` of c through a relation over (label, tmp).
CodeSubgroup join_slot(const CodeSubgroup& c, const std::string& label, const CodeSubgroup& rel,
                       const std::string& out_label) {
  const std::string tmp = rel.ambient().factors()[1].label;
  std::vector<std::string> keep, names;
  for (const auto& f : c.ambient().factors()) {
    keep.push_back(f.label == label ? tmp : f.label);
    names.push_back(f.label == label ? out_label : f.label);
  }
  return relabel(join(c, rel, keep), names);
}

Element restrict_to(const ProductSpace& s, const Element& x, const std::vector<std::string>& labels) {
  Element out;
  for (const auto& l : labels) {
    auto v = s.slot(x, l);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// Turns effective symbol `label` of r into an internal state feeding a new
// constraint with the given code over (symbols..., label).
void attach_interface(NormalRealization& r, const std::string& label, const std::vector<SymbolDef>& symbols,
                      const CodeSubgroup& code) {
  auto it = std::find_if(r.symbols.begin(), r.symbols.end(), [&](const SymbolDef& s) { return s.id == label; });
  if (it == r.symbols.end()) throw Error(ErrorCode::UnknownVariable, label);
  Alphabet a = it->alphabet;
  r.symbols.erase(it);
  r.states.push_back({label, a, std::nullopt});
  for (const auto& s : symbols) r.symbols.push_back(s);
  ConstraintDef c;
  c.id = "iface:" + label;
  for (const auto& f : code.ambient().factors()) c.vars.push_back(f.label);
  c.code = code;
  r.constraints.push_back(std::move(c));
}

}  // namespace

CanonicalDecomposition canonical_decomposition(const NormalRealization& r) {
  auto rep = validate(r, false);
  if (!rep.ok()) throw Error(ErrorCode::ValidationFailed, rep.str());
  auto c = external_behavior(r);
  CanonicalDecomposition out;
  NormalRealization core = r;
  for (auto& sym : core.symbols) {
    auto tp = code_trim_proper(c, sym.id);
    if (tp.trim && tp.proper) continue;
    InterfaceNode n;
    n.symbol = sym.id;
    n.effective = sym.id + "~";
    n.trimmed = tp.trimmed;
    n.nondynamical = tp.nondynamical;
    Quotient q(tp.trimmed, tp.nondynamical);
    n.alphabet = q.alphabet();
    n.code = interface_code(tp.trimmed, q, n.effective);
    auto& con = core.constraints[core.incident(sym.id).at(0)];
    con.code = join_slot(intersect(con.code, cylinder(tp.trimmed, con.code.ambient())), sym.id, n.code, n.effective);
    std::replace(con.vars.begin(), con.vars.end(), sym.id, n.effective);
    sym.id = n.effective;
    sym.alphabet = n.alphabet;
    out.interfaces.push_back(std::move(n));
  }
  out.core = reduce_until_fixpoint(core);
  return out;
}

NormalRealization compose(const CanonicalDecomposition& d) {
  NormalRealization r = d.core;
  for (const auto& n : d.interfaces)
    attach_interface(r, n.effective, {{n.symbol, n.trimmed.ambient().alphabet(n.symbol)}}, n.code);
  return r;
}

namespace {

LeafSummary summarize_leaf(const NormalRealization& frag, const std::string& edge, const std::string& effective) {
  LeafSummary l;
  l.edge = edge;
  l.effective = effective;
  l.fragment = frag;
  l.symbols = frag.symbol_labels();
  auto order = l.symbols;
  order.push_back(edge);
  l.behavior = rearrange(external_behavior(frag), order);
  l.trimmed = project(l.behavior, l.symbols);
  l.nondynamical = cross_section(l.behavior, l.symbols);
  Quotient q(l.trimmed, l.nondynamical);
  l.alphabet = q.alphabet();
  l.interface = interface_code(l.trimmed, q, effective);
  auto tp = code_trim_proper(l.behavior, edge);
  l.state_isomorphic = tp.trim && tp.proper && l.alphabet.order() == frag.alphabet(edge).order();
  return l;
}

// {(s, pi(a))} over (label, tmp) with s the slot value seen from the other side.
CodeSubgroup root_relation(const LeafSummary& l, const Alphabet& state, const std::optional<Homomorphism>& to_other,
                           const std::string& label, const std::string& tmp) {
  const auto& s = l.behavior.ambient();
  ProductSpace rs({{label, state}, {tmp, l.alphabet}});
  std::vector<Element> rows;
  for (const auto& row : l.behavior.rows()) {
    auto a = restrict_to(s, row, l.symbols);
    auto v = s.slot(row, l.edge);
    if (to_other) v = to_other->apply(v);
    Element x = v;
    auto y = restrict_to(l.interface.ambient(), *l.interface.extend(a), {l.effective});
    x.insert(x.end(), y.begin(), y.end());
    rows.push_back(std::move(x));
  }
  return CodeSubgroup(rs, rows);
}

}  // namespace

SecondCanonicalDecomposition second_canonical_decomposition(const NormalRealization& r) {
  auto rep = validate(r);
  if (!rep.ok()) throw Error(ErrorCode::ValidationFailed, rep.str());
  if (!r.boundary.empty()) throw Error(ErrorCode::ValidationFailed, "realization has boundary states");
  if (!internally_trim(r, Scope::States) || !internally_proper(r, Scope::States))
    throw Error(ErrorCode::NotTrimProper, "reduce the realization to trim and proper states first");
  SecondCanonicalDecomposition out;
  auto states = r.internal_states();
  std::sort(states.begin(), states.end());

  if (is_cycle_free(r)) {
    if (states.empty()) {
      out.effective_core = r;
      return out;
    }
    const std::string& e = states.front();
    auto c = cut(r, {e});
    const auto& ce = c.edges[0];
    auto tail = summarize_leaf(c.fragments[ce.tail_fragment], ce.tail_label, e);
    auto head = summarize_leaf(c.fragments[ce.head_fragment], ce.head_label, e + "'");
    // Both roots expressed in tail coordinates.
    std::optional<Homomorphism> back;
    if (r.state(e).iso) back = r.state(e).iso->inverse();
    auto rt = root_relation(tail, r.alphabet(e), std::nullopt, "#s", tail.effective);
    auto rh = root_relation(head, r.alphabet(e), back, "#s", head.effective);
    auto core_code = join(rt, rh, {tail.effective, head.effective});
    NormalRealization core;
    core.symbols = {{tail.effective, tail.alphabet}, {head.effective, head.alphabet}};
    core.constraints = {{"core:" + e, {tail.effective, head.effective}, core_code}};
    out.effective_core = std::move(core);
    out.leaves = {std::move(tail), std::move(head)};
    return out;
  }

  auto tc = two_core(r);
  out.core_constraints = tc.core_constraints;
  NormalRealization core = *tc.core;
  for (const auto& leaf : tc.leaves) {
    const std::string& e = *leaf.attachment;
    auto l = summarize_leaf(leaf.fragment, e, e);
    std::size_t t = r.ends(e).first;
    bool core_is_tail = std::binary_search(tc.core_constraints.begin(), tc.core_constraints.end(), t);
    // Leaf slot value carried to the core slot.
    std::optional<Homomorphism> to_core;
    if (r.state(e).iso) to_core = core_is_tail ? r.state(e).iso->inverse() : *r.state(e).iso;
    auto rel = root_relation(l, r.alphabet(e), to_core, e, "#eff");
    auto& con = core.constraints[core.incident(e).at(0)];
    con.code = join_slot(con.code, e, rel, e);
    core.states.erase(std::find_if(core.states.begin(), core.states.end(), [&](const StateDef& s) { return s.id == e; }));
    core.boundary.erase(std::find(core.boundary.begin(), core.boundary.end(), e));
    core.symbols.push_back({e, l.alphabet});
    out.leaves.push_back(std::move(l));
  }
  out.effective_core = std::move(core);
  return out;
}

NormalRealization lift(const SecondCanonicalDecomposition& d) {
  NormalRealization r = d.effective_core;
  for (const auto& l : d.leaves) {
    std::vector<SymbolDef> syms;
    for (const auto& s : l.symbols) syms.push_back({s, l.behavior.ambient().alphabet(s)});
    attach_interface(r, l.effective, syms, l.interface);
  }
  return r;
}

}  // namespace normgraph
