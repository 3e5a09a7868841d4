#include "normgraph/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "normgraph/duality.hpp"
#include "normgraph/error.hpp"

namespace normgraph {

namespace {

using SlotMap = std::function<Element(const Element&)>;

// Image of c under a homomorphism acting on one factor.
CodeSubgroup map_slot(const CodeSubgroup& c, const std::string& label, const Alphabet& target, const SlotMap& f) {
  std::vector<Factor> fs = c.ambient().factors();
  for (auto& x : fs)
    if (x.label == label) x.alphabet = target;
  ProductSpace s(fs);
  std::vector<Element> rows;
  for (const auto& r : c.rows()) {
    Element y = s.zero();
    for (const auto& x : c.ambient().factors()) {
      auto v = c.ambient().slot(r, x.label);
      s.set_slot(y, x.label, x.label == label ? f(v) : v);
    }
    rows.push_back(std::move(y));
  }
  return CodeSubgroup(s, rows);
}

bool subgroup_of(const CodeSubgroup& small, const CodeSubgroup& big) {
  for (const auto& r : small.rows())
    if (!big.contains(r)) return false;
  return true;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TrimProper code_trim_proper(const CodeSubgroup& c, const std::string& label) {
  TrimProper t;
  t.trimmed = project(c, {label});
  t.nondynamical = cross_section(c, {label});
  t.trim = t.trimmed.is_full();
  t.proper = t.nondynamical.is_zero();
  t.effective_order = t.trimmed.order() / t.nondynamical.order();
  return t;
}

TrimProper trim_proper(const NormalRealization& f, const std::string& var) {
  auto ext = f.external_labels();
  if (std::find(ext.begin(), ext.end(), var) == ext.end()) throw Error(ErrorCode::UnknownVariable, var + " is not external");
  return code_trim_proper(external_behavior(f), var);
}

bool is_trim(const NormalRealization& f) {
  auto c = external_behavior(f);
  for (const auto& v : f.external_labels())
    if (!code_trim_proper(c, v).trim) return false;
  return true;
}

bool is_proper(const NormalRealization& f) {
  auto c = external_behavior(f);
  for (const auto& v : f.external_labels())
    if (!code_trim_proper(c, v).proper) return false;
  return true;
}

namespace {

template <class Pred>
bool all_constraint_slots(const NormalRealization& f, Scope scope, Pred pred) {
  for (const auto& c : f.constraints)
    for (const auto& v : c.vars) {
      if (scope == Scope::States && f.kind(v) != VarKind::State) continue;
      if (!pred(code_trim_proper(c.code, v))) return false;
    }
  return true;
}

}  // namespace

bool internally_trim(const NormalRealization& f, Scope scope) {
  return all_constraint_slots(f, scope, [](const TrimProper& t) { return t.trim; });
}

bool internally_proper(const NormalRealization& f, Scope scope) {
  return all_constraint_slots(f, scope, [](const TrimProper& t) { return t.proper; });
}

LocalReduction local_reduce(const NormalRealization& r, const std::string& constraint, const std::string& state) {
  if (!r.has_variable(state) || r.kind(state) != VarKind::State) throw Error(ErrorCode::NotAStateEdge, state);
  std::size_t near = r.constraint_index(constraint);
  auto [tail, head] = r.ends(state);
  if (near != tail && near != head) throw Error(ErrorCode::NotAStateEdge, state + " is not incident on " + constraint);
  std::size_t far = near == tail ? head : tail;

  std::vector<std::string> near_edges;
  for (const auto& v : r.constraints[near].vars)
    if (r.kind(v) == VarKind::State) near_edges.push_back(v);
  std::vector<std::size_t> comp;
  for (const auto& c : components(r, near_edges))
    if (std::find(c.begin(), c.end(), far) != c.end()) comp = c;
  auto cf = external_behavior(fragment_of(r, comp));
  auto tp = code_trim_proper(cf, state);

  LocalReduction out;
  out.realization = r;
  out.old_order = r.alphabet(state).order();
  out.new_order = tp.effective_order;
  if (tp.trim && tp.proper) return out;
  out.changed = true;

  Quotient q(tp.trimmed, tp.nondynamical);
  const Alphabet& qa = q.alphabet();
  auto pi = [&](const Element& s) { return q.project(s); };
  Homomorphism phi = r.edge_map(state);
  Homomorphism to_far = near == tail ? phi : phi.inverse();
  Homomorphism to_near = to_far.inverse();

  auto& cons = out.realization.constraints;
  const CodeSubgroup& fc = cons[far].code;
  auto far_in = intersect(fc, cylinder(tp.trimmed, fc.ambient()));
  cons[far].code = map_slot(far_in, state, qa, pi);

  const CodeSubgroup& nc = cons[near].code;
  std::vector<Element> pre;
  for (const auto& row : tp.trimmed.rows()) pre.push_back(to_near.apply(row));
  CodeSubgroup near_p(tp.trimmed.ambient(), pre);
  auto near_in = intersect(nc, cylinder(near_p, nc.ambient()));
  cons[near].code = map_slot(near_in, state, qa, [&](const Element& s) { return pi(to_far.apply(s)); });

  for (auto& s : out.realization.states)
    if (s.id == state) {
      s.alphabet = qa;
      s.iso.reset();
    }
  return out;
}

NormalRealization reduce_until_fixpoint(const NormalRealization& r) {
  NormalRealization cur = r;
  bool changed = true;
  while (changed) {
    changed = false;
    auto states = cur.internal_states();
    std::sort(states.begin(), states.end());
    for (const auto& s : states) {
      auto [t, h] = cur.ends(s);
      for (std::size_t end : {t, h}) {
        auto lr = local_reduce(cur, cur.constraints[end].id, s);
        if (lr.changed) {
          cur = std::move(lr.realization);
          changed = true;
        }
      }
    }
  }
  return cur;
}

namespace {

// Syndromes s - phi^{-1}(s') over the internal edges, as the image of u.
CodeSubgroup syndromes(const NormalRealization& r, const BehaviorBundle& b, const CodeSubgroup& u) {
  std::vector<Factor> fs;
  for (const auto& t : b.tails) fs.push_back({t, r.alphabet(t)});
  ProductSpace s(fs);
  std::map<std::string, Homomorphism> inv;
  for (const auto& t : b.tails) inv.emplace(t, r.edge_map(t).inverse());
  std::vector<Element> rows;
  for (const auto& row : u.rows()) {
    Element y = s.zero();
    for (const auto& t : b.tails) {
      const Alphabet& a = r.alphabet(t);
      auto v = u.ambient().slot(row, t);
      auto w = inv.at(t).apply(u.ambient().slot(row, head_label(t)));
      s.set_slot(y, t, a.sub(v, w));
    }
    rows.push_back(std::move(y));
  }
  return CodeSubgroup(s, rows);
}

}  // namespace

ObsCtrlReport obs_ctrl(const NormalRealization& f) {
  auto b = behavior_bundle(f);
  ObsCtrlReport out;
  out.external_unobservable = cross_section(b.code, f.boundary);
  out.internal_unobservable = cross_section(b.behavior, b.tails);
  out.total_unobservable = cross_section(b.behavior, concat(f.boundary, b.tails));
  out.internal_controllable = syndromes(f, b, b.universe);
  out.externally_observable = out.external_unobservable.is_zero();
  out.internally_observable = out.internal_unobservable.is_zero();
  out.totally_observable = out.total_unobservable.is_zero();
  out.externally_controllable = project(b.code, f.boundary).is_full();
  out.internally_controllable = out.internal_controllable.is_full();
  out.totally_controllable = out.externally_controllable && out.internally_controllable;
  out.checks_independent = intersect(orthogonal(b.universe), orthogonal(b.validity)).is_zero();
  out.universe = b.universe.order();
  out.extended = b.extended.order();
  out.internal_states = out.internal_controllable.ambient().order();
  out.controllable = out.internal_controllable.order();
  return out;
}

ControllabilityTest controllability_test(const NormalRealization& r) {
  auto rep = obs_ctrl(r);
  ControllabilityTest t;
  t.universe = rep.universe;
  t.extended = rep.extended;
  t.states = rep.internal_states;
  t.controllable = rep.controllable;
  t.is_controllable = rep.internally_controllable;
  t.identity_holds = rep.universe / rep.extended == rep.controllable && rep.controllable.divides(rep.internal_states);
  return t;
}

namespace {

struct Side {
  NormalRealization frag;
  std::vector<std::string> edges;  // boundary edges into F''
  CodeSubgroup code;
};

// Subgroup over F-side edge values carried to F''-side coordinates.
CodeSubgroup to_far_side(const NormalRealization& r, const CodeSubgroup& c, const std::set<std::size_t>& side) {
  CodeSubgroup out = c;
  for (const auto& f : c.ambient().factors()) {
    auto [t, h] = r.ends(f.label);
    Homomorphism m = side.count(t) ? r.edge_map(f.label) : r.edge_map(f.label).inverse();
    out = map_slot(out, f.label, f.alphabet, [&](const Element& x) { return m.apply(x); });
  }
  return out;
}

BehavioralReport behavioral_impl(const NormalRealization& r, const std::vector<std::size_t>& fi,
                                 const std::vector<std::size_t>& gi, const std::vector<std::size_t>& hi) {
  std::set<std::size_t> fs(fi.begin(), fi.end()), gs(gi.begin(), gi.end());
  auto side = [&](const std::vector<std::size_t>& idx) {
    Side s;
    s.frag = fragment_of(r, idx);
    s.edges = s.frag.boundary;
    s.code = external_behavior(s.frag);
    return s;
  };
  Side f = side(fi), g = side(gi);
  auto h = fragment_of(r, hi);
  auto ch = external_behavior(h);
  auto edges = concat(f.edges, g.edges);

  BehavioralReport out;
  auto bar_f = to_far_side(r, project(f.code, f.edges), fs);
  auto bar_g = to_far_side(r, project(g.code, g.edges), gs);
  auto bar = rearrange(direct_product(bar_f, bar_g), edges);
  out.controllability_condition = subgroup_of(bar, project(ch, edges));
  auto low_f = to_far_side(r, cross_section(f.code, f.edges), fs);
  auto low_g = to_far_side(r, cross_section(g.code, g.edges), gs);
  auto low = rearrange(direct_product(low_f, low_g), edges);
  out.observability_condition = subgroup_of(cross_section(ch, edges), low);

  auto c = external_behavior(r);
  auto af = f.frag.symbol_labels(), ag = g.frag.symbol_labels();
  auto both = concat(af, ag);
  out.behaviorally_controllable = project(c, both) == rearrange(direct_product(project(c, af), project(c, ag)), both);
  out.behaviorally_observable =
      cross_section(c, both) == rearrange(direct_product(cross_section(c, af), cross_section(c, ag)), both);

  auto beh = behavior_bundle(r).behavior;
  auto hyp = [&](const Side& s) {
    return cross_section(s.code, s.edges).is_zero() && project(beh, s.edges) == project(s.code, s.edges);
  };
  out.controllability_hypotheses = hyp(f) && hyp(g);
  return out;
}

}  // namespace

BehavioralReport behavioral_ctrl_obs(const NormalRealization& r, const std::vector<std::string>& f,
                                     const std::vector<std::string>& f2) {
  auto rep = validate(r);
  if (!rep.ok()) throw Error(ErrorCode::ValidationFailed, rep.str());
  if (!r.boundary.empty()) throw Error(ErrorCode::ValidationFailed, "behavioral analysis needs a realization without boundary");
  std::set<std::size_t> a, b;
  for (const auto& id : f) a.insert(r.constraint_index(id));
  for (const auto& id : f2) b.insert(r.constraint_index(id));
  for (auto i : a)
    if (b.count(i)) throw Error(ErrorCode::FragmentsOverlap, r.constraints[i].id);
  std::vector<std::size_t> fi(a.begin(), a.end()), gi(b.begin(), b.end()), hi;
  for (std::size_t i = 0; i < r.constraints.size(); ++i)
    if (!a.count(i) && !b.count(i)) hi.push_back(i);
  if (fi.empty() || gi.empty() || hi.empty()) throw Error(ErrorCode::BadPartition, "three nonempty parts required");
  for (const auto& s : r.internal_states()) {
    auto [t, h] = r.ends(s);
    if ((a.count(t) && b.count(h)) || (b.count(t) && a.count(h)))
      throw Error(ErrorCode::FragmentsOverlap, "edge " + s + " joins the two fragments directly");
  }
  auto out = behavioral_impl(r, fi, gi, hi);
  out.observability_hypotheses = behavioral_impl(dualize(r), fi, gi, hi).controllability_hypotheses;
  return out;
}

StateTrimStatus state_trim_status(const NormalRealization& r, const std::string& state) {
  if (!r.has_variable(state) || r.kind(state) != VarKind::State) throw Error(ErrorCode::NotAStateEdge, state);
  auto c = cut(r, {state});
  if (c.fragments.size() != 1) throw Error(ErrorCode::EdgeIsCutSet, state);
  const auto& e = c.edges[0];
  const auto& frag = c.fragments[0];
  auto code = external_behavior(frag);
  Homomorphism phi = r.edge_map(state);
  const Alphabet& a = r.alphabet(state);

  StateTrimStatus st;
  st.unobservable_transitions = cross_section(code, {e.tail_label, e.head_label});
  const auto& u = st.unobservable_transitions;
  st.diagonal = std::all_of(u.rows().begin(), u.rows().end(), [&](const Element& x) {
    return phi.apply(u.ambient().slot(x, e.tail_label)) == u.ambient().slot(x, e.head_label);
  });
  auto graph = relabel(phi.graph("x", "y"), {e.tail_label, e.head_label});
  st.no_nonzero_diagonal = intersect(u, graph).is_zero();
  st.trivial = u.is_zero();

  auto bundle = behavior_bundle(r);
  st.state_trim = project(bundle.behavior, {state}).is_full();
  st.dual_state_trim = st.diagonal;
  st.dual_state_trim_direct = project(behavior_bundle(dualize(r)).behavior, {state}).is_full();
  st.observable = st.no_nonzero_diagonal;
  auto as = concat(r.external_labels(), {state});
  st.observable_direct = cross_section(project(bundle.behavior, as), {state}).is_zero();

  Homomorphism inv = phi.inverse();
  ProductSpace sj({{state, a}});
  std::vector<Element> rows;
  for (const auto& x : code.rows())
    rows.push_back(a.sub(code.ambient().slot(x, e.tail_label), inv.apply(code.ambient().slot(x, e.head_label))));
  st.controllable = CodeSubgroup(sj, rows).is_full();
  st.externally_observable = st.trivial;
  st.externally_controllable = project(code, {e.tail_label, e.head_label}).is_full();
  return st;
}

}  // namespace normgraph
