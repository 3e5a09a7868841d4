#pragma once

#include <string>
#include <vector>

#include "normgraph/quotient.hpp"
#include "normgraph/realization.hpp"

namespace normgraph {

struct TrimProper {
  bool trim = false;
  bool proper = false;
  CodeSubgroup trimmed;       // C|V
  CodeSubgroup nondynamical;  // C:V
  Order effective_order;      // |C|V| / |C:V|
};

TrimProper code_trim_proper(const CodeSubgroup& c, const std::string& label);
// At an external variable of the fragment.
TrimProper trim_proper(const NormalRealization& f, const std::string& var);
bool is_trim(const NormalRealization& f);
bool is_proper(const NormalRealization& f);

// States: internal state slots only. All: every slot, symbols and boundary included.
enum class Scope { States, All };
bool internally_trim(const NormalRealization& f, Scope scope = Scope::All);
bool internally_proper(const NormalRealization& f, Scope scope = Scope::All);

struct LocalReduction {
  NormalRealization realization;
  bool changed = false;
  Order old_order, new_order;
};

// Replaces state `state` by C^F|S / C^F:S, where F is the part of the graph
// beyond `constraint` along that edge.
LocalReduction local_reduce(const NormalRealization& r, const std::string& constraint, const std::string& state);
// Local reductions in label order until a full pass changes nothing.
NormalRealization reduce_until_fixpoint(const NormalRealization& r);

struct ObsCtrlReport {
  CodeSubgroup external_unobservable;  // C:S^ext
  CodeSubgroup internal_unobservable;  // B:S^int
  CodeSubgroup total_unobservable;     // B:(S^ext, S^int)
  CodeSubgroup internal_controllable;  // {s - phi^{-1}(s')} over U, tail coordinates
  bool externally_observable = false, internally_observable = false, totally_observable = false;
  bool externally_controllable = false, internally_controllable = false, totally_controllable = false;
  bool checks_independent = false;     // U^perp cap V^perp = 0
  Order universe, extended, internal_states, controllable;
};

ObsCtrlReport obs_ctrl(const NormalRealization& f);

struct ControllabilityTest {
  Order universe, extended, states, controllable;
  bool is_controllable = false;
  bool identity_holds = false;  // |U| / |extended| == |S^c|
};

ControllabilityTest controllability_test(const NormalRealization& r);

struct BehavioralReport {
  bool controllability_condition = false;  // trimmed boundary product inside C''|
  bool behaviorally_controllable = false;  // C|A x A' = C|A x C|A'
  bool controllability_hypotheses = false;
  bool observability_condition = false;    // C'':(S x S') inside the nondynamical product
  bool behaviorally_observable = false;    // C:(A x A') = C:A x C:A'
  bool observability_hypotheses = false;
};

// F and F' given by constraint ids; the rest of the graph forms F''.
BehavioralReport behavioral_ctrl_obs(const NormalRealization& r, const std::vector<std::string>& f,
                                     const std::vector<std::string>& f2);

struct StateTrimStatus {
  CodeSubgroup unobservable_transitions;  // C^(\j) : (S_j, S_j')
  bool diagonal = false;                  // every element has s' = phi(s)
  bool no_nonzero_diagonal = false;
  bool trivial = false;
  bool state_trim = false;                // B|S_j = S_j
  bool dual_state_trim = false;           // = diagonal
  bool dual_state_trim_direct = false;    // dual realization state-trim at S_j
  bool observable = false;                // = no_nonzero_diagonal
  bool observable_direct = false;         // (B|A,S_j) : S_j trivial
  bool controllable = false;              // transition syndromes fill S_j
  bool externally_observable = false;     // of the cut fragment
  bool externally_controllable = false;
};

StateTrimStatus state_trim_status(const NormalRealization& r, const std::string& state);

}  // namespace normgraph
