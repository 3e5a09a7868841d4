#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normgraph/homomorphism.hpp"
#include "normgraph/subgroup.hpp"

namespace normgraph {

enum class VarKind { Symbol, State, Boundary };

struct SymbolDef {
  std::string id;
  Alphabet alphabet;
  friend bool operator==(const SymbolDef&, const SymbolDef&) = default;
};

// An internal state has two slots; the head value is iso(tail value), with
// the tail at the first-listed incident constraint. Boundary states have one.
struct StateDef {
  std::string id;
  Alphabet alphabet;
  std::optional<Homomorphism> iso;
  friend bool operator==(const StateDef&, const StateDef&) = default;
};

// Factor k of `code` is the slot of vars[k]; labels equal the variable ids.
struct ConstraintDef {
  std::string id;
  std::vector<std::string> vars;
  CodeSubgroup code;
  friend bool operator==(const ConstraintDef&, const ConstraintDef&) = default;
};

// Normal realization; with a nonempty boundary it is a fragment whose
// external variables are the symbols followed by the boundary states.
class NormalRealization {
 public:
  std::vector<SymbolDef> symbols;
  std::vector<StateDef> states;
  std::vector<std::string> boundary;  // ids of one-slot states, kept sorted
  std::vector<ConstraintDef> constraints;

  VarKind kind(const std::string& id) const;
  bool has_variable(const std::string& id) const;
  const Alphabet& alphabet(const std::string& id) const;
  const StateDef& state(const std::string& id) const;
  std::size_t constraint_index(const std::string& id) const;
  const ConstraintDef& constraint(const std::string& id) const { return constraints[constraint_index(id)]; }

  std::vector<std::string> internal_states() const;
  std::vector<std::string> external_labels() const;
  std::vector<std::string> symbol_labels() const;
  std::vector<std::size_t> incident(const std::string& var) const;
  // (tail, head) constraint indices of an internal state.
  std::pair<std::size_t, std::size_t> ends(const std::string& state) const;
  // Iso of a state, identity when absent.
  Homomorphism edge_map(const std::string& state) const;

  void sort_boundary();
  friend bool operator==(const NormalRealization&, const NormalRealization&) = default;
};

struct ValidationIssue {
  std::string kind;
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

ValidationReport validate(const NormalRealization& r, bool require_connected = true);

std::string head_label(const std::string& state);

// Codes attached to a realization. Coordinates of the extended space are the
// external variables, then internal tails, then internal heads.
struct BehaviorBundle {
  std::vector<std::string> external, tails, heads;
  CodeSubgroup universe;  // U: product of constraint codes
  CodeSubgroup validity;  // V: s' = phi(s)
  CodeSubgroup extended;  // U cap V
  CodeSubgroup behavior;  // over external + tails
  CodeSubgroup code;      // over external
};

BehaviorBundle behavior_bundle(const NormalRealization& r);
CodeSubgroup external_behavior(const NormalRealization& r);

// Connected components of the constraint graph, each a sorted list of
// constraint indices, ordered by smallest index.
std::vector<std::vector<std::size_t>> components(const NormalRealization& r,
                                                 const std::vector<std::string>& removed_edges = {});

// The fragment on the given constraints; states with one end inside become
// boundary variables under their own ids.
NormalRealization fragment_of(const NormalRealization& r, const std::vector<std::size_t>& constraint_indices);

struct CutEdge {
  std::string state;
  std::size_t tail_fragment, head_fragment;
  std::string tail_label, head_label;
  std::optional<Homomorphism> iso;
};

struct CutResult {
  std::vector<NormalRealization> fragments;
  std::vector<CutEdge> edges;
};

CutResult cut(const NormalRealization& r, const std::vector<std::string>& edges);

// Joins boundary variable `a` of f1 to boundary variable `b` of f2 as an
// internal state named `a` with head value iso(tail value), tail in f1.
NormalRealization connect(const NormalRealization& f1, const std::string& a, const NormalRealization& f2,
                          const std::string& b, std::optional<Homomorphism> iso = std::nullopt);
// Same, with both boundary variables in f.
NormalRealization self_connect(const NormalRealization& f, const std::string& a, const std::string& b,
                               std::optional<Homomorphism> iso = std::nullopt);
// Undoes cut().
NormalRealization reassemble(const CutResult& c);

// Same realization up to the order of declarations.
bool same_structure(const NormalRealization& a, const NormalRealization& b);

// Renames one variable everywhere.
NormalRealization rename_variable(const NormalRealization& r, const std::string& from, const std::string& to);

// Realization with arbitrary variable degrees. Constraint codes are
// positional: factor k of code belongs to vars[k].
struct GeneralRealization {
  std::vector<SymbolDef> symbols;
  std::vector<SymbolDef> states;
  std::vector<ConstraintDef> constraints;
};

// Replicates high-degree variables through equality constraints, drops
// degree-1 states by projection, and gives unused symbols a free constraint.
NormalRealization normalize(const GeneralRealization& g);

CodeSubgroup equality_code(const Alphabet& a, const std::vector<std::string>& labels);
CodeSubgroup zero_sum_code(const Alphabet& a, const std::vector<std::string>& labels);

}  // namespace normgraph
