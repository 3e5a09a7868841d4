#pragma once

// Exhaustive reference computations. Nothing here uses normal forms: subgroups
// are explicit membership tables built by closure under addition.

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "normgraph/alphabet.hpp"
#include "normgraph/realization.hpp"
#include "normgraph/subgroup.hpp"

namespace normgraph::oracle {

inline constexpr std::uint64_t kMaxAmbient = std::uint64_t{1} << 40;

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(ProductSpace space);

  const ProductSpace& space() const { return space_; }
  bool contains(const Element& x) const { return members_.count(space_.index_of(x)) != 0; }
  void insert(const Element& x) { members_.insert(space_.index_of(x)); }
  std::uint64_t size() const { return members_.size(); }
  std::vector<Element> elements() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.space_ == b.space_ && a.members_ == b.members_;
  }

 private:
  ProductSpace space_;
  std::unordered_set<std::uint64_t> members_;
};

ElementSet span(const ProductSpace& space, const std::vector<Element>& generators);
ElementSet from_subgroup(const CodeSubgroup& c);
ElementSet orthogonal(const ElementSet& c);
ElementSet project(const ElementSet& c, const std::vector<std::string>& part);
ElementSet cross_section(const ElementSet& c, const std::vector<std::string>& part);
ElementSet sum(const ElementSet& a, const ElementSet& b);
ElementSet intersect(const ElementSet& a, const ElementSet& b);
bool is_subgroup(const ElementSet& c);

// Valid configurations over external variables then internal tails, found by
// backtracking through the raw constraint tables.
ElementSet behavior(const NormalRealization& r);
ElementSet code(const NormalRealization& r);

}  // namespace normgraph::oracle
