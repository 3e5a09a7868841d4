#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "normgraph/zmod.hpp"

namespace normgraph {

// Howell normal form of a submodule of (Z_N)^ncols. Rows are in echelon
// order, each pivot is a divisor of N, entries above a pivot are reduced
// modulo it, and for every k the rows with pivot >= k span the elements of
// the submodule whose first k coordinates vanish.
struct HowellForm {
  Int modulus = 1;
  std::size_t ncols = 0;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  // Additive order of row i.
  Int row_order(std::size_t i) const { return modulus / rows[i][pivots[i]]; }
  Order order() const;

  // Reduces x against the rows. Returns the coefficient of each row when
  // x lies in the span, std::nullopt otherwise.
  std::optional<Vec> coefficients(Vec x) const;
  bool contains(const Vec& x) const { return coefficients(x).has_value(); }
  // Canonical representative of x modulo the span.
  Vec reduce(Vec x) const;
  // Some element of the span agreeing with x on the first prefix.size()
  // coordinates, if one exists.
  std::optional<Vec> extend(const Vec& prefix) const;
};

HowellForm howell(std::vector<Vec> rows, std::size_t ncols, Int modulus);

}  // namespace normgraph
