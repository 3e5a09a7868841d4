#pragma once

#include <vector>

#include "normgraph/alphabet.hpp"
#include "normgraph/subgroup.hpp"

namespace normgraph {

// y_i = sum_j matrix[i][j] x_j mod target modulus i.
class Homomorphism {
 public:
  Homomorphism() = default;
  Homomorphism(Alphabet source, Alphabet target, std::vector<Vec> matrix);

  static Homomorphism identity(const Alphabet& a);
  static Homomorphism negation(const Alphabet& a);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const std::vector<Vec>& matrix() const { return matrix_; }

  Element apply(const Element& x) const;
  bool is_identity() const;
  bool is_bijective() const;

  Homomorphism compose(const Homomorphism& inner) const;  // this o inner
  Homomorphism negate() const;
  Homomorphism inverse() const;  // throws NotInvertible
  // Adjoint under the standard pairings; source and target swap.
  Homomorphism adjoint() const;

  // {(x, f(x))} over factors (in_label, out_label).
  CodeSubgroup graph(const std::string& in_label, const std::string& out_label) const;

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;

 private:
  Alphabet source_, target_;
  std::vector<Vec> matrix_;
};

}  // namespace normgraph
