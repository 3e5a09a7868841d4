#pragma once

#include <string>
#include <utility>
#include <vector>

#include "normgraph/homomorphism.hpp"
#include "normgraph/subgroup.hpp"

namespace normgraph {

// P/X materialized as an alphabet of invariant factors, with the natural
// map and a section back into P.
class Quotient {
 public:
  Quotient() = default;
  Quotient(CodeSubgroup numerator, CodeSubgroup denominator);

  const CodeSubgroup& numerator() const { return num_; }
  const CodeSubgroup& denominator() const { return den_; }
  const Alphabet& alphabet() const { return alphabet_; }

  Element project(const Element& x) const;  // x must lie in P
  Element lift(const Element& q) const;     // some preimage in P

 private:
  CodeSubgroup num_, den_;
  Alphabet alphabet_;
  std::vector<Vec> v_;     // coefficient change of basis
  std::vector<Vec> vinv_;
  std::vector<std::size_t> kept_;  // columns of v_ with a nontrivial factor
  std::vector<Int> factors_;
};

// Smith normal form over Z_n: returns the diagonal (length min(rows, cols),
// zeros included) together with V and V^{-1} such that U A V is diagonal.
struct SmithForm {
  std::vector<Int> diagonal;
  std::vector<Vec> v, vinv;
};
SmithForm smith_form(std::vector<Vec> a, std::size_t cols, Int n);

// {(x, pi(x)) : x in proj} over proj's factors followed by `state`.
CodeSubgroup interface_code(const CodeSubgroup& proj, const Quotient& q, const std::string& state);

// Decomposition of C over the partition (A, B) of its factors.
struct Ftsp {
  std::vector<std::string> part_a, part_b;
  CodeSubgroup proj_a, cross_a, proj_b, cross_b;
  Quotient quot_a, quot_b;
  Homomorphism iso;           // quot_a.alphabet() -> quot_b.alphabet()
  CodeSubgroup interface_a;   // {(a, pi_A(a))} over part_a + state_a
  CodeSubgroup interface_b;   // {(b, pi_B(b))} over part_b + state_b
  std::string state_a, state_b;
};

Ftsp ftsp_decompose(const CodeSubgroup& c, const std::vector<std::string>& part_a,
                    const std::string& state_a = "qa", const std::string& state_b = "qb");

// Pairs of lexicographically smallest coset representatives matched by C.
std::vector<std::pair<Element, Element>> ftsp_correspondence(const Ftsp& f);

}  // namespace normgraph
