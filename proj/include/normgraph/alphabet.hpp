#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "normgraph/zmod.hpp"

namespace normgraph {

using Element = Vec;

// A finite abelian group: GF(p)^k or Z_m1 x ... x Z_mr.
class Alphabet {
 public:
  enum class Kind { VectorSpace, Cyclic };

  static Alphabet vector_space(Int p, int dim);
  static Alphabet cyclic(std::vector<Int> moduli);

  Kind kind() const { return kind_; }
  bool is_vector_space() const { return kind_ == Kind::VectorSpace; }
  Int field() const { return field_; }
  const std::vector<Int>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  Order order() const;
  std::uint64_t size() const;  // throws when the order exceeds 2^63
  Int exponent() const;

  bool same_group(const Alphabet& o) const { return moduli_ == o.moduli_; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

  bool contains(const Element& x) const;
  Element zero() const { return Element(moduli_.size(), 0); }
  Element add(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

  // Lexicographic indexing, first coordinate most significant.
  std::uint64_t index_of(const Element& x) const;
  Element element_at(std::uint64_t index) const;

  std::string str() const;

 private:
  Kind kind_ = Kind::Cyclic;
  Int field_ = 0;
  std::vector<Int> moduli_;
};

// Pairing value sum x_i y_i / m_i, reduced to num/den in [0, 1).
struct Residue {
  Int num = 0;
  Int den = 1;
  bool is_zero() const { return num == 0; }
  friend bool operator==(const Residue&, const Residue&) = default;
};

struct Factor {
  std::string label;
  Alphabet alphabet;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Ordered product of labelled alphabets.
class ProductSpace {
 public:
  ProductSpace() = default;
  explicit ProductSpace(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  std::size_t width() const { return moduli_.size(); }
  const std::vector<Int>& moduli() const { return moduli_; }
  Int modulus() const { return lcm_; }
  Order order() const;

  bool has(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;
  std::size_t offset(std::size_t factor) const { return offsets_[factor]; }
  const Alphabet& alphabet(const std::string& label) const;
  std::vector<std::string> labels() const;

  // Factors in the given label order.
  ProductSpace select(const std::vector<std::string>& labels) const;
  ProductSpace concat(const ProductSpace& o) const;
  ProductSpace relabel(const std::vector<std::string>& labels) const;

  bool contains(const Element& x) const;
  Element zero() const { return Element(width(), 0); }
  Element add(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;

  // Coordinates of factor `label` inside x.
  Element slot(const Element& x, const std::string& label) const;
  void set_slot(Element& x, const std::string& label, const Element& v) const;

  // Embedding into Z_M with M the lcm of all moduli.
  Vec lift(const Element& x) const;
  Element unlift(const Vec& y) const;

  std::uint64_t index_of(const Element& x) const;
  Element element_at(std::uint64_t index) const;

  Residue pair(const Element& x, const Element& y) const;

  friend bool operator==(const ProductSpace& a, const ProductSpace& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Factor> factors_;
  std::vector<Int> moduli_;
  std::vector<std::size_t> offsets_;
  Int lcm_ = 1;
};

}  // namespace normgraph
