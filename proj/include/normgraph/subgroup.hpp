#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "normgraph/alphabet.hpp"
#include "normgraph/howell.hpp"

namespace normgraph {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

// Subgroup of a product space, stored by canonical generator rows.
class CodeSubgroup {
 public:
  CodeSubgroup() = default;
  // Canonicalizes the subgroup generated by `rows`.
  CodeSubgroup(ProductSpace ambient, const std::vector<Element>& rows);

  static CodeSubgroup zero(ProductSpace ambient) { return CodeSubgroup(std::move(ambient), {}); }
  static CodeSubgroup full(ProductSpace ambient);

  const ProductSpace& ambient() const { return ambient_; }
  const std::vector<Element>& rows() const { return rows_; }
  Order order() const;
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return order() == ambient_.order(); }
  bool contains(const Element& x) const;
  // Canonical coset representative of x.
  Element reduce(const Element& x) const;
  // Element of the subgroup extending values on the leading factors.
  std::optional<Element> extend(const Element& prefix) const;

  // Howell form of the lifted rows.
  const HowellForm& howell_form() const { return form_; }

  friend bool operator==(const CodeSubgroup& a, const CodeSubgroup& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  ProductSpace ambient_;
  std::vector<Element> rows_;
  HowellForm form_;
};

// C^perp under sum x_i y_i / m_i.
CodeSubgroup orthogonal(const CodeSubgroup& c);
// C|part, factors in the order given.
CodeSubgroup project(const CodeSubgroup& c, const std::vector<std::string>& part);
// C:part = elements of C zero outside part, restricted to part.
CodeSubgroup cross_section(const CodeSubgroup& c, const std::vector<std::string>& part);
CodeSubgroup sum(const CodeSubgroup& a, const CodeSubgroup& b);
CodeSubgroup intersect(const CodeSubgroup& a, const CodeSubgroup& b);

// Same subgroup with factors permuted into `order`.
CodeSubgroup rearrange(const CodeSubgroup& c, const std::vector<std::string>& order);
// Same coordinates with new labels.
CodeSubgroup relabel(const CodeSubgroup& c, const std::vector<std::string>& labels);
// Image under the inclusion of c's factors into `big`, zero elsewhere.
CodeSubgroup embed(const CodeSubgroup& c, const ProductSpace& big);
// c x d on the concatenated space.
CodeSubgroup direct_product(const CodeSubgroup& c, const CodeSubgroup& d);
// {x in big : x|c.ambient in c}.
CodeSubgroup cylinder(const CodeSubgroup& c, const ProductSpace& big);
// Natural join on shared labels (alphabets must agree), projected onto `keep`.
CodeSubgroup join(const CodeSubgroup& a, const CodeSubgroup& b, const std::vector<std::string>& keep);

void for_each_element(const CodeSubgroup& c, const std::function<void(const Element&)>& fn,
                      std::uint64_t cap = kDefaultEnumerationCap);
std::vector<Element> enumerate(const CodeSubgroup& c, std::uint64_t cap = kDefaultEnumerationCap);

// Lexicographically smallest element of each coset of `sub` in `c`.
std::vector<Element> quotient_transversal(const CodeSubgroup& c, const CodeSubgroup& sub,
                                          std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace normgraph
