#include "normgraph/subgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "normgraph/error.hpp"

namespace normgraph {

CodeSubgroup::CodeSubgroup(ProductSpace ambient, const std::vector<Element>& rows)
    : ambient_(std::move(ambient)) {
  std::vector<Vec> lifted;
  for (const auto& r : rows) {
    if (!ambient_.contains(r)) throw Error(ErrorCode::RowOutOfAmbient, "generator outside ambient");
    lifted.push_back(ambient_.lift(r));
  }
  form_ = howell(std::move(lifted), ambient_.width(), ambient_.modulus());
  for (const auto& r : form_.rows) rows_.push_back(ambient_.unlift(r));
}

CodeSubgroup CodeSubgroup::full(ProductSpace ambient) {
  std::vector<Element> rows;
  for (std::size_t i = 0; i < ambient.width(); ++i) {
    Element e(ambient.width(), 0);
    e[i] = 1;
    rows.push_back(e);
  }
  return CodeSubgroup(std::move(ambient), rows);
}

Order CodeSubgroup::order() const { return form_.order(); }

bool CodeSubgroup::contains(const Element& x) const {
  return ambient_.contains(x) && form_.contains(ambient_.lift(x));
}

Element CodeSubgroup::reduce(const Element& x) const {
  return ambient_.unlift(form_.reduce(ambient_.lift(x)));
}

std::optional<Element> CodeSubgroup::extend(const Element& prefix) const {
  Vec lp(prefix.size());
  for (std::size_t i = 0; i < prefix.size(); ++i)
    lp[i] = mod(prefix[i], ambient_.moduli()[i]) * (ambient_.modulus() / ambient_.moduli()[i]);
  auto y = form_.extend(lp);
  if (!y) return std::nullopt;
  return ambient_.unlift(*y);
}

namespace {

// Columns of `labels` inside `space`, in label order.
std::vector<std::size_t> columns_of(const ProductSpace& space, const std::vector<std::string>& labels) {
  std::vector<std::size_t> cols;
  for (const auto& l : labels) {
    std::size_t f = space.index_of(l);
    for (std::size_t k = 0; k < space.factors()[f].alphabet.rank(); ++k) cols.push_back(space.offset(f) + k);
  }
  return cols;
}

void check_part(const ProductSpace& space, const std::vector<std::string>& part) {
  std::set<std::string> seen;
  for (const auto& l : part) {
    if (!space.has(l)) throw Error(ErrorCode::UnknownLabel, l);
    if (!seen.insert(l).second) throw Error(ErrorCode::UnknownLabel, "repeated label " + l);
  }
}

std::vector<std::string> complement(const ProductSpace& space, const std::vector<std::string>& part) {
  std::set<std::string> in(part.begin(), part.end());
  std::vector<std::string> out;
  for (const auto& f : space.factors())
    if (!in.count(f.label)) out.push_back(f.label);
  return out;
}

// Rows of the lifted Howell form that vanish on the first `skip` columns,
// with those columns dropped.
std::vector<Vec> tail_rows(const HowellForm& h, std::size_t skip) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    if (h.pivots[i] >= skip) out.emplace_back(h.rows[i].begin() + static_cast<std::ptrdiff_t>(skip), h.rows[i].end());
  return out;
}

}  // namespace

CodeSubgroup rearrange(const CodeSubgroup& c, const std::vector<std::string>& order) {
  check_part(c.ambient(), order);
  if (order.size() != c.ambient().size()) throw Error(ErrorCode::BadPartition, "rearrange needs every label");
  return project(c, order);
}

CodeSubgroup relabel(const CodeSubgroup& c, const std::vector<std::string>& labels) {
  return CodeSubgroup(c.ambient().relabel(labels), c.rows());
}

CodeSubgroup project(const CodeSubgroup& c, const std::vector<std::string>& part) {
  check_part(c.ambient(), part);
  auto cols = columns_of(c.ambient(), part);
  std::vector<Element> rows;
  for (const auto& r : c.rows()) {
    Element x;
    for (auto k : cols) x.push_back(r[k]);
    rows.push_back(std::move(x));
  }
  return CodeSubgroup(c.ambient().select(part), rows);
}

CodeSubgroup cross_section(const CodeSubgroup& c, const std::vector<std::string>& part) {
  check_part(c.ambient(), part);
  auto rest = complement(c.ambient(), part);
  auto rest_cols = columns_of(c.ambient(), rest);
  auto part_cols = columns_of(c.ambient(), part);
  const auto& h = c.howell_form();
  std::vector<Vec> perm;
  for (const auto& r : h.rows) {
    Vec x;
    for (auto k : rest_cols) x.push_back(r[k]);
    for (auto k : part_cols) x.push_back(r[k]);
    perm.push_back(std::move(x));
  }
  auto h2 = howell(std::move(perm), c.ambient().width(), c.ambient().modulus());
  ProductSpace sub = c.ambient().select(part);
  std::vector<Element> rows;
  for (const auto& t : tail_rows(h2, rest_cols.size())) {
    Element x(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      Int m = c.ambient().moduli()[part_cols[i]];
      x[i] = mod(t[i] / (c.ambient().modulus() / m), m);
    }
    rows.push_back(std::move(x));
  }
  return CodeSubgroup(std::move(sub), rows);
}

CodeSubgroup sum(const CodeSubgroup& a, const CodeSubgroup& b) {
  if (!(a.ambient() == b.ambient())) throw Error(ErrorCode::AmbientMismatch, "sum");
  auto rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return CodeSubgroup(a.ambient(), rows);
}

CodeSubgroup intersect(const CodeSubgroup& a, const CodeSubgroup& b) {
  if (!(a.ambient() == b.ambient())) throw Error(ErrorCode::AmbientMismatch, "intersect");
  const ProductSpace& s = a.ambient();
  std::size_t w = s.width();
  Int n = s.modulus();
  std::vector<Vec> rows;
  for (const auto& r : a.howell_form().rows) {
    Vec x = r;
    x.insert(x.end(), r.begin(), r.end());
    rows.push_back(std::move(x));
  }
  for (const auto& r : b.howell_form().rows) {
    Vec x = r;
    x.resize(2 * w, 0);
    rows.push_back(std::move(x));
  }
  auto h = howell(std::move(rows), 2 * w, n);
  std::vector<Element> out;
  for (const auto& t : tail_rows(h, w)) out.push_back(s.unlift(t));
  return CodeSubgroup(s, out);
}

CodeSubgroup orthogonal(const CodeSubgroup& c) {
  const ProductSpace& s = c.ambient();
  const auto& x = c.howell_form().rows;
  std::size_t k = x.size(), w = s.width();
  Int n = s.modulus();
  // y in C^perp iff sum_j X_rj y_j == 0 mod n for every lifted row r.
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < w; ++j) {
    Vec r(k + w, 0);
    for (std::size_t i = 0; i < k; ++i) r[i] = x[i][j];
    r[k + j] = 1;
    rows.push_back(std::move(r));
  }
  auto h = howell(std::move(rows), k + w, n);
  std::vector<Element> out;
  for (const auto& t : tail_rows(h, k)) {
    Element y(w);
    for (std::size_t j = 0; j < w; ++j) y[j] = mod(t[j], s.moduli()[j]);
    out.push_back(std::move(y));
  }
  return CodeSubgroup(s, out);
}

CodeSubgroup embed(const CodeSubgroup& c, const ProductSpace& big) {
  std::vector<Element> rows;
  for (const auto& r : c.rows()) {
    Element x = big.zero();
    for (const auto& f : c.ambient().factors()) {
      if (!big.alphabet(f.label).same_group(f.alphabet)) throw Error(ErrorCode::AlphabetMismatch, f.label);
      big.set_slot(x, f.label, c.ambient().slot(r, f.label));
    }
    rows.push_back(std::move(x));
  }
  return CodeSubgroup(big, rows);
}

CodeSubgroup direct_product(const CodeSubgroup& c, const CodeSubgroup& d) {
  ProductSpace big = c.ambient().concat(d.ambient());
  return sum(embed(c, big), embed(d, big));
}

CodeSubgroup cylinder(const CodeSubgroup& c, const ProductSpace& big) {
  auto rest = complement(big, c.ambient().labels());
  return sum(embed(c, big), embed(CodeSubgroup::full(big.select(rest)), big));
}

CodeSubgroup join(const CodeSubgroup& a, const CodeSubgroup& b, const std::vector<std::string>& keep) {
  std::vector<Factor> extra;
  for (const auto& f : b.ambient().factors()) {
    if (!a.ambient().has(f.label)) {
      extra.push_back(f);
    } else if (!a.ambient().alphabet(f.label).same_group(f.alphabet)) {
      throw Error(ErrorCode::AmbientMismatch, "join on " + f.label);
    }
  }
  ProductSpace big = a.ambient().concat(ProductSpace(extra));
  return project(intersect(cylinder(a, big), cylinder(b, big)), keep);
}

void for_each_element(const CodeSubgroup& c, const std::function<void(const Element&)>& fn,
                      std::uint64_t cap) {
  auto n = c.order().to_u64();
  if (!n || *n > cap) throw Error(ErrorCode::TooLargeToEnumerate, "order " + c.order().str());
  const auto& h = c.howell_form();
  const ProductSpace& s = c.ambient();
  std::size_t r = h.rows.size();
  Vec counter(r, 0);
  Vec acc(s.width(), 0);
  Int m = s.modulus();
  while (true) {
    fn(s.unlift(acc));
    std::size_t i = r;
    while (i > 0) {
      --i;
      ++counter[i];
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = mod(acc[k] + h.rows[i][k], m);
      if (counter[i] < h.row_order(i)) break;
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = mod(acc[k] - counter[i] * h.rows[i][k], m);
      counter[i] = 0;
      if (i == 0) return;
    }
    if (r == 0) return;
  }
}

std::vector<Element> enumerate(const CodeSubgroup& c, std::uint64_t cap) {
  std::vector<Element> out;
  for_each_element(c, [&](const Element& x) { out.push_back(x); }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> quotient_transversal(const CodeSubgroup& c, const CodeSubgroup& sub, std::uint64_t cap) {
  if (!(c.ambient() == sub.ambient())) throw Error(ErrorCode::AmbientMismatch, "transversal");
  for (const auto& r : sub.rows())
    if (!c.contains(r)) throw Error(ErrorCode::NotASubgroup, "denominator not contained");
  std::map<Element, Element> best;
  for_each_element(c, [&](const Element& x) {
    Element key = sub.reduce(x);
    auto it = best.find(key);
    if (it == best.end() || x < it->second) best[key] = x;
  }, cap);
  std::vector<Element> out;
  for (auto& [k, v] : best) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace normgraph
