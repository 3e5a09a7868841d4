#include "normgraph/alphabet.hpp"

#include <set>

#include "normgraph/error.hpp"

namespace normgraph {

namespace {
constexpr Int kMaxModulus = Int{1} << 30;
}

Alphabet Alphabet::vector_space(Int p, int dim) {
  if (!is_prime(p)) throw Error(ErrorCode::AlphabetMismatch, "field order must be prime");
  if (dim < 0) throw Error(ErrorCode::AlphabetMismatch, "negative dimension");
  Alphabet a;
  a.kind_ = Kind::VectorSpace;
  a.field_ = p;
  a.moduli_.assign(static_cast<std::size_t>(dim), p);
  return a;
}

Alphabet Alphabet::cyclic(std::vector<Int> moduli) {
  for (Int m : moduli)
    if (m < 2 || m > kMaxModulus) throw Error(ErrorCode::AlphabetMismatch, "bad cyclic modulus");
  Alphabet a;
  a.kind_ = Kind::Cyclic;
  a.moduli_ = std::move(moduli);
  return a;
}

Order Alphabet::order() const {
  Order o;
  for (Int m : moduli_) o *= Order(m);
  return o;
}

std::uint64_t Alphabet::size() const {
  auto v = order().to_u64();
  if (!v || *v > (std::uint64_t{1} << 62)) throw Error(ErrorCode::TooLargeToEnumerate, "alphabet too large");
  return *v;
}

Int Alphabet::exponent() const {
  Int e = 1;
  for (Int m : moduli_) e = lcm(e, m);
  return e;
}

bool Alphabet::contains(const Element& x) const {
  if (x.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= moduli_[i]) return false;
  return true;
}

Element Alphabet::add(const Element& x, const Element& y) const {
  Element r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i] + y[i], moduli_[i]);
  return r;
}

Element Alphabet::neg(const Element& x) const {
  Element r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod(-x[i], moduli_[i]);
  return r;
}

std::uint64_t Alphabet::index_of(const Element& x) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(x[i]);
  return idx;
}

Element Alphabet::element_at(std::uint64_t index) const {
  Element x(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    auto m = static_cast<std::uint64_t>(moduli_[i]);
    x[i] = static_cast<Int>(index % m);
    index /= m;
  }
  return x;
}

std::string Alphabet::str() const {
  if (is_vector_space()) {
    std::string s = "GF(" + std::to_string(field_) + ")";
    if (rank() != 1) s += "^" + std::to_string(rank());
    return s;
  }
  if (moduli_.empty()) return "trivial";
  std::string s;
  for (Int m : moduli_) {
    if (!s.empty()) s += "xZ";
    else s = "Z";
    s += std::to_string(m);
  }
  return s;
}

ProductSpace::ProductSpace(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (!seen.insert(f.label).second) throw Error(ErrorCode::UnknownLabel, "duplicate label " + f.label);
    offsets_.push_back(moduli_.size());
    for (Int m : f.alphabet.moduli()) {
      moduli_.push_back(m);
      lcm_ = lcm(lcm_, m);
      if (lcm_ > kMaxModulus) throw Error(ErrorCode::AlphabetMismatch, "lcm of moduli too large");
    }
  }
}

Order ProductSpace::order() const {
  Order o;
  for (Int m : moduli_) o *= Order(m);
  return o;
}

bool ProductSpace::has(const std::string& label) const {
  for (const auto& f : factors_)
    if (f.label == label) return true;
  return false;
}

std::size_t ProductSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].label == label) return i;
  throw Error(ErrorCode::UnknownLabel, label);
}

const Alphabet& ProductSpace::alphabet(const std::string& label) const {
  return factors_[index_of(label)].alphabet;
}

std::vector<std::string> ProductSpace::labels() const {
  std::vector<std::string> out;
  for (const auto& f : factors_) out.push_back(f.label);
  return out;
}

ProductSpace ProductSpace::select(const std::vector<std::string>& labels) const {
  std::vector<Factor> fs;
  for (const auto& l : labels) fs.push_back(factors_[index_of(l)]);
  return ProductSpace(std::move(fs));
}

ProductSpace ProductSpace::concat(const ProductSpace& o) const {
  auto fs = factors_;
  fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
  return ProductSpace(std::move(fs));
}

ProductSpace ProductSpace::relabel(const std::vector<std::string>& labels) const {
  if (labels.size() != factors_.size()) throw Error(ErrorCode::UnknownLabel, "relabel arity");
  auto fs = factors_;
  for (std::size_t i = 0; i < fs.size(); ++i) fs[i].label = labels[i];
  return ProductSpace(std::move(fs));
}

bool ProductSpace::contains(const Element& x) const {
  if (x.size() != width()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= moduli_[i]) return false;
  return true;
}

Element ProductSpace::add(const Element& x, const Element& y) const {
  Element r(width());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(x[i] + y[i], moduli_[i]);
  return r;
}

Element ProductSpace::neg(const Element& x) const {
  Element r(width());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(-x[i], moduli_[i]);
  return r;
}

Element ProductSpace::slot(const Element& x, const std::string& label) const {
  std::size_t f = index_of(label);
  auto b = x.begin() + static_cast<std::ptrdiff_t>(offsets_[f]);
  return Element(b, b + static_cast<std::ptrdiff_t>(factors_[f].alphabet.rank()));
}

void ProductSpace::set_slot(Element& x, const std::string& label, const Element& v) const {
  std::size_t f = index_of(label);
  for (std::size_t i = 0; i < v.size(); ++i) x[offsets_[f] + i] = v[i];
}

Vec ProductSpace::lift(const Element& x) const {
  Vec y(width());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod(x[i], moduli_[i]) * (lcm_ / moduli_[i]);
  return y;
}

Element ProductSpace::unlift(const Vec& y) const {
  Element x(width());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(y[i] / (lcm_ / moduli_[i]), moduli_[i]);
  return x;
}

std::uint64_t ProductSpace::index_of(const Element& x) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(x[i]);
  return idx;
}

Element ProductSpace::element_at(std::uint64_t index) const {
  Element x(width());
  for (std::size_t i = width(); i-- > 0;) {
    auto m = static_cast<std::uint64_t>(moduli_[i]);
    x[i] = static_cast<Int>(index % m);
    index /= m;
  }
  return x;
}

Residue ProductSpace::pair(const Element& x, const Element& y) const {
  Int s = 0;
  for (std::size_t i = 0; i < width(); ++i)
    s = mod(s + mod(x[i] * y[i], moduli_[i]) * (lcm_ / moduli_[i]), lcm_);
  Int g = gcd(s, lcm_);
  if (s == 0) return {0, 1};
  return {s / g, lcm_ / g};
}

}  // namespace normgraph
