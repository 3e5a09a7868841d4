#include "normgraph/homomorphism.hpp"

#include "normgraph/error.hpp"

namespace normgraph {

Homomorphism::Homomorphism(Alphabet source, Alphabet target, std::vector<Vec> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  const auto& ms = source_.moduli();
  const auto& mt = target_.moduli();
  if (matrix_.size() != mt.size()) throw Error(ErrorCode::NotWellDefined, "matrix row count");
  for (std::size_t i = 0; i < mt.size(); ++i) {
    if (matrix_[i].size() != ms.size()) throw Error(ErrorCode::NotWellDefined, "matrix column count");
    for (std::size_t j = 0; j < ms.size(); ++j) {
      matrix_[i][j] = mod(matrix_[i][j], mt[i]);
      if (mod(matrix_[i][j] * ms[j], mt[i]) != 0)
        throw Error(ErrorCode::NotWellDefined, "entry does not respect source order");
    }
  }
}

Homomorphism Homomorphism::identity(const Alphabet& a) {
  std::vector<Vec> m(a.rank(), Vec(a.rank(), 0));
  for (std::size_t i = 0; i < a.rank(); ++i) m[i][i] = 1;
  return Homomorphism(a, a, m);
}

Homomorphism Homomorphism::negation(const Alphabet& a) { return identity(a).negate(); }

Element Homomorphism::apply(const Element& x) const {
  Element y(target_.rank(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    Int m = target_.moduli()[i], s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s = mod(s + matrix_[i][j] * x[j], m);
    y[i] = s;
  }
  return y;
}

bool Homomorphism::is_identity() const {
  if (!source_.same_group(target_)) return false;
  for (std::size_t i = 0; i < matrix_.size(); ++i)
    for (std::size_t j = 0; j < matrix_[i].size(); ++j)
      if (matrix_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

CodeSubgroup Homomorphism::graph(const std::string& in_label, const std::string& out_label) const {
  ProductSpace s({{in_label, source_}, {out_label, target_}});
  std::vector<Element> rows;
  for (std::size_t j = 0; j < source_.rank(); ++j) {
    Element e(source_.rank(), 0);
    e[j] = 1;
    Element r = e;
    auto y = apply(e);
    r.insert(r.end(), y.begin(), y.end());
    rows.push_back(std::move(r));
  }
  return CodeSubgroup(s, rows);
}

bool Homomorphism::is_bijective() const {
  if (source_.order() != target_.order()) return false;
  auto g = graph("x", "y");
  auto kernel = cross_section(g, {"x"});
  return kernel.is_zero();
}

Homomorphism Homomorphism::compose(const Homomorphism& inner) const {
  if (!inner.target_.same_group(source_)) throw Error(ErrorCode::AlphabetMismatch, "compose");
  std::vector<Vec> m(target_.rank(), Vec(inner.source_.rank(), 0));
  for (std::size_t j = 0; j < inner.source_.rank(); ++j) {
    Element e(inner.source_.rank(), 0);
    e[j] = 1;
    auto y = apply(inner.apply(e));
    for (std::size_t i = 0; i < y.size(); ++i) m[i][j] = y[i];
  }
  return Homomorphism(inner.source_, target_, m);
}

Homomorphism Homomorphism::negate() const {
  auto m = matrix_;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto& v : m[i]) v = mod(-v, target_.moduli()[i]);
  return Homomorphism(source_, target_, m);
}

Homomorphism Homomorphism::inverse() const {
  if (!is_bijective()) throw Error(ErrorCode::NotInvertible, "not an isomorphism");
  // Solve through the graph with the target placed first.
  auto g = graph("x", "y");
  auto flipped = rearrange(g, {"y", "x"});
  std::vector<Vec> m(source_.rank(), Vec(target_.rank(), 0));
  for (std::size_t j = 0; j < target_.rank(); ++j) {
    Element e(target_.rank(), 0);
    e[j] = 1;
    auto full = flipped.extend(e);
    if (!full) throw Error(ErrorCode::NotInvertible, "graph solve failed");
    for (std::size_t i = 0; i < source_.rank(); ++i) m[i][j] = (*full)[target_.rank() + i];
  }
  return Homomorphism(target_, source_, m);
}

Homomorphism Homomorphism::adjoint() const {
  const auto& ms = source_.moduli();
  const auto& mt = target_.moduli();
  std::vector<Vec> b(ms.size(), Vec(mt.size(), 0));
  for (std::size_t i = 0; i < mt.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) b[j][i] = mod(matrix_[i][j] * ms[j] / mt[i], ms[j]);
  return Homomorphism(target_, source_, b);
}

}  // namespace normgraph
