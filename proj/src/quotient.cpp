#include "normgraph/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "normgraph/error.hpp"

namespace normgraph {
namespace {

std::vector<Vec> identity_matrix(std::size_t n) {
  std::vector<Vec> m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithForm smith_form(std::vector<Vec> a, std::size_t cols, Int n) {
  std::size_t rows = a.size();
  SmithForm out;
  out.v = identity_matrix(cols);
  out.vinv = identity_matrix(cols);
  auto& v = out.v;
  auto& vinv = out.vinv;
  for (auto& r : a)
    for (auto& x : r) x = mod(x, n);

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
    std::swap(vinv[i], vinv[j]);
  };
  // col_i <- s col_i + t col_j ; col_j <- (b/g) col_i - (a/g) col_j
  auto mix_cols = [&](std::size_t i, std::size_t j, Int s, Int t, Int bg, Int ag) {
    auto apply = [&](std::vector<Vec>& m) {
      for (auto& r : m) {
        Int x = r[i], y = r[j];
        r[i] = mod(s * x + t * y, n);
        r[j] = mod(bg * x - ag * y, n);
      }
    };
    apply(a);
    apply(v);
    for (std::size_t k = 0; k < cols; ++k) {
      Int x = vinv[i][k], y = vinv[j][k];
      vinv[i][k] = mod(ag * x + bg * y, n);
      vinv[j][k] = mod(t * x - s * y, n);
    }
  };
  auto scale_col = [&](std::size_t i, Int u) {
    Int ui = inverse_mod(u, n);
    for (auto& r : a) r[i] = mod(r[i] * u, n);
    for (auto& r : v) r[i] = mod(r[i] * u, n);
    for (auto& x : vinv[i]) x = mod(x * ui, n);
  };

  // col_j <- col_j + c col_src
  auto add_col = [&](std::size_t j, std::size_t src, Int c) {
    for (auto& r : a) r[j] = mod(r[j] + c * r[src], n);
    for (auto& r : v) r[j] = mod(r[j] + c * r[src], n);
    for (std::size_t k = 0; k < cols; ++k) vinv[src][k] = mod(vinv[src][k] - c * vinv[j][k], n);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    std::size_t bi = rows, bj = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (bi == rows || gcd(a[i][j], n) < best)) {
          best = gcd(a[i][j], n);
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    std::swap(a[t], a[bi]);
    swap_cols(t, bj);
    while (true) {
      scale_col(t, normalizing_unit(a[t][t], n));
      Int d = a[t][t];
      bool mixed = false;
      for (std::size_t i = t + 1; i < rows && !mixed; ++i) {
        Int y = a[i][t];
        if (y == 0) continue;
        if (y % d == 0) {
          for (std::size_t k = 0; k < cols; ++k) a[i][k] = mod(a[i][k] - (y / d) * a[t][k], n);
          continue;
        }
        auto [g, s, u] = xgcd(d, y);
        Vec nt(cols), ni(cols);
        for (std::size_t k = 0; k < cols; ++k) {
          nt[k] = mod(s * a[t][k] + u * a[i][k], n);
          ni[k] = mod((y / g) * a[t][k] - (d / g) * a[i][k], n);
        }
        a[t] = std::move(nt);
        a[i] = std::move(ni);
        mixed = true;
      }
      for (std::size_t j = t + 1; j < cols && !mixed; ++j) {
        Int y = a[t][j];
        if (y == 0) continue;
        if (y % d == 0) {
          add_col(j, t, -(y / d));
          continue;
        }
        auto [g, s, u] = xgcd(d, y);
        mix_cols(t, j, s, u, y / g, d / g);
        mixed = true;
      }
      if (mixed) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % d != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t k = 0; k < cols; ++k) a[t][k] = mod(a[t][k] + a[bad][k], n);
    }
  }
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) out.diagonal.push_back(a[i][i]);
  return out;
}

Quotient::Quotient(CodeSubgroup numerator, CodeSubgroup denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (!(num_.ambient() == den_.ambient())) throw Error(ErrorCode::AmbientMismatch, "quotient");
  for (const auto& r : den_.rows())
    if (!num_.contains(r)) throw Error(ErrorCode::NotASubgroup, "denominator not contained in numerator");
  const ProductSpace& s = num_.ambient();
  const auto& ph = num_.howell_form();
  std::size_t w = s.width(), r = ph.rows.size();
  Int n = s.modulus();
  std::vector<Vec> rel;
  for (std::size_t i = 0; i < r; ++i) {
    Vec x = ph.rows[i];
    x.resize(w + r, 0);
    x[w + i] = 1;
    rel.push_back(std::move(x));
  }
  for (const auto& x : den_.howell_form().rows) {
    Vec y = x;
    y.resize(w + r, 0);
    rel.push_back(std::move(y));
  }
  auto h = howell(std::move(rel), w + r, n);
  std::vector<Vec> lattice;
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    if (h.pivots[i] >= w) lattice.emplace_back(h.rows[i].begin() + static_cast<std::ptrdiff_t>(w), h.rows[i].end());
  auto snf = smith_form(lattice, r, n);
  v_ = snf.v;
  vinv_ = snf.vinv;
  for (std::size_t t = 0; t < r; ++t) {
    Int d = t < snf.diagonal.size() ? snf.diagonal[t] : 0;
    Int e = d == 0 ? n : gcd(d, n);
    if (e > 1) {
      kept_.push_back(t);
      factors_.push_back(e);
    }
  }
  Order expect = num_.order() / den_.order();
  Order got;
  for (Int e : factors_) got *= Order(e);
  if (!(got == expect)) throw Error(ErrorCode::NotASubgroup, "quotient order mismatch");

  std::set<Int> fields;
  bool all_fields = true;
  for (const auto& f : s.factors()) {
    if (f.alphabet.is_vector_space()) fields.insert(f.alphabet.field());
    else all_fields = false;
  }
  if (all_fields && fields.size() == 1 &&
      std::all_of(factors_.begin(), factors_.end(), [&](Int e) { return e == *fields.begin(); }))
    alphabet_ = Alphabet::vector_space(*fields.begin(), static_cast<int>(factors_.size()));
  else
    alphabet_ = Alphabet::cyclic(factors_);
}

Element Quotient::project(const Element& x) const {
  const ProductSpace& s = num_.ambient();
  auto coef = num_.howell_form().coefficients(s.lift(x));
  if (!coef) throw Error(ErrorCode::NotASubgroup, "element outside numerator");
  Int n = s.modulus();
  Element q(kept_.size());
  for (std::size_t k = 0; k < kept_.size(); ++k) {
    Int acc = 0;
    for (std::size_t i = 0; i < coef->size(); ++i) acc = mod(acc + (*coef)[i] * v_[i][kept_[k]], n);
    q[k] = mod(acc, factors_[k]);
  }
  return q;
}

Element Quotient::lift(const Element& q) const {
  const ProductSpace& s = num_.ambient();
  const auto& ph = num_.howell_form();
  Int n = s.modulus();
  Vec acc(s.width(), 0);
  for (std::size_t i = 0; i < ph.rows.size(); ++i) {
    Int c = 0;
    for (std::size_t k = 0; k < kept_.size(); ++k) c = mod(c + q[k] * vinv_[kept_[k]][i], n);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = mod(acc[j] + c * ph.rows[i][j], n);
  }
  return s.unlift(acc);
}

namespace {

std::vector<std::string> complement_of(const ProductSpace& s, const std::vector<std::string>& part) {
  std::set<std::string> in(part.begin(), part.end());
  std::vector<std::string> out;
  for (const auto& f : s.factors())
    if (!in.count(f.label)) out.push_back(f.label);
  return out;
}

}  // namespace

CodeSubgroup interface_code(const CodeSubgroup& proj, const Quotient& q, const std::string& state) {
  ProductSpace s = proj.ambient().concat(ProductSpace({{state, q.alphabet()}}));
  std::vector<Element> rows;
  for (const auto& g : proj.rows()) {
    Element x = g;
    auto y = q.project(g);
    x.insert(x.end(), y.begin(), y.end());
    rows.push_back(std::move(x));
  }
  return CodeSubgroup(s, rows);
}

Ftsp ftsp_decompose(const CodeSubgroup& c, const std::vector<std::string>& part_a,
                    const std::string& state_a, const std::string& state_b) {
  std::set<std::string> seen;
  for (const auto& l : part_a) {
    if (!c.ambient().has(l)) throw Error(ErrorCode::BadPartition, "unknown label " + l);
    if (!seen.insert(l).second) throw Error(ErrorCode::BadPartition, "repeated label " + l);
  }
  Ftsp f;
  f.part_a = part_a;
  f.part_b = complement_of(c.ambient(), part_a);
  if (f.part_a.empty() || f.part_b.empty()) throw Error(ErrorCode::BadPartition, "both parts must be nonempty");
  f.state_a = state_a;
  f.state_b = state_b;
  f.proj_a = project(c, f.part_a);
  f.cross_a = cross_section(c, f.part_a);
  f.proj_b = project(c, f.part_b);
  f.cross_b = cross_section(c, f.part_b);
  f.quot_a = Quotient(f.proj_a, f.cross_a);
  f.quot_b = Quotient(f.proj_b, f.cross_b);

  std::vector<std::string> ab = f.part_a;
  ab.insert(ab.end(), f.part_b.begin(), f.part_b.end());
  auto cab = rearrange(c, ab);
  std::size_t wa = f.proj_a.ambient().width();
  const Alphabet& qa = f.quot_a.alphabet();
  const Alphabet& qb = f.quot_b.alphabet();
  std::vector<Vec> m(qb.rank(), Vec(qa.rank(), 0));
  for (std::size_t j = 0; j < qa.rank(); ++j) {
    Element e(qa.rank(), 0);
    e[j] = 1;
    auto full = cab.extend(f.quot_a.lift(e));
    if (!full) throw Error(ErrorCode::NotASubgroup, "projection element does not extend");
    Element b(full->begin() + static_cast<std::ptrdiff_t>(wa), full->end());
    auto y = f.quot_b.project(b);
    for (std::size_t i = 0; i < y.size(); ++i) m[i][j] = y[i];
  }
  f.iso = Homomorphism(qa, qb, m);
  f.interface_a = interface_code(f.proj_a, f.quot_a, state_a);
  f.interface_b = interface_code(f.proj_b, f.quot_b, state_b);
  return f;
}

std::vector<std::pair<Element, Element>> ftsp_correspondence(const Ftsp& f) {
  auto reps_b = quotient_transversal(f.proj_b, f.cross_b);
  std::map<Element, Element> by_class;
  for (const auto& b : reps_b) by_class[f.quot_b.project(b)] = b;
  std::vector<std::pair<Element, Element>> out;
  for (const auto& a : quotient_transversal(f.proj_a, f.cross_a))
    out.emplace_back(a, by_class.at(f.iso.apply(f.quot_a.project(a))));
  return out;
}

}  // namespace normgraph
