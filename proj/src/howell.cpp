#include "normgraph/howell.hpp"

#include <algorithm>

#include "normgraph/error.hpp"

namespace normgraph {
namespace {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

void axpy(Vec& y, Int a, const Vec& x, Int n) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod(y[i] + a * x[i], n);
}

}  // namespace

HowellForm howell(std::vector<Vec> rows, std::size_t ncols, Int n) {
  HowellForm h;
  h.modulus = n;
  h.ncols = ncols;
  std::vector<Vec> work;
  for (auto& r : rows) {
    if (r.size() != ncols) throw Error(ErrorCode::RowOutOfAmbient, "row width mismatch");
    for (auto& x : r) x = mod(x, n);
    if (!is_zero(r)) work.push_back(std::move(r));
  }
  for (std::size_t c = 0; c < ncols && !work.empty(); ++c) {
    std::optional<Vec> pivot;
    std::vector<Vec> rest;
    for (auto& r : work) {
      if (r[c] == 0) {
        rest.push_back(std::move(r));
        continue;
      }
      if (!pivot) {
        pivot = std::move(r);
        continue;
      }
      Int a = (*pivot)[c], b = r[c];
      auto [g, s, t] = xgcd(a, b);
      Vec np(ncols), nr(ncols);
      for (std::size_t k = 0; k < ncols; ++k) {
        np[k] = mod(s * (*pivot)[k] + t * r[k], n);
        nr[k] = mod((b / g) * (*pivot)[k] - (a / g) * r[k], n);
      }
      *pivot = std::move(np);
      if (!is_zero(nr)) rest.push_back(std::move(nr));
    }
    work = std::move(rest);
    if (!pivot) continue;
    Int u = normalizing_unit((*pivot)[c], n);
    for (auto& x : *pivot) x = mod(x * u, n);
    Int d = (*pivot)[c];
    Vec ann(ncols);
    for (std::size_t k = 0; k < ncols; ++k) ann[k] = mod((n / d) * (*pivot)[k], n);
    if (!is_zero(ann)) work.push_back(std::move(ann));
    h.rows.push_back(std::move(*pivot));
    h.pivots.push_back(c);
  }
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    std::size_t c = h.pivots[i];
    Int d = h.rows[i][c];
    for (std::size_t j = 0; j < i; ++j) {
      Int q = h.rows[j][c] / d;
      axpy(h.rows[j], -q, h.rows[i], n);
    }
  }
  return h;
}

Order HowellForm::order() const {
  Order o;
  for (std::size_t i = 0; i < rows.size(); ++i) o *= Order(row_order(i));
  return o;
}

std::optional<Vec> HowellForm::coefficients(Vec x) const {
  Vec coef(rows.size(), 0);
  std::size_t i = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    x[c] = mod(x[c], modulus);
    if (i < rows.size() && pivots[i] == c) {
      Int d = rows[i][c];
      if (x[c] % d != 0) return std::nullopt;
      coef[i] = x[c] / d;
      axpy(x, -coef[i], rows[i], modulus);
      ++i;
    } else if (x[c] != 0) {
      return std::nullopt;
    }
  }
  return coef;
}

Vec HowellForm::reduce(Vec x) const {
  for (auto& v : x) v = mod(v, modulus);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Int d = rows[i][pivots[i]];
    axpy(x, -(x[pivots[i]] / d), rows[i], modulus);
  }
  return x;
}

std::optional<Vec> HowellForm::extend(const Vec& prefix) const {
  Vec acc(ncols, 0);
  std::size_t k = prefix.size();
  std::size_t i = 0;
  for (std::size_t c = 0; c < k; ++c) {
    Int want = mod(prefix[c] - acc[c], modulus);
    if (i < rows.size() && pivots[i] == c) {
      Int d = rows[i][c];
      if (want % d != 0) return std::nullopt;
      axpy(acc, want / d, rows[i], modulus);
      ++i;
    } else if (want != 0) {
      return std::nullopt;
    }
  }
  return acc;
}

}  // namespace normgraph
