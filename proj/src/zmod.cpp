#include "normgraph/zmod.hpp"

#include <cmath>
#include <cstdlib>

#include "normgraph/error.hpp"

namespace normgraph {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RowOutOfAmbient: return "RowOutOfAmbient";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::NotAStateEdge: return "NotAStateEdge";
    case ErrorCode::FragmentsOverlap: return "FragmentsOverlap";
    case ErrorCode::EdgeIsCutSet: return "EdgeIsCutSet";
    case ErrorCode::NotCycleFree: return "NotCycleFree";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotTrimProper: return "NotTrimProper";
    case ErrorCode::NotInExternalBehavior: return "NotInExternalBehavior";
    case ErrorCode::NotInternallyProper: return "NotInternallyProper";
    case ErrorCode::NotInternallyTrim: return "NotInternallyTrim";
    case ErrorCode::MissingIncoming: return "MissingIncoming";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Int gcd(Int a, Int b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Xgcd xgcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Int inverse_mod(Int a, Int n) {
  if (n == 1) return 0;
  auto [g, s, t] = xgcd(mod(a, n), n);
  (void)t;
  if (g != 1) throw Error(ErrorCode::NotInvertible, "non-unit residue");
  return mod(s, n);
}

Int normalizing_unit(Int a, Int n) {
  a = mod(a, n);
  if (a == 0 || n == 1) return 1;
  Int g = gcd(a, n);
  Int m = n / g;
  Int u0 = m == 1 ? 0 : inverse_mod(a / g, m);
  for (Int u = u0; u < n; u += m)
    if (u > 0 && gcd(u, n) == 1) return u;
  throw Error(ErrorCode::NotInvertible, "no normalizing unit");
}

Order::Order(Int n) {
  for (Int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++exps_[p];
      n /= p;
    }
  if (n > 1) ++exps_[n];
}

Order& Order::operator*=(const Order& o) {
  for (auto [p, e] : o.exps_) exps_[p] += e;
  return *this;
}

Order& Order::operator/=(const Order& o) {
  for (auto [p, e] : o.exps_) {
    int& mine = exps_[p];
    mine -= e;
    if (mine < 0) throw Error(ErrorCode::NotASubgroup, "order division is not exact");
    if (mine == 0) exps_.erase(p);
  }
  return *this;
}

bool Order::divides(const Order& o) const {
  for (auto [p, e] : exps_) {
    auto it = o.exps_.find(p);
    if (it == o.exps_.end() || it->second < e) return false;
  }
  return true;
}

std::optional<std::uint64_t> Order::to_u64() const {
  unsigned __int128 v = 1;
  for (auto [p, e] : exps_)
    for (int i = 0; i < e; ++i) {
      v *= static_cast<unsigned>(p);
      if (v > UINT64_MAX) return std::nullopt;
    }
  return static_cast<std::uint64_t>(v);
}

double Order::log2() const {
  double s = 0;
  for (auto [p, e] : exps_) s += e * std::log2(static_cast<double>(p));
  return s;
}

int Order::exponent(Int p) const {
  auto it = exps_.find(p);
  return it == exps_.end() ? 0 : it->second;
}

std::string Order::str() const {
  if (auto v = to_u64()) return std::to_string(*v);
  std::string s;
  for (auto [p, e] : exps_) {
    if (!s.empty()) s += "*";
    s += std::to_string(p) + "^" + std::to_string(e);
  }
  return s;
}

}  // namespace normgraph
