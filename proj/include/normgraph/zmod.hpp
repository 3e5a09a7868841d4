#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace normgraph {

using Int = std::int64_t;
using Vec = std::vector<Int>;

inline Int mod(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
bool is_prime(Int n);

struct Xgcd {
  Int g, s, t;  // s*a + t*b == g
};
Xgcd xgcd(Int a, Int b);

// Inverse of a modulo n; a must be a unit.
Int inverse_mod(Int a, Int n);

// A unit u mod n with u*a == gcd(a, n) (mod n).
Int normalizing_unit(Int a, Int n);

// Group order kept as a prime factorization so that large products stay exact.
class Order {
 public:
  Order() = default;
  explicit Order(Int n);

  Order& operator*=(const Order& o);
  Order& operator/=(const Order& o);  // requires o | *this
  friend Order operator*(Order a, const Order& b) { return a *= b; }
  friend Order operator/(Order a, const Order& b) { return a /= b; }
  friend bool operator==(const Order&, const Order&) = default;

  bool divides(const Order& o) const;
  bool is_one() const { return exps_.empty(); }
  std::optional<std::uint64_t> to_u64() const;
  double log2() const;
  // Exponent of p; the dimension when the group is a GF(p)-space.
  int exponent(Int p) const;
  std::string str() const;
  const std::map<Int, int>& factors() const { return exps_; }

 private:
  std::map<Int, int> exps_;
};

}  // namespace normgraph
