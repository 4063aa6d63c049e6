#pragma once

#include <numeric>
#include <string>
#include <vector>

namespace sharpmap {

// Exponent tuple of a monomial x^e = x1^{e1} * ... * xn^{en}.
using Exponent = std::vector<int>;

inline int degree_of(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Monomial order used everywhere: total degree ascending, ties broken
// lexicographically with higher x1-exponent first. Within one degree block
// for two variables this reads x^d, x^{d-1}y, ..., y^d.
inline bool grlex_less(const Exponent& a, const Exponent& b) {
  const int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a > b;  // larger leading exponents come earlier
}

struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return grlex_less(a, b);
  }
};

// All exponents over `nvars` variables with total degree exactly d, in
// grlex order (i.e. lexicographically descending within the block).
std::vector<Exponent> exponents_of_degree(int nvars, int d);

// All exponents with lo <= degree <= hi, grlex order.
std::vector<Exponent> exponents_in_range(int nvars, int lo, int hi);

// "x^2y" style rendering; n<=3 uses x,y,z, larger n uses x1..xn.
std::string monomial_str(const Exponent& e);

}  // namespace sharpmap
