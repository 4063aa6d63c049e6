#pragma once

#include <map>
#include <string>
#include <vector>

#include "sharpmap/exponent.hpp"
#include "sharpmap/rational.hpp"

namespace sharpmap {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in grlex order and zero coefficients are never stored,
// so iteration order (and hence serialization) is deterministic.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(const Exponent& e, const Rational& c);
  // x1 + x2 + ... + xn
  static Polynomial coordinate_sum(int nvars);

  int nvars() const { return nvars_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  const TermMap& terms() const { return terms_; }

  // Accumulates c onto the coefficient of x^e, dropping the term if it
  // cancels to zero. The only mutation primitive.
  void add_term(const Exponent& e, const Rational& c);

  Rational coefficient(const Exponent& e) const;
  // Sum of all coefficients, i.e. the value at (1,...,1).
  Rational coefficient_sum() const;
  // True iff every stored coefficient is strictly positive.
  bool is_nonnegative() const;

  Rational eval(const std::vector<Rational>& point) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  // Total order for deterministic output: nvars, then the grlex-sorted term
  // sequences compared entrywise (exponent by grlex, then coefficient).
  static int compare(const Polynomial& a, const Polynomial& b);

  // Multiplies each term x^e by s(x)^{d - |e|} where s = x1+...+xn, producing
  // a homogeneous polynomial of degree d that agrees with *this on the
  // hyperplane s(x) = 1. Throws if some term already exceeds degree d.
  Polynomial homogenize(int d) const;

  // Substitutes xn <- 1 - (x1 + ... + x_{n-1}); result has nvars-1 variables.
  Polynomial substitute_last() const;

  // Same polynomial viewed in a larger variable set (new trailing variables
  // get exponent zero).
  Polynomial embedded(int new_nvars) const;

  // p with the two variables swapped (two-variable polynomials only).
  Polynomial swapped_xy() const;
  // (p(x,y) + p(y,x)) / 2.
  Polynomial symmetrized() const;

  std::string str() const;

 private:
  int nvars_;
  TermMap terms_;
};

// Exact division of p by s(x) - 1 where s = x1 + ... + xn:
//   p = quotient * (s - 1) + remainder_poly,
// with remainder_poly free of xn (it is the substitution xn <- 1 - sum of the
// rest, re-embedded). The identity holds for every input. `remainder` is the
// scalar remainder_poly(0,...,0) = p(0,...,0,1), which is the full remainder
// exactly when `remainder_constant` is true — the case of interest, where p
// is identically constant on the hyperplane s(x) = 1.
struct AffineDivision {
  Polynomial quotient;
  Polynomial remainder_poly;
  bool remainder_constant = false;
  Rational remainder;
};

AffineDivision divide_by_affine(const Polynomial& p);

}  // namespace sharpmap
