#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sharpmap/linalg.hpp"
#include "sharpmap/polynomial.hpp"

namespace sharpmap {

enum class SystemKind { Homogenized, Eliminated, Symmetric };

std::string kind_name(SystemKind kind);
SystemKind kind_from_name(const std::string& name);

// Exact linear system A u = b, u >= 0, whose solutions are the coefficient
// vectors of polynomials of degree <= d that equal 1 on the hyperplane
// x1 + ... + xn = 1.
//
// Column meaning depends on kind: for the monomial kinds each column is a
// monomial exponent over n variables; for the symmetric kind each column is
// a pair (a,b) standing for the two-variable element (xy)^a (x^b + y^b)
// (a single monomial (xy)^a when b = 0).
struct LinearSystem {
  SystemKind kind = SystemKind::Homogenized;
  int n = 0;
  int d = 0;
  bool include_constant = false;
  std::vector<Exponent> columns;
  Mat matrix;  // rows x columns
  Vec rhs;
  std::vector<int> distinguished;  // indices of top-degree columns (trailing block)
  // fixed monomial contributions living outside the unknowns (reduced systems)
  std::vector<std::pair<Exponent, Rational>> pinned;

  int rows() const { return static_cast<int>(matrix.size()); }
  int cols() const { return static_cast<int>(columns.size()); }
  // degree of the polynomial content of column j (2a+b for the symmetric kind)
  int column_degree(int j) const;
  // number of monomials one unit of column j contributes (2 for symmetric
  // pairs with b != 0, else 1); the L1 objective weights
  Rational column_weight(int j) const;
  // the polynomial a single unit of column j stands for
  Polynomial column_polynomial(int j) const;
  // polynomial encoded by the dense unknown vector u, pinned terms included
  Polynomial reassemble(const Vec& u) const;
  // exact residual test A u = b
  bool satisfies(const Vec& u) const;
};

// Row for each degree-d exponent beta (grlex), column for each monomial alpha
// with 1 <= |alpha| <= d (0 <= |alpha| with include_constant); entry =
// coefficient of x^beta in x^alpha * s(x)^(d-|alpha|); rhs = multinomial(d; beta).
LinearSystem build_homogenized(int n, int d, bool include_constant = false);

// Substitutes xn <- 1 - (x1+...+x_{n-1}) and equates coefficients of every
// monomial t^mu, |mu| <= d (constant row first, rhs = (1,0,...,0)); same
// columns as the homogenized kind; entries may be negative.
LinearSystem build_eliminated(int n, int d);

// Two-variable symmetric basis for odd d: columns are all pairs (a,b) with
// 1 <= 2a+b <= d; rows equate the d+1 coefficients of the degree-d
// homogenization against those of (x+y)^d.
LinearSystem build_symmetric(int d);

// Second reformulation for an n=2 homogenized system with odd d: pins the
// coefficients of x^d and y^d to 1, deletes all other pure powers and the
// mixed top-degree monomials, keeps only the mixed rows. Remaining columns
// are the (d-1)(d-2)/2 mixed monomials of degree <= d-1.
LinearSystem reduce_support(const LinearSystem& sys);

}  // namespace sharpmap
