#pragma once

#include <vector>

#include "sharpmap/polynomial.hpp"

namespace sharpmap {

// Degree-d member of the two-variable invariant family, computed by the
// integer recurrence q_0 = 2, q_1 = x, q_{k+1} = x q_k + y q_{k-1},
// p_d = q_d + (-1)^{d+1} y^d.  Equals 1 on x + y = 1.  Odd d: nonnegative
// with exactly (d+3)/2 terms (cross-checked against the closed-form
// coefficients); even d: single negative coefficient -1 on y^d.
Polynomial invariant_poly(int d);

// Closed-form coefficients for odd d = 2r+1: entry k (0 <= k <= r) is
// (2r+1)(2r-k)! / (k!(2r+1-2k)!), the coefficient of x^{d-2k} y^k.
std::vector<Rational> invariant_coefficients(int d);

// Lucas numbers: L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}.
Rational lucas_number(int k);

// p_d(1,1) for odd d, asserted equal to Lucas(d) + 1 before returning.
Rational l1_closed_form(int d);

// True iff every coefficient of p_d below the top degree is divisible by d;
// asserted to agree with a direct primality test (d = 1 counts as true).
bool primality_congruence(int d);

bool is_prime(long long n);

// n-variable generalized Whitney solution (n >= 3, d >= 1):
// (x_1+...+x_{n-1})(1 + u + ... + u^{d-1}) + u^d with u = x_n.
// Exactly d(n-1)+1 terms, all coefficients 1, equals 1 on the hyperplane.
Polynomial whitney_poly(int n, int d);

enum class TensorKind { W, V };

// Multiply part of one term of p by s(x) = x_1+...+x_n, preserving the
// hyperplane identity.  W moves the full designated amount c:
//   p - c x^t + c x^t s(x)        (adds n-1 terms on fresh monomials)
// V moves half of it:
//   p - c x^t + (c/2) x^t + (c/2) x^t s(x)   (adds n terms)
// The default target is the pure power of x_n of highest degree in p.
Polynomial tensor_op(const Polynomial& p, TensorKind kind, const Rational& c,
                     const Exponent& target);
Polynomial tensor_op(const Polynomial& p, TensorKind kind, const Rational& c);
// Default target with its full coefficient as c.
Polynomial tensor_op(const Polynomial& p, TensorKind kind);

struct SubstituteResult {
  Polynomial polynomial;  // p_d - c x^a y^b (p_m - 1); equals 1 on the line
  bool nonnegative = false;
};

// Degree-d substitution family member (d odd, m even): may or may not have
// nonnegative coefficients, which the flag reports.
SubstituteResult substitute(int d, int m, int a, int b, const Rational& c);

}  // namespace sharpmap
