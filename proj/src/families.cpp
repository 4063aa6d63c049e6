#include "sharpmap/families.hpp"

#include <stdexcept>
#include <utility>

namespace sharpmap {

Polynomial invariant_poly(int d) {
  if (d < 1) throw std::invalid_argument("invariant_poly: d must be positive");
  const Polynomial x = Polynomial::monomial({1, 0}, Rational(1));
  const Polynomial y = Polynomial::monomial({0, 1}, Rational(1));
  Polynomial prev = Polynomial::constant(2, Rational(2));  // q_0
  Polynomial cur = x;                                      // q_1
  for (int k = 1; k < d; ++k) {
    Polynomial next = x * cur + y * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const Rational sign = (d % 2 == 0) ? Rational(-1) : Rational(1);
  Exponent yd = {0, d};
  cur.add_term(yd, sign);

  if (d % 2 == 1) {
    const std::vector<Rational> closed = invariant_coefficients(d);
    for (int k = 0; k <= (d - 1) / 2; ++k) {
      const Exponent e = {d - 2 * k, k};
      if (cur.coefficient(e) != closed[k])
        throw std::logic_error(
            "invariant_poly: recurrence disagrees with the closed form");
    }
  }
  return cur;
}

std::vector<Rational> invariant_coefficients(int d) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument(
        "invariant_coefficients: d must be a positive odd integer");
  const int r = (d - 1) / 2;
  std::vector<Rational> out;
  out.reserve(r + 1);
  for (int k = 0; k <= r; ++k) {
    // (2r+1) * (2r-k)! / (k! * (2r+1-2k)!)
    mpz_class num, kf, lf;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * r - k));
    num *= 2 * r + 1;
    mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_fac_ui(lf.get_mpz_t(), static_cast<unsigned long>(2 * r + 1 - 2 * k));
    out.emplace_back(num, kf * lf);
  }
  return out;
}

Rational lucas_number(int k) {
  if (k < 0) throw std::invalid_argument("lucas_number: k must be nonnegative");
  mpz_class a = 2, b = 1;  // L_0, L_1
  if (k == 0) return Rational(a);
  for (int i = 1; i < k; ++i) {
    mpz_class next = a + b;
    a = b;
    b = next;
  }
  return Rational(b);
}

Rational l1_closed_form(int d) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("l1_closed_form: d must be a positive odd integer");
  const Rational direct = invariant_poly(d).coefficient_sum();
  if (direct != lucas_number(d) + Rational(1))
    throw std::logic_error("l1_closed_form: coefficient sum is not Lucas(d)+1");
  return direct;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long long f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

bool primality_congruence(int d) {
  if (d < 1)
    throw std::invalid_argument("primality_congruence: d must be positive");
  const Polynomial p = invariant_poly(d);
  bool divisible = true;
  const Rational dd(d);
  for (const auto& [e, c] : p.terms()) {
    if (degree_of(e) == d) continue;  // leading (top-degree) part
    const Rational q = c / dd;
    if (!q.is_integer()) {
      divisible = false;
      break;
    }
  }
  const bool expected = (d == 1) || is_prime(d);
  if (divisible != expected)
    throw std::logic_error(
        "primality_congruence: divisibility disagrees with primality");
  return divisible;
}

Polynomial whitney_poly(int n, int d) {
  if (n < 3) throw std::invalid_argument("whitney_poly: n must be at least 3");
  if (d < 1) throw std::invalid_argument("whitney_poly: d must be positive");
  Polynomial p(n);
  Exponent e(n, 0);
  for (int k = 0; k < d; ++k) {  // (x_1+..+x_{n-1}) u^k
    e[n - 1] = k;
    for (int i = 0; i + 1 < n; ++i) {
      e[i] = 1;
      p.add_term(e, Rational(1));
      e[i] = 0;
    }
  }
  e[n - 1] = d;  // u^d
  p.add_term(e, Rational(1));
  return p;
}

namespace {

Exponent default_tensor_target(const Polynomial& p) {
  const int n = p.nvars();
  int best = -1;
  for (const auto& [e, c] : p.terms()) {
    bool pure = e[n - 1] >= 1;
    for (int i = 0; pure && i + 1 < n; ++i)
      if (e[i] != 0) pure = false;
    if (pure && e[n - 1] > best) best = e[n - 1];
  }
  if (best < 0)
    throw std::invalid_argument(
        "tensor_op: no pure power of the last variable to target");
  Exponent t(n, 0);
  t[n - 1] = best;
  return t;
}

}  // namespace

Polynomial tensor_op(const Polynomial& p, TensorKind kind, const Rational& c,
                     const Exponent& target) {
  const int n = p.nvars();
  if (static_cast<int>(target.size()) != n)
    throw std::invalid_argument("tensor_op: target length != variable count");
  if (c.sign() <= 0)
    throw std::invalid_argument("tensor_op: c must be positive");
  const Rational have = p.coefficient(target);
  if (have.is_zero())
    throw std::invalid_argument("tensor_op: target term absent");
  if (have < c)
    throw std::invalid_argument("tensor_op: target coefficient smaller than c");

  Polynomial out = p;
  out.add_term(target, -c);
  const Rational spread = (kind == TensorKind::W) ? c : c / Rational(2);
  if (kind == TensorKind::V) out.add_term(target, c / Rational(2));
  Exponent e = target;
  for (int i = 0; i < n; ++i) {  // spread * x^target * s(x)
    ++e[i];
    out.add_term(e, spread);
    --e[i];
  }
  return out;
}

Polynomial tensor_op(const Polynomial& p, TensorKind kind, const Rational& c) {
  return tensor_op(p, kind, c, default_tensor_target(p));
}

Polynomial tensor_op(const Polynomial& p, TensorKind kind) {
  const Exponent target = default_tensor_target(p);
  return tensor_op(p, kind, p.coefficient(target), target);
}

SubstituteResult substitute(int d, int m, int a, int b, const Rational& c) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("substitute: d must be a positive odd integer");
  if (m < 2 || m % 2 == 1)
    throw std::invalid_argument("substitute: m must be a positive even integer");
  if (a < 0 || b < 0)
    throw std::invalid_argument("substitute: exponents must be nonnegative");
  Polynomial f = invariant_poly(d);
  if (!c.is_zero()) {
    Polynomial inner = invariant_poly(m);
    inner.add_term(Exponent{0, 0}, Rational(-1));  // p_m - 1
    Polynomial shift = Polynomial::monomial({a, b}, -c);
    f += shift * inner;
  }
  SubstituteResult res;
  res.nonnegative = f.is_nonnegative();
  res.polynomial = std::move(f);
  return res;
}

}  // namespace sharpmap
