#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sharpmap/families.hpp"

using namespace sharpmap;

namespace {

Polynomial poly2(std::initializer_list<std::pair<Exponent, Rational>> ts) {
  Polynomial p(2);
  for (const auto& [e, c] : ts) p.add_term(e, c);
  return p;
}

bool identically_one_on_line(const Polynomial& p) {
  for (int k = -3; k <= 3; ++k) {
    const Rational t(2 * k + 1, 7);
    if (p.eval({t, Rational(1) - t}) != Rational(1)) return false;
  }
  const AffineDivision div = divide_by_affine(p);
  return div.remainder_constant && div.remainder == Rational(1);
}

}  // namespace

TEST_CASE("invariant family: the five printed expansions") {
  CHECK(invariant_poly(1) == poly2({{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(invariant_poly(2) ==
        poly2({{{2, 0}, 1}, {{0, 1}, 2}, {{0, 2}, -1}}));
  CHECK(invariant_poly(3) == poly2({{{3, 0}, 1}, {{1, 1}, 3}, {{0, 3}, 1}}));
  CHECK(invariant_poly(5) ==
        poly2({{{5, 0}, 1}, {{3, 1}, 5}, {{1, 2}, 5}, {{0, 5}, 1}}));
  CHECK(invariant_poly(9) ==
        poly2({{{9, 0}, 1},
               {{7, 1}, 9},
               {{5, 2}, 27},
               {{3, 3}, 30},
               {{1, 4}, 9},
               {{0, 9}, 1}}));
}

TEST_CASE("invariant family: identities and shape for odd degrees") {
  for (int d = 1; d <= 31; d += 2) {
    const Polynomial p = invariant_poly(d);  // internal closed-form crosscheck
    CHECK(identically_one_on_line(p));
    CHECK(p.is_nonnegative());
    CHECK(p.term_count() == (d + 3) / 2);
    CHECK(p.degree() == d);
    CHECK(p.coefficient({d, 0}) == Rational(1));
    CHECK(p.coefficient({0, d}) == Rational(1));
    // closed-form list matches the stored coefficients
    const std::vector<Rational> cs = invariant_coefficients(d);
    REQUIRE(static_cast<int>(cs.size()) == (d + 1) / 2);
    for (int k = 0; 2 * k < d; ++k)
      CHECK(p.coefficient({d - 2 * k, k}) == cs[k]);
    // exponents live in the invariance lattice a + 2b = 0 (mod d)
    for (const auto& [e, c] : p.terms())
      CHECK((e[0] + 2 * e[1]) % d == 0);
  }
}

TEST_CASE("even members stay on the line but go negative") {
  for (int d = 2; d <= 10; d += 2) {
    const Polynomial p = invariant_poly(d);
    CHECK(identically_one_on_line(p));
    CHECK_FALSE(p.is_nonnegative());
    CHECK(p.coefficient({0, d}) == Rational(-1));
  }
}

TEST_CASE("Lucas values and the coefficient-sum closed form") {
  CHECK(lucas_number(0) == Rational(2));
  CHECK(lucas_number(1) == Rational(1));
  CHECK(lucas_number(2) == Rational(3));
  CHECK(lucas_number(7) == Rational(29));
  CHECK(lucas_number(11) == Rational(199));
  for (int d = 1; d <= 21; d += 2) {
    CHECK(l1_closed_form(d) == lucas_number(d) + Rational(1));
    CHECK(invariant_poly(d).coefficient_sum() == l1_closed_form(d));
    CHECK(invariant_poly(d).eval({Rational(1), Rational(1)}) ==
          l1_closed_form(d));
  }
  CHECK(l1_closed_form(7) == Rational(30));
}

TEST_CASE("divisibility of lower coefficients detects primality") {
  for (int d = 1; d <= 31; ++d)
    CHECK(primality_congruence(d) == (d == 1 || is_prime(d)));
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(27));
  CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("whitney polynomials: term count and the hyperplane identity") {
  for (int n = 3; n <= 5; ++n) {
    for (int d = 1; d <= 5; ++d) {
      const Polynomial w = whitney_poly(n, d);
      CHECK(w.nvars() == n);
      CHECK(w.term_count() == d * (n - 1) + 1);
      CHECK(w.degree() == d);
      CHECK(w.is_nonnegative());
      // evaluate at rational points of the hyperplane
      std::vector<Rational> pt(n, Rational(0));
      pt[0] = Rational(1, 2);
      pt[1] = Rational(1, 3);
      pt[n - 1] = Rational(1) - Rational(1, 2) - Rational(1, 3);
      for (int i = 2; i < n - 1; ++i) pt[i] = Rational(0);
      CHECK(w.eval(pt) == Rational(1));
    }
  }
  CHECK_THROWS_AS(whitney_poly(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(whitney_poly(3, 0), std::invalid_argument);
}

TEST_CASE("tensor moves adjust the term count by n-1 and n") {
  const Polynomial base = Polynomial::coordinate_sum(3);
  const Polynomial w = tensor_op(base, TensorKind::W);
  CHECK(w.term_count() == base.term_count() + 2);
  CHECK(w.eval({Rational(1, 4), Rational(1, 4), Rational(1, 2)}) == Rational(1));
  CHECK(w.is_nonnegative());

  const Polynomial v = tensor_op(base, TensorKind::V);
  CHECK(v.term_count() == base.term_count() + 3);
  CHECK(v.eval({Rational(1, 4), Rational(1, 4), Rational(1, 2)}) == Rational(1));
  CHECK(v.is_nonnegative());

  // explicit target and partial amount
  const Polynomial p = whitney_poly(3, 2);
  const Exponent target{0, 0, 2};
  const Polynomial moved = tensor_op(p, TensorKind::W, Rational(1, 2), target);
  CHECK(moved.eval({Rational(1, 5), Rational(2, 5), Rational(2, 5)}) ==
        Rational(1));
  CHECK(moved.coefficient(target) == Rational(1, 2));
  CHECK_THROWS_AS(tensor_op(p, TensorKind::W, Rational(2), target),
                  std::invalid_argument);  // more than is there
  CHECK_THROWS_AS(tensor_op(p, TensorKind::W, Rational(0), target),
                  std::invalid_argument);  // must move something
}

TEST_CASE("substitution family reproduces the known degree-7 reduction") {
  const SubstituteResult r = substitute(7, 2, 3, 1, Rational(7));
  CHECK(r.nonnegative);
  CHECK(r.polynomial == poly2({{{7, 0}, 1},
                               {{0, 7}, 1},
                               {{3, 3}, 7},
                               {{3, 1}, 7},
                               {{1, 3}, 7}}));
  CHECK(r.polynomial.coefficient_sum() == Rational(23));
  CHECK(invariant_poly(7).coefficient_sum() == Rational(30));
  CHECK(identically_one_on_line(r.polynomial));
}

TEST_CASE("substitution family stays on the line for random parameters") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dd(1, 4), mm(1, 3), aa(0, 3), bb(0, 3),
      cc(1, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 * dd(rng) + 1;  // odd 3..9
    const int m = 2 * mm(rng);      // even 2..6
    const SubstituteResult r =
        substitute(d, m, aa(rng), bb(rng), Rational(cc(rng), 3));
    CHECK(identically_one_on_line(r.polynomial));
    CHECK(r.nonnegative == r.polynomial.is_nonnegative());
  }
  CHECK_THROWS_AS(substitute(4, 2, 1, 1, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(substitute(5, 3, 1, 1, Rational(1)), std::invalid_argument);
}
