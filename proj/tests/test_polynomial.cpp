#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "sharpmap/polynomial.hpp"

using namespace sharpmap;

namespace {

Polynomial random_poly(std::mt19937& rng, int nvars, int max_deg, int terms) {
  Polynomial p(nvars);
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int t = 0; t < terms; ++t) {
    Exponent ex(nvars);
    for (int v = 0; v < nvars; ++v) ex[v] = e(rng);
    p.add_term(ex, Rational(c(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("term bookkeeping") {
  Polynomial p(2);
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  p.add_term({1, 2}, Rational(3));
  p.add_term({1, 2}, Rational(-3));
  CHECK(p.is_zero());  // cancellation removes the term
  p.add_term({2, 1}, Rational(1, 2));
  p.add_term({0, 0}, Rational(5));
  CHECK(p.term_count() == 2);
  CHECK(p.degree() == 3);
  CHECK(p.coefficient({2, 1}) == Rational(1, 2));
  CHECK(p.coefficient({9, 9}) == Rational(0));
  CHECK(p.coefficient_sum() == Rational(11, 2));
}

TEST_CASE("grlex term order: degree then x-major") {
  Polynomial p(2);
  p.add_term({0, 2}, Rational(1));
  p.add_term({2, 0}, Rational(1));
  p.add_term({1, 1}, Rational(1));
  p.add_term({1, 0}, Rational(1));
  std::vector<Exponent> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  CHECK(order == std::vector<Exponent>{{1, 0}, {2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("algebra basics") {
  const Polynomial x = Polynomial::monomial({1, 0}, Rational(1));
  const Polynomial y = Polynomial::monomial({0, 1}, Rational(1));
  const Polynomial s = x + y;
  CHECK(s == Polynomial::coordinate_sum(2));
  const Polynomial sq = s * s;
  CHECK(sq.coefficient({2, 0}) == Rational(1));
  CHECK(sq.coefficient({1, 1}) == Rational(2));
  CHECK(sq.term_count() == 3);
  CHECK(s.pow(2) == sq);
  CHECK(s.pow(0) == Polynomial::constant(2, Rational(1)));
  CHECK((s - s).is_zero());
  CHECK(s.scaled(Rational(3, 2)).coefficient({1, 0}) == Rational(3, 2));
  CHECK(x.eval({Rational(2), Rational(5)}) == Rational(2));
  CHECK(sq.eval({Rational(1, 2), Rational(1, 2)}) == Rational(1));
}

TEST_CASE("string rendering") {
  Polynomial p(2);
  p.add_term({3, 0}, Rational(1));
  p.add_term({1, 1}, Rational(3));
  p.add_term({0, 3}, Rational(1));
  CHECK(p.str() == "x^3 + 3xy + y^3");
  Polynomial q(2);
  q.add_term({0, 0}, Rational(-1, 2));
  CHECK(q.str() == "-1/2");
  CHECK(Polynomial(2).str() == "0");
}

TEST_CASE("homogenize agrees on the hyperplane and is homogeneous") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_poly(rng, 2, 3, 4);
    if (p.is_zero()) continue;
    const int target = p.degree() + trial % 3;
    const Polynomial h = p.homogenize(target);
    for (const auto& [e, c] : h.terms()) CHECK(degree_of(e) == target);
    // agreement at random points of the line x + y = 1
    std::uniform_int_distribution<long> t(-6, 6);
    for (int i = 0; i < 4; ++i) {
      const Rational a(t(rng), 7);
      const std::vector<Rational> pt{a, Rational(1) - a};
      CHECK(p.eval(pt) == h.eval(pt));
    }
  }
  CHECK_THROWS_AS(
      Polynomial::monomial({3, 2}, Rational(1)).homogenize(4),
      std::invalid_argument);
}

TEST_CASE("substitute_last eliminates the final variable") {
  Polynomial p(2);
  p.add_term({2, 0}, Rational(1));
  p.add_term({0, 1}, Rational(2));
  p.add_term({0, 2}, Rational(-1));
  // x^2 + 2y - y^2 with y = 1 - x: x^2 + 2 - 2x - 1 + 2x - x^2 = 1
  const Polynomial q = p.substitute_last();
  CHECK(q.nvars() == 1);
  CHECK(q == Polynomial::constant(1, Rational(1)));
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial r = random_poly(rng, 3, 3, 5);
    const Polynomial sub = r.substitute_last();
    std::uniform_int_distribution<long> t(-5, 5);
    const Rational a(t(rng), 3), b(t(rng), 5);
    CHECK(sub.eval({a, b}) == r.eval({a, b, Rational(1) - a - b}));
  }
}

TEST_CASE("embedded, swapped, symmetrized") {
  Polynomial p(2);
  p.add_term({2, 1}, Rational(5));
  const Polynomial e = p.embedded(4);
  CHECK(e.nvars() == 4);
  CHECK(e.coefficient({2, 1, 0, 0}) == Rational(5));
  const Polynomial sw = p.swapped_xy();
  CHECK(sw.coefficient({1, 2}) == Rational(5));
  const Polynomial sym = p.symmetrized();
  CHECK(sym.coefficient({2, 1}) == Rational(5, 2));
  CHECK(sym.coefficient({1, 2}) == Rational(5, 2));
  CHECK(sym == sym.swapped_xy());
}

TEST_CASE("compare is a total order with equality at zero") {
  Polynomial a(2), b(2);
  a.add_term({1, 0}, Rational(1));
  b.add_term({0, 1}, Rational(1));
  CHECK(Polynomial::compare(a, a) == 0);
  CHECK(Polynomial::compare(a, b) != 0);
  CHECK(Polynomial::compare(a, b) == -Polynomial::compare(b, a));
}

TEST_CASE("divide_by_affine reconstructs its input") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 120; ++trial) {
    const int nvars = 2 + trial % 3;
    const Polynomial p = random_poly(rng, nvars, 4, 6);
    const AffineDivision div = divide_by_affine(p);
    const Polynomial s = Polynomial::coordinate_sum(nvars);
    const Polynomial back =
        div.quotient * (s - Polynomial::constant(nvars, Rational(1))) +
        div.remainder_poly;
    CHECK(back == p);
    // remainder has no dependence on the last variable
    for (const auto& [e, c] : div.remainder_poly.terms())
      CHECK(e[nvars - 1] == 0);
    if (div.remainder_constant)
      CHECK(div.remainder_poly ==
            Polynomial::constant(nvars, div.remainder));
  }
}

TEST_CASE("divide_by_affine flags polynomials constant on the hyperplane") {
  // 1 + (x + y - 1) * q is identically 1 on x + y = 1 for any q.
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial q = random_poly(rng, 2, 3, 4);
    const Polynomial s = Polynomial::coordinate_sum(2);
    const Polynomial p =
        Polynomial::constant(2, Rational(1)) +
        q * (s - Polynomial::constant(2, Rational(1)));
    const AffineDivision div = divide_by_affine(p);
    CHECK(div.remainder_constant);
    CHECK(div.remainder == Rational(1));
    CHECK(div.quotient == q);
  }
}
