#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "doctest.h"
#include "sharpmap/rational.hpp"

using sharpmap::binomial_mpz;
using sharpmap::binomial_u64;
using sharpmap::multinomial_mpz;
using sharpmap::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("5").str() == "5");
  CHECK(Rational::from_string("-7/3").str() == "-7/3");
  CHECK(Rational::from_string("6/4").str() == "3/2");
  CHECK(Rational::from_string("0").str() == "0");
  CHECK(Rational(573, 28).str() == "573/28");
  CHECK_THROWS(Rational::from_string("1.5"));
  CHECK_THROWS(Rational::from_string(""));
  CHECK_THROWS(Rational::from_string("1/0"));
  CHECK_THROWS(Rational::from_string("a/b"));
  CHECK_THROWS(Rational::from_string(" 1"));
}

TEST_CASE("arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a.reciprocal() == Rational(3));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("queries and order") {
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(1, 9).sign() == 1);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  std::ostringstream os;
  os << Rational(22, 7);
  CHECK(os.str() == "22/7");
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int i = 0; i < 300; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)),
        c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::from_string(a.str()) == a);
  }
}

TEST_CASE("binomial and multinomial helpers") {
  CHECK(binomial_mpz(0, 0) == 1);
  CHECK(binomial_mpz(5, 2) == 10);
  CHECK(binomial_mpz(5, 7) == 0);
  CHECK(binomial_u64(52, 5) == 2598960ULL);
  CHECK(multinomial_mpz(3, {1, 1, 1}) == 6);
  CHECK(multinomial_mpz(7, {3, 4}) == 35);
  CHECK(multinomial_mpz(0, {0, 0}) == 1);
  CHECK_THROWS(multinomial_mpz(4, {1, 1, 1}));
  // Pascal identity on a random strip.
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned long> N(1, 40);
  for (int i = 0; i < 100; ++i) {
    const unsigned long n = N(rng);
    std::uniform_int_distribution<unsigned long> K(1, n);
    const unsigned long k = K(rng);
    CHECK(binomial_mpz(n, k) == binomial_mpz(n - 1, k - 1) + binomial_mpz(n - 1, k));
  }
}
