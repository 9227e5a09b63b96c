#include "doctest.h"

#include <stdexcept>

#include "apeuler/rational.hpp"
#include "apeuler/series.hpp"

using namespace apeuler;

TEST_CASE("rational string round trips") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-1/2") == Rational(-1, 2));
  CHECK(rational_from_string("7") == Rational(7));
  CHECK(rational_from_string("-0/5") == Rational(0));
  CHECK(rational_to_string(Rational(7)) == "7/1");
  CHECK(rational_to_human(Rational(7)) == "7");
  CHECK(rational_to_human(Rational(-1, 2)) == "-1/2");
  CHECK(rational_from_string(rational_to_human(Rational(-22, 7))) == Rational(-22, 7));
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
}

TEST_CASE("p-adic valuation of rationals") {
  CHECK(valuation_p(Rational(50), 5) == 2);
  CHECK(valuation_p(Rational(3, 25), 5) == -2);
  CHECK(valuation_p(Rational(-7), 5) == 0);
  CHECK(valuation_p(Int(27), 3) == 3);
  CHECK_THROWS_AS(valuation_p(Rational(0), 5), std::domain_error);
  CHECK(is_p_integral(Rational(1, 3), 5));
  CHECK_FALSE(is_p_integral(Rational(1, 5), 5));
}

TEST_CASE("rational powers and binomials") {
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(2, 3), -1) == Rational(3, 2));
  CHECK(rational_pow(Rational(5), 0) == 1);
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), std::domain_error);
  CHECK(binomial_int(10, 4) == 210);
  CHECK(binomial_int(4, 10) == 0);
  CHECK(factorial_int(6) == 720);
  // C(-1/2, 2) = (-1/2)(-3/2)/2 = 3/8
  CHECK(binomial_rational(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(binomial_rational(Rational(5), 0) == 1);
}

TEST_CASE("series inverse really inverts") {
  const auto e = exp_series(Rational(1), 8);
  const auto inv = series_inverse(e);
  // e^{-t} has coefficients (-1)^k / k!
  for (std::size_t k = 0; k <= 8; ++k) {
    const Rational expect = Rational((k % 2 == 0) ? 1 : -1) / Rational(factorial_int((unsigned long)k));
    CHECK(inv.c[k] == expect);
  }
  const auto prod = series_mul(e, inv);
  CHECK(prod.c[0] == 1);
  for (std::size_t k = 1; k <= 8; ++k) CHECK(prod.c[k] == 0);
}

TEST_CASE("series guards") {
  const auto a = exp_series(Rational(1), 4);
  const auto b = exp_series(Rational(1), 5);
  CHECK_THROWS_AS(series_add(a, b), std::invalid_argument);
  auto z = TruncatedSeries<Rational>::constant(Rational(0), 3);
  CHECK_THROWS_AS(series_inverse(z), std::domain_error);
}
