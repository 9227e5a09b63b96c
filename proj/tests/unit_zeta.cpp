#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "apeuler/apostol.hpp"
#include "apeuler/gen_euler.hpp"
#include "apeuler/zeta.hpp"

using namespace apeuler;

namespace {
using cplx = std::complex<double>;

double poly_at(double lambda_num, double lambda_den, unsigned long k, const Rational& x) {
  const Rational lam(Rational((long)lambda_num) / Rational((long)lambda_den));
  return euler_polynomial(lam, k, x).get_d();
}
}  // namespace

TEST_CASE("negative integer arguments hit the polynomial values") {
  const struct {
    double lam;
    long num, den;
  } lams[] = {{0.3, 3, 10}, {-0.5, -1, 2}, {0.7, 7, 10}};
  const Rational xs[] = {Rational(1, 4), Rational(1), Rational(2)};
  for (const auto& L : lams) {
    const auto cfg = default_eval_config(L.lam);
    for (unsigned long k = 0; k <= 6; ++k) {
      for (const auto& x : xs) {
        const auto res = zeta_lambda(cplx(-(double)k, 0.0), x.get_d(), L.lam, cfg);
        CHECK(res.tolerance_met);
        const double expect = poly_at((double)L.num, (double)L.den, k, x);
        CHECK(std::abs(res.value.real() - expect) < 1e-10);
        CHECK(std::abs(res.value.imag()) < 1e-12);
      }
    }
  }
}

TEST_CASE("lambda = 0 collapses to twice a power") {
  const auto res = zeta_lambda(cplx(2.0, 0.0), 1.0, 0.0, default_eval_config(0.0));
  CHECK(res.tolerance_met);
  CHECK(std::abs(res.value.real() - 2.0) < 1e-12);
  const auto res3 = zeta_lambda(cplx(3.0, 0.0), 2.0, 0.0, default_eval_config(0.0));
  CHECK(std::abs(res3.value.real() - 2.0 / 8.0) < 1e-12);
}

TEST_CASE("acceleration handles lambda near one") {
  const double lam = 0.9;
  const auto cfg = default_eval_config(lam);
  CHECK(cfg.acceleration == Acceleration::alternating_acceleration);
  const auto res = zeta_lambda(cplx(-3.0, 0.0), 1.0, lam, cfg);
  CHECK(res.tolerance_met);
  const double expect = euler_polynomial(Rational(9, 10), 3, Rational(1)).get_d();
  CHECK(std::abs(res.value.real() - expect) < 1e-9);
}

TEST_CASE("series evaluation domain checks") {
  const SeriesEvalConfig cfg;
  CHECK_THROWS_AS(zeta_lambda(cplx(1.0, 0.0), 1.0, 1.0, cfg), std::domain_error);
  CHECK_THROWS_AS(zeta_lambda(cplx(1.0, 0.0), 1.0, -1.2, cfg), std::domain_error);
  CHECK_THROWS_AS(zeta_lambda(cplx(1.0, 0.0), 0.0, 0.5, cfg), std::domain_error);
  CHECK_THROWS_AS(zeta_lambda(cplx(1.0, 0.0), -2.0, 0.5, cfg), std::domain_error);
  SeriesEvalConfig bad = cfg;
  bad.max_terms = 4;
  CHECK_THROWS_AS(zeta_lambda(cplx(1.0, 0.0), 1.0, 0.5, bad), std::invalid_argument);
  SeriesEvalConfig bad2 = cfg;
  bad2.target_tolerance = 0.0;
  CHECK_THROWS_AS(zeta_lambda(cplx(1.0, 0.0), 1.0, 0.5, bad2), std::invalid_argument);
}

TEST_CASE("starved term budget is reported, not thrown") {
  SeriesEvalConfig cfg = default_eval_config(0.7);
  cfg.max_terms = 8;
  const auto res = zeta_lambda(cplx(-6.0, 0.0), 1.0, 0.7, cfg);
  CHECK_FALSE(res.tolerance_met);
  CHECK(res.terms_used == 8);
}

TEST_CASE("character L-values interpolate the twisted numbers") {
  for (long d : {3l, 5l}) {
    const auto chars = characters_mod(d);
    for (const auto& chi : chars) {
      for (double lam : {0.4, -0.3}) {
        const auto cfg = default_eval_config(lam);
        // lambda as an exact rational for the reference values
        const Rational rlam = (lam > 0) ? Rational(2, 5) : Rational(-3, 10);
        const auto ref = generalized_euler_numbers(chi, rlam, 5);
        for (unsigned long k = 0; k <= 5; ++k) {
          const auto res = l_lambda(cplx(-(double)k, 0.0), chi, lam, cfg);
          CHECK(res.tolerance_met);
          const cplx expect = ref[k].to_complex();
          CHECK(std::abs(res.value - expect) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("partial values decompose the character sum") {
  const auto chars = characters_mod(5);
  const double lam = 0.4;
  const auto cfg = default_eval_config(lam);
  for (const auto& chi : chars) {
    for (const cplx s : {cplx(2.0, 0.0), cplx(3.5, 0.0), cplx(-2.0, 0.0)}) {
      const auto whole = l_lambda(s, chi, lam, cfg);
      cplx acc(0.0, 0.0);
      for (long a = 1; a < 5; ++a) {
        const auto part = partial_zeta(s, a, 5, lam, cfg);
        CHECK(part.tolerance_met);
        acc += chi.value(a).to_complex() * part.value;
      }
      CHECK(std::abs(whole.value - 2.0 * acc) < 1e-9);
    }
  }
}

TEST_CASE("partial zeta validations") {
  const SeriesEvalConfig cfg;
  CHECK_THROWS_AS(partial_zeta(cplx(2.0, 0.0), 1, 4, 0.5, cfg), std::domain_error);
  CHECK_THROWS_AS(partial_zeta(cplx(2.0, 0.0), 0, 5, 0.5, cfg), std::domain_error);
  CHECK_THROWS_AS(partial_zeta(cplx(2.0, 0.0), 5, 5, 0.5, cfg), std::domain_error);
}
