#include <climits>
#include <stdexcept>

#include "apeuler/dirichlet.hpp"
#include "apeuler/padic_l.hpp"
#include "doctest.h"

using namespace apeuler;

namespace {

const DirichletCharacter& quadratic_char(const std::vector<DirichletCharacter>& tab) {
  for (const auto& chi : tab)
    if (chi.order() == 2) return chi;
  throw std::logic_error("no quadratic character in table");
}

}  // namespace

TEST_CASE("restricted alternating harmonic sums, exact values") {
  // 2 sum_{j<=2p, p∤j} (-1)^j lambda^j / j^r, frozen from an independent
  // exact-arithmetic pass
  CHECK(harmonic_lhs_exact(2, 1, Rational(1), 3) == Rational(-9, 10));
  CHECK(harmonic_lhs_exact(2, 2, Rational(1), 3) == Rational(-291, 200));
  CHECK(harmonic_lhs_exact(2, 3, Rational(1), 3) == Rational(-6939, 4000));
  CHECK(harmonic_lhs_exact(2, 1, Rational(4), 3) == Rational(-1368, 5));
  CHECK(harmonic_lhs_exact(2, 1, Rational(1), 5) == Rational(-275, 252));
  CHECK(harmonic_lhs_exact(2, 2, Rational(1), 5) == Rational(-200155, 127008));
  CHECK(harmonic_lhs_exact(2, 3, Rational(1), 5) == Rational(-114468425, 64012032));
  CHECK(harmonic_lhs_exact(2, 1, Rational(2), 5) == Rational(-3928, 63));
  CHECK(harmonic_lhs_exact(2, 2, Rational(2), 5) == Rational(-32104, 3969));
  CHECK(harmonic_lhs_exact(2, 3, Rational(2), 5) == Rational(-1825853, 500094));

  const PadicContext ctx(5, 8);
  const auto embedded = harmonic_lhs(2, 1, Rational(1), ctx);
  const auto direct = PadicNumber::from_rational(Rational(-275, 252), ctx);
  CHECK(padic_agreement_capped(embedded, direct) >= 8);
}

TEST_CASE("l-function values at s = -1 mod 5") {
  const PadicContext ctx(5, 6);
  const auto s = PadicNumber::from_int(-1, ctx);
  const auto tab = characters_mod(5);

  const auto triv = l_lambda_p(s, characters_mod(1)[0], Rational(1), 5, ctx);
  CHECK(triv.is_zero());
  CHECK(triv.has_finite_precision());
  CHECK(triv.abs_precision() >= 5);

  const auto twisted = l_lambda_p(s, tab[1], Rational(1), 5, ctx);
  CHECK(padic_agreement_capped(twisted, PadicNumber::from_int(2, ctx)) >= 6);
}

TEST_CASE("l at negative integers interpolates twisted Euler numbers") {
  const PadicContext ctx(5, 8);
  const auto triv = characters_mod(1)[0];
  const auto quad = quadratic_char(characters_mod(5));
  for (const auto* chi : {&triv, &quad}) {
    const long F = std::max(5L, chi->modulus());
    for (unsigned long n = 1; n <= 3; ++n) {
      for (const Rational& lam : {Rational(1), Rational(2)}) {
        const auto s = PadicNumber::from_int(-(long)n, ctx);
        const auto lhs = l_lambda_p(s, *chi, lam, F, ctx);
        const auto rhs = interpolation_rhs(*chi, n, lam, ctx);
        CHECK(padic_agreement_capped(lhs, rhs) >= 6);
      }
    }
  }
}

TEST_CASE("partial sums relate through the unit-root factor") {
  // H(r, a|F) carries <a>^{-r} where B^(r)(a,F) carries a^{-r}; the quotient
  // is the r-th power of the Teichmueller lift of a
  const PadicContext ctx(5, 8);
  const long F = 15;
  for (long a : {1L, 2L, 7L, 11L}) {
    for (long r : {1L, 2L, 3L}) {
      const auto h = h_lambda_p(PadicNumber::from_int(r, ctx), a, F, Rational(1), ctx);
      const auto b = b_r(a, F, r, Rational(1), ctx);
      const auto lifted = b * teichmuller(a, ctx).pow(r);
      CHECK(padic_agreement_capped(h, lifted) >= 6);
    }
  }
}

TEST_CASE("values at integer arguments agree mod p") {
  const PadicContext ctx(5, 8);
  const long svals[] = {0, 1, 2, -3};
  for (long i = 0; i < 4; ++i)
    for (long j = i + 1; j < 4; ++j) {
      const auto s1 = PadicNumber::from_int(svals[i], ctx);
      const auto s2 = PadicNumber::from_int(svals[j], ctx);
      CHECK(congruence_check(s1, s2, 0, Rational(2), ctx));
      CHECK(congruence_check(s1, s2, 4, Rational(2), ctx));
    }
  CHECK_THROWS_AS(congruence_check(PadicNumber::from_int(0, ctx),
                                   PadicNumber::from_int(1, ctx), 3, Rational(2), ctx),
                  std::invalid_argument);
}

TEST_CASE("binomial coefficient identities hold exactly") {
  long applicable = 0;
  for (long r = 1; r <= 8; ++r)
    for (long k = 0; k <= 8; ++k)
      for (long j = 0; j <= 8; ++j) {
        const auto res = binomial_identity_check(r, k, j);
        CHECK(res.second_holds);
        if (res.first_applicable) {
          ++applicable;
          CHECK(res.first_holds);
        }
      }
  CHECK(applicable > 0);
}

TEST_CASE("harmonic sum report against the series side") {
  const PadicContext ctx(5, 8);

  const auto r1 = theorem10_verify(2, 1, Rational(1), ctx);
  CHECK(r1.agreement_precision >= 6);
  CHECK(r1.k_max > 0);

  // at lambda = 1 and even r the two B-term conventions coincide
  const auto r2 = theorem10_verify(2, 2, Rational(1), ctx);
  CHECK(r2.agreement_precision >= 6);
  CHECK(r2.agreement_precision_printed >= 6);

  const auto r3 = theorem10_verify(2, 3, Rational(2), ctx);
  CHECK(r3.agreement_precision >= 6);

  // 1 + lambda must be a unit for the series side to stay p-integral
  CHECK_THROWS_AS(theorem10_verify(2, 1, Rational(2), PadicContext(3, 8)),
                  std::domain_error);
}

TEST_CASE("agreement capping") {
  const PadicContext ctx(5, 8);
  const auto a = PadicNumber::from_int(2, ctx);
  const auto b = PadicNumber::from_int(2 + 125, ctx);
  CHECK(padic_agreement_capped(a, b) == 3);
  CHECK(padic_agreement_capped(a, a) == 8);
  // two exact zeros certify agreement at every precision
  CHECK(padic_agreement_capped(PadicNumber::zero(5), PadicNumber::zero(5)) == LONG_MAX);
}
