#include "apeuler/gen_euler.hpp"

namespace apeuler {

namespace {

void check_poles(const Rational& lambda, const Rational& lam_d) {
  if (lambda == -1) throw std::domain_error("pole of generating function: lambda = -1");
  if (lam_d == -1) throw std::domain_error("pole of generating function: lambda^d = -1");
}

}  // namespace

std::vector<Cyclotomic> generalized_euler_numbers(const DirichletCharacter& chi,
                                                  const Rational& lambda, unsigned long n) {
  const long d = chi.modulus();
  const long e = chi.value_field();
  const Rational lam_d = rational_pow(lambda, d);
  check_poles(lambda, lam_d);
  const auto Ed = euler_numbers(lam_d, n);

  std::vector<Cyclotomic> out;
  out.reserve(n + 1);
  Rational dpow = 1;
  for (unsigned long j = 0; j <= n; ++j) {
    Cyclotomic acc(e);
    Rational lam_a = 1;
    for (long a = 0; a < d; ++a) {
      if (chi.is_unit(a) || d == 1) {
        const Rational arg = Rational(a) / Rational(d);
        Rational coef = lam_a * euler_polynomial_from_table(Ed, j, arg);
        if (a % 2 == 1) coef = -coef;
        acc = acc + chi.value(a) * Cyclotomic(e, coef);
      }
      lam_a *= lambda;
    }
    out.push_back(Cyclotomic(e, dpow) * acc);
    dpow *= d;
  }
  return out;
}

std::vector<Cyclotomic> generalized_oracle(const DirichletCharacter& chi,
                                           const Rational& lambda, unsigned long n) {
  const long d = chi.modulus();
  const long e = chi.value_field();
  const Rational lam_d = rational_pow(lambda, d);
  check_poles(lambda, lam_d);

  const Cyclotomic zero(e);
  const Cyclotomic one(e, Rational(1));

  auto num = TruncatedSeries<Cyclotomic>::constant(zero, n);
  Rational lam_a = 1;
  for (long a = 0; a < d; ++a) {
    if (chi.is_unit(a) || d == 1) {
      Rational coef = 2 * lam_a;
      if (a % 2 == 1) coef = -coef;
      const Cyclotomic scale = chi.value(a) * Cyclotomic(e, coef);
      num = series_add(num, series_scale(scale, exp_series(Cyclotomic(e, Rational(a)), n)));
    }
    lam_a *= lambda;
  }

  auto den = series_add(series_scale(Cyclotomic(e, lam_d),
                                     exp_series(Cyclotomic(e, Rational(d)), n)),
                        TruncatedSeries<Cyclotomic>::constant(one, n));
  auto q = series_mul(num, series_inverse(den));

  std::vector<Cyclotomic> out;
  out.reserve(n + 1);
  Rational kfact = 1;
  for (unsigned long k = 0; k <= n; ++k) {
    if (k > 0) kfact *= Rational((long)k);
    out.push_back(Cyclotomic(e, kfact) * q.c[k]);
  }
  return out;
}

}  // namespace apeuler
