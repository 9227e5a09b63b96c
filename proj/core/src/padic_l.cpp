#include "apeuler/padic_l.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "apeuler/apostol.hpp"

namespace apeuler {

namespace {

void check_lambda_admissible(const Rational& lambda, long p) {
  if (lambda == 0 || valuation_p(lambda, p) != 0)
    throw std::domain_error("lambda must be a p-adic unit");
  if (lambda == -1 || valuation_p(lambda + 1, p) != 0)
    throw std::domain_error("pole mod p");
}

void check_h_domain(long a, long F, long p) {
  if (F < 1 || F % 2 == 0) throw std::invalid_argument("F must be odd and positive");
  if (F % p != 0) throw std::domain_error("F must be a multiple of p");
  if (!(a > 0 && a < F)) throw std::invalid_argument("a must satisfy 0 < a < F");
  if (a % p == 0) throw std::domain_error("a must be prime to p");
}

long ceil_div(long num, long den) { return (num + den - 1) / den; }

}  // namespace

PadicNumber h_lambda_p(const PadicNumber& s, long a, long F, const Rational& lambda,
                       const PadicContext& ctx) {
  check_h_domain(a, F, ctx.p);
  check_lambda_admissible(lambda, ctx.p);
  if (!s.is_zero() && s.valuation() < 0)
    throw std::domain_error("s must be a p-adic integer");

  const long vF = valuation_p(Int(F), ctx.p);
  const long jmax = ceil_div(ctx.M, vF);
  const auto E = euler_numbers(rational_pow(lambda, F), (unsigned long)jmax);

  const PadicNumber minus_s = -s;
  const Rational f_over_a = Rational(F) / Rational(a);

  PadicNumber sum = PadicNumber::zero(ctx.p);
  PadicNumber binom = PadicNumber::from_int(1, ctx);  // C(-s, j), built up
  Rational fa_pow = 1;
  for (long j = 0; j <= jmax; ++j) {
    if (j > 0) {
      binom = binom * (minus_s - PadicNumber::from_int(j - 1, ctx)) *
              PadicNumber::from_int(j, ctx).inverse();
      fa_pow *= f_over_a;
    }
    sum = sum + binom * PadicNumber::from_rational(fa_pow * E[(std::size_t)j], ctx);
  }

  Rational front = rational_pow(lambda, a) / 2;
  if (a % 2 == 1) front = -front;
  const PadicNumber bracket = padic_exponent(angle_bracket(a, ctx), minus_s, ctx);
  return PadicNumber::from_rational(front, ctx) * bracket * sum;
}

PadicNumber l_lambda_p(const PadicNumber& s, const PadicCharacter& chi,
                       const Rational& lambda, long F, const PadicContext& ctx) {
  if (F < 1 || F % 2 == 0) throw std::invalid_argument("F must be odd and positive");
  if (F % ctx.p != 0) throw std::domain_error("F must be a multiple of p");
  if (F % chi.conductor() != 0)
    throw std::invalid_argument("F must be a multiple of the conductor");
  check_lambda_admissible(lambda, ctx.p);

  PadicNumber acc = PadicNumber::zero(ctx.p);
  for (long a = 1; a <= F; ++a) {
    if (a % ctx.p == 0) continue;
    if (!chi.is_unit_at(a)) continue;
    acc = acc + chi.value(a, ctx) * h_lambda_p(s, a, F, lambda, ctx);
  }
  return PadicNumber::from_int(2, ctx) * acc;
}

PadicNumber l_lambda_p(const PadicNumber& s, const DirichletCharacter& chi,
                       const Rational& lambda, long F, const PadicContext& ctx) {
  return l_lambda_p(s, PadicCharacter::from_dirichlet(chi, ctx.p), lambda, F, ctx);
}

PadicNumber gen_euler_padic(const PadicCharacter& psi, const Rational& lambda,
                            unsigned long n, const PadicContext& ctx) {
  const long d = psi.modulus();
  const Rational lam_d = rational_pow(lambda, d);
  if (lam_d == -1) throw std::domain_error("pole of generating function: lambda^d = -1");
  const auto Ed = euler_numbers(lam_d, n);

  PadicNumber acc = PadicNumber::zero(ctx.p);
  Rational lam_a = 1;
  const Rational dn = rational_pow(Rational(d), (long)n);
  for (long a = 0; a < d; ++a) {
    if (psi.is_unit_at(a)) {
      const Rational arg = Rational(a) / Rational(d);
      Rational coef = dn * lam_a * euler_polynomial_from_table(Ed, n, arg);
      if (a % 2 == 1) coef = -coef;
      acc = acc + psi.value(a, ctx) * PadicNumber::from_rational(coef, ctx);
    }
    lam_a *= lambda;
  }
  return acc;
}

PadicNumber interpolation_rhs(const DirichletCharacter& chi, unsigned long n,
                              const Rational& lambda, const PadicContext& ctx) {
  check_lambda_admissible(lambda, ctx.p);
  const PadicCharacter chi_p = PadicCharacter::from_dirichlet(chi, ctx.p);
  const PadicCharacter psi = (chi_p * PadicCharacter::omega_power(ctx.p, -(long)n)).primitive();

  const PadicNumber E1 = gen_euler_padic(psi, lambda, n, ctx);
  const PadicNumber E2 = gen_euler_padic(psi, rational_pow(lambda, ctx.p), n, ctx);
  const PadicNumber psi_p = psi.value(ctx.p, ctx);
  const PadicNumber pn =
      PadicNumber::from_rational(rational_pow(Rational(ctx.p), (long)n), ctx);
  return E1 - pn * psi_p * E2;
}

PadicNumber b_r(long a, long F, long r, const Rational& lambda, const PadicContext& ctx) {
  check_h_domain(a, F, ctx.p);
  check_lambda_admissible(lambda, ctx.p);
  if (r < 1) throw std::invalid_argument("r must be a positive integer");

  const long vF = valuation_p(Int(F), ctx.p);
  const long jmax = ceil_div(ctx.M, vF);
  const auto E = euler_numbers(rational_pow(lambda, F), (unsigned long)jmax);

  const Rational f_over_a = Rational(F) / Rational(a);
  Rational sum = 0;
  Rational fa_pow = 1;
  for (long m = 0; m <= jmax; ++m) {
    if (m > 0) fa_pow *= f_over_a;
    sum += binomial_rational(Rational(-r), (unsigned long)m) * fa_pow * E[(std::size_t)m];
  }
  Rational front = rational_pow(lambda, a) * rational_pow(Rational(a), -r) / 2;
  if (a % 2 == 1) front = -front;
  // the dropped tail only starts at valuation (jmax+1)*vF; cap the claim there
  return truncate_abs(PadicNumber::from_rational(front * sum, ctx), (jmax + 1) * vF);
}

Rational harmonic_lhs_exact(unsigned long n, long r, const Rational& lambda, long p) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("n must be a positive even integer");
  if (r < 1) throw std::invalid_argument("r must be a positive integer");
  Rational acc = 0;
  Rational lam_j = 1;
  const long np = (long)n * p;
  for (long j = 1; j <= np; ++j) {
    lam_j *= lambda;
    if (j % p == 0) continue;
    Rational term = 2 * lam_j * rational_pow(Rational(j), -r);
    if (j % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

PadicNumber harmonic_lhs(unsigned long n, long r, const Rational& lambda,
                         const PadicContext& ctx) {
  check_lambda_admissible(lambda, ctx.p);
  return PadicNumber::from_rational(harmonic_lhs_exact(n, r, lambda, ctx.p), ctx);
}

long padic_agreement_capped(const PadicNumber& a, const PadicNumber& b) {
  const long raw = padic_agreement(a, b);
  if (raw != LONG_MAX) return raw;
  long cap = LONG_MAX;
  if (a.has_finite_precision()) cap = std::min(cap, a.abs_precision());
  if (b.has_finite_precision()) cap = std::min(cap, b.abs_precision());
  return cap;
}

HarmonicSumReport theorem10_verify(unsigned long n, long r, const Rational& lambda,
                                   const PadicContext& ctx, long k_max) {
  check_lambda_admissible(lambda, ctx.p);
  if (r < 1) throw std::invalid_argument("r must be a positive integer");

  const long pn = ctx.p * (long)n;
  const long vpn = valuation_p(Int(pn), ctx.p);
  if (k_max < 0) k_max = ceil_div(ctx.M, vpn);

  HarmonicSumReport rep{PadicNumber::zero(ctx.p), PadicNumber::zero(ctx.p),
                        PadicNumber::zero(ctx.p), 0, 0, k_max};
  rep.lhs = harmonic_lhs(n, r, lambda, ctx);

  const Rational lam_pn = rational_pow(lambda, pn);
  PadicNumber lsum = PadicNumber::zero(ctx.p);
  Rational pn_pow = 1;
  for (long k = 0; k <= k_max; ++k) {
    if (k > 0) pn_pow *= pn;
    const Rational coef =
        Rational(r) / Rational(r + k) * binomial_rational(Rational(-r - 1), (unsigned long)k) *
        lam_pn * pn_pow;
    const PadicNumber lval = l_lambda_p(PadicNumber::from_int(r + k, ctx),
                                        PadicCharacter::omega_power(ctx.p, -(k + r)), lambda,
                                        ctx.p, ctx);
    lsum = lsum + PadicNumber::from_rational(coef, ctx) * lval;
  }

  PadicNumber bsum = PadicNumber::zero(ctx.p);
  for (long a = 1; a < ctx.p; ++a) bsum = bsum + b_r(a, ctx.p, r, lambda, ctx);

  const PadicNumber two = PadicNumber::from_int(2, ctx);
  rep.rhs = -lsum + two * bsum;
  rep.rhs_printed =
      -lsum - two * PadicNumber::from_rational(lam_pn - 1, ctx) * bsum;
  rep.agreement_precision = padic_agreement_capped(rep.lhs, rep.rhs);
  rep.agreement_precision_printed = padic_agreement_capped(rep.lhs, rep.rhs_printed);
  return rep;
}

bool congruence_check(const PadicNumber& s1, const PadicNumber& s2, long t,
                      const Rational& lambda, const PadicContext& ctx) {
  if (t % (ctx.p - 1) != 0)
    throw std::invalid_argument("t must be congruent to 0 mod p-1");
  const PadicCharacter wt = PadicCharacter::omega_power(ctx.p, t);
  const PadicNumber l1 = l_lambda_p(s1, wt, lambda, ctx.p, ctx);
  const PadicNumber l2 = l_lambda_p(s2, wt, lambda, ctx.p, ctx);
  return padic_equal_mod(l1, l2, 1);
}

BinomialIdentityResult binomial_identity_check(long r, long k, long j) {
  if (r < 1 || k < 0 || j < 0)
    throw std::invalid_argument("need r >= 1, k >= 0, j >= 0");
  BinomialIdentityResult res;
  res.first_applicable = (j + k > 0) && (r + k != 1);
  if (res.first_applicable) {
    const Rational lhs1 = Rational(1) / Rational(r + k - 1) *
                          binomial_rational(Rational(-r), (unsigned long)k) *
                          binomial_rational(Rational(1 - r - k), (unsigned long)j);
    const Rational rhs1 = Rational(-1) / Rational(j + k) *
                          binomial_rational(Rational(-r), (unsigned long)(k + j - 1)) *
                          Rational(binomial_int((unsigned long)(k + j), (unsigned long)j));
    res.first_holds = (lhs1 == rhs1);
  }
  const Rational lhs2 = Rational(r) / Rational(r + k) *
                        binomial_rational(Rational(-r - 1), (unsigned long)k) *
                        binomial_rational(Rational(-r - k), (unsigned long)j);
  const Rational rhs2 = binomial_rational(Rational(-r), (unsigned long)(k + j)) *
                        Rational(binomial_int((unsigned long)(k + j), (unsigned long)j));
  res.second_holds = (lhs2 == rhs2);
  return res;
}

}  // namespace apeuler
