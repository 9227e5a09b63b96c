#include "apeuler/integrals.hpp"

#include <climits>
#include <stdexcept>

#include "apeuler/apostol.hpp"
#include "apeuler/padic_elementary.hpp"
#include "apeuler/padic_l.hpp"

namespace apeuler {

namespace {

long range_count(long d, long p, long N) {
  long count = d;
  for (long i = 0; i < N; ++i) {
    count *= p;
    if (count > 50'000'000L) throw std::invalid_argument("summation range too large");
  }
  return count;
}

long vp_factorial(long m, long p) {
  long v = 0;
  for (long q = p; q <= m; q *= p) v += m / q;
  return v;
}

void check_level(long N) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
}

// lambda^x extends continuously to Z_p only when lambda^{p^N} -> 1
void check_fermionic_lambda(const Rational& lambda, long p) {
  if (valuation_p(lambda, p) != 0)
    throw std::domain_error("lambda must be a p-adic unit");
  if (lambda != 1 && valuation_p(lambda - 1, p) < 1)
    throw std::domain_error("fermionic limit needs v_p(lambda - 1) >= 1");
}

void check_bosonic_q(const Rational& q, long p) {
  if (q == 1)
    throw std::invalid_argument("q = 1 is the bosonic limit; use volkenborn_sum");
  if (valuation_p(q - 1, p) < 1)
    throw std::domain_error("q must satisfy v_p(q-1) >= 1");
}

Rational q_unit_count(const Rational& q, long m) {  // [m]_q
  return (Rational(1) - rational_pow(q, m)) / (Rational(1) - q);
}

PadicNumber embed(const Rational& r, const PadicContext& ctx) {
  return PadicNumber::from_rational(r, ctx);
}

}  // namespace

PadicNumber fermionic_sum_extended(const Integrand& f, long d, long N,
                                   const PadicContext& ctx, const EvalEnv& env) {
  check_level(N);
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("domain extension must be odd and positive");
  const long count = range_count(d, ctx.p, N);
  if (f.rational_valued(env)) {
    Rational acc(0);
    for (long x = 0; x < count; ++x) {
      const Rational v = f.eval_rational(Rational(x), env);
      if (x % 2 == 0)
        acc += v;
      else
        acc -= v;
    }
    return embed(acc, ctx);
  }
  PadicNumber acc = PadicNumber::zero(ctx.p);
  for (long x = 0; x < count; ++x) {
    const PadicNumber v = f.eval_padic(Rational(x), ctx, env);
    acc = (x % 2 == 0) ? acc + v : acc - v;
  }
  return acc;
}

PadicNumber fermionic_sum(const Integrand& f, long N, const PadicContext& ctx,
                          const EvalEnv& env) {
  return fermionic_sum_extended(f, f.character_extension(), N, ctx, env);
}

PadicNumber volkenborn_sum(const Integrand& f, long N, const PadicContext& ctx,
                           const EvalEnv& env) {
  check_level(N);
  const long count = range_count(1, ctx.p, N);
  if (f.rational_valued(env)) {
    Rational acc(0);
    for (long x = 0; x < count; ++x) acc += f.eval_rational(Rational(x), env);
    return embed(acc / Rational(pow_int(ctx.p, N)), ctx);
  }
  // dividing by p^N costs N digits, so the terms are evaluated with headroom
  const PadicContext work(ctx.p, ctx.M + N + 2);
  PadicNumber acc = PadicNumber::zero(work.p);
  for (long x = 0; x < count; ++x) acc = acc + f.eval_padic(Rational(x), work, env);
  const PadicNumber scale(work.p, -N, 1, work.M);
  return truncate_abs(acc * scale, ctx.M);
}

PadicNumber q_sum(const Integrand& f, const Rational& q, long N,
                  const PadicContext& ctx) {
  check_level(N);
  check_bosonic_q(q, ctx.p);
  const long count = range_count(1, ctx.p, N);
  const EvalEnv env{q};
  if (f.rational_valued(env)) {
    Rational acc(0);
    Rational weight(1);
    for (long x = 0; x < count; ++x) {
      acc += weight * f.eval_rational(Rational(x), env);
      weight *= q;
    }
    return embed(acc / q_unit_count(q, count), ctx);
  }
  // [p^N]_q has valuation N, so its inverse costs N digits
  const PadicContext work(ctx.p, ctx.M + N + 2);
  PadicNumber acc = PadicNumber::zero(work.p);
  PadicNumber weight = PadicNumber::from_int(1, work);
  const PadicNumber qp = embed(q, work);
  for (long x = 0; x < count; ++x) {
    acc = acc + weight * f.eval_padic(Rational(x), work, env);
    weight = weight * qp;
  }
  return truncate_abs(acc * embed(q_unit_count(q, count), work).inverse(), ctx.M);
}

PadicNumber lemma1_residual(const Integrand& f, long N, const PadicContext& ctx,
                            const EvalEnv& env) {
  return theorem2_residual(f, 1, N, ctx, env);
}

PadicNumber theorem2_residual(const Integrand& f, long n, long N,
                              const PadicContext& ctx, const EvalEnv& env) {
  check_level(N);
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const long d = f.character_extension();
  const long count = range_count(d, ctx.p, N);
  const long sign = (n % 2 == 0) ? 1 : -1;
  if (f.rational_valued(env)) {
    Rational acc(0);
    for (long x = 0; x < count; ++x) {
      const Rational v =
          f.eval_rational(Rational(x + n), env) -
          Rational(sign) * f.eval_rational(Rational(x), env);
      acc += (x % 2 == 0) ? v : -v;
    }
    for (long x = 0; x < n; ++x) {
      const Rational v = f.eval_rational(Rational(x), env) * 2;
      acc -= ((n - 1 - x) % 2 == 0) ? v : -v;
    }
    return embed(acc, ctx);
  }
  PadicNumber lhs = fermionic_sum_extended(f.translated(n), d, N, ctx, env);
  const PadicNumber tail = fermionic_sum_extended(f, d, N, ctx, env);
  lhs = (sign == 1) ? lhs - tail : lhs + tail;
  PadicNumber rhs = PadicNumber::zero(ctx.p);
  const PadicNumber two = PadicNumber::from_int(2, ctx);
  for (long x = 0; x < n; ++x) {
    const PadicNumber v = two * f.eval_padic(Rational(x), ctx, env);
    rhs = ((n - 1 - x) % 2 == 0) ? rhs + v : rhs - v;
  }
  return lhs - rhs;
}

PadicNumber volkenborn_residual(const Integrand& f, long N, const PadicContext& ctx,
                                const EvalEnv& env) {
  check_level(N);
  const Integrand fp = f.derivative();
  const long count = range_count(1, ctx.p, N);
  // the shifted-minus-plain sum telescopes to the boundary difference quotient
  if (f.rational_valued(env)) {
    const Rational quotient =
        (f.eval_rational(Rational(count), env) - f.eval_rational(Rational(0), env)) /
        Rational(pow_int(ctx.p, N));
    if (fp.rational_valued(env))
      return embed(quotient - fp.eval_rational(Rational(0), env), ctx);
    return embed(quotient, ctx) - fp.eval_padic(Rational(0), ctx, env);
  }
  const PadicContext work(ctx.p, ctx.M + N + 2);
  const PadicNumber diff = f.eval_padic(Rational(count), work, env) -
                           f.eval_padic(Rational(0), work, env);
  const PadicNumber scale(work.p, -N, 1, work.M);
  return truncate_abs(diff * scale - fp.eval_padic(Rational(0), work, env), ctx.M);
}

bool TrigIntegralReport::all_hold(long digits) const {
  for (const auto& c : checks)
    if (c.agreement < digits) return false;
  return true;
}

TrigIntegralReport prop12_check(const Rational& a, long N, const PadicContext& ctx) {
  check_level(N);
  if (a != 0 && valuation_p(a, ctx.p) < 1)
    throw std::domain_error("trig argument needs v_p(a) >= 1");
  TrigIntegralReport rep{ctx.p, ctx.M, N, {}};

  const PadicNumber sc = fermionic_sum(Integrand::cosine(a), N, ctx);
  const PadicNumber ss = fermionic_sum(Integrand::sine(a), N, ctx);
  const PadicNumber one = PadicNumber::from_int(1, ctx);
  const PadicNumber tan_half =
      (a == 0) ? PadicNumber::zero(ctx.p) : padic_tan(embed(a / 2, ctx), ctx);
  rep.checks.push_back(
      {"cos-integral", sc, one, padic_agreement_capped(sc, one)});
  rep.checks.push_back(
      {"sin-integral", ss, -tan_half, padic_agreement_capped(ss, -tan_half)});

  // rotating by one step mixes the pair linearly:
  //   (1+cos a) S_c - sin a S_s = 2,  (1+cos a) S_s + sin a S_c = 0
  const PadicNumber cos_a = (a == 0) ? one : padic_cos(embed(a, ctx), ctx);
  const PadicNumber sin_a =
      (a == 0) ? PadicNumber::zero(ctx.p) : padic_sin(embed(a, ctx), ctx);
  const PadicNumber lhs1 = (one + cos_a) * sc - sin_a * ss;
  const PadicNumber two = PadicNumber::from_int(2, ctx);
  const PadicNumber lhs2 = (one + cos_a) * ss + sin_a * sc;
  const PadicNumber zero = PadicNumber::zero(ctx.p);
  rep.checks.push_back({"rotation-cos", lhs1, two, padic_agreement_capped(lhs1, two)});
  rep.checks.push_back({"rotation-sin", lhs2, zero, padic_agreement_capped(lhs2, zero)});
  return rep;
}

IdentityCheck theorem13_check(const PadicNumber& a, long n_max, const PadicContext& ctx) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (a.is_exact_zero()) {
    const PadicNumber z = PadicNumber::zero(ctx.p);
    return {"tangent-series", z, z, padic_agreement_capped(z, z)};
  }
  const long va = a.is_inexact_zero() ? a.abs_precision() : a.valuation();
  if (va < 1) throw std::domain_error("trig argument needs v_p(a) >= 1");

  const PadicNumber lhs = padic_tan(a * embed(Rational(1) / 2, ctx), ctx);

  const auto E = euler_numbers<Rational>(Rational(1), 2 * (unsigned long)n_max + 1);
  const PadicNumber a2 = a * a;
  PadicNumber power = a;
  PadicNumber rhs = PadicNumber::zero(ctx.p);
  for (long k = 0; k <= n_max; ++k) {
    const Rational coeff = E[(std::size_t)(2 * k + 1)] /
                           Rational(factorial_int((unsigned long)(2 * k + 1)));
    const PadicNumber term = power * embed(coeff, ctx);
    rhs = (k % 2 == 0) ? rhs - term : rhs + term;  // (-1)^{k+1}
    power = power * a2;
  }
  // the first omitted term caps what the truncated series can certify
  const long cap = (2 * n_max + 3) * va - vp_factorial(2 * n_max + 3, ctx.p);
  rhs = truncate_abs(rhs, std::min(ctx.M, std::max(cap, 1L)));
  return {"tangent-series", lhs, rhs, padic_agreement_capped(lhs, rhs)};
}

TrigIntegralReport bosonic_trig_check(const Rational& a, long N, const PadicContext& ctx) {
  check_level(N);
  if (a != 0 && valuation_p(a, ctx.p) < 1)
    throw std::domain_error("trig argument needs v_p(a) >= 1");
  TrigIntegralReport rep{ctx.p, ctx.M, N, {}};

  const PadicNumber vol_sin = volkenborn_sum(Integrand::sine(a), N, ctx);
  const PadicNumber rhs_sin = (a == 0) ? PadicNumber::zero(ctx.p) : embed(-a / 2, ctx);
  rep.checks.push_back(
      {"sin-volkenborn", vol_sin, rhs_sin, padic_agreement_capped(vol_sin, rhs_sin)});

  const PadicNumber vol_cos = volkenborn_sum(Integrand::cosine(a), N, ctx);
  PadicNumber cot_value = PadicNumber::from_int(1, ctx);
  if (a != 0) {
    const PadicNumber half = embed(a / 2, ctx);
    cot_value = half * padic_cos(half, ctx) * padic_sin(half, ctx).inverse();
  }
  rep.checks.push_back({"cos-volkenborn", vol_cos, cot_value,
                        padic_agreement_capped(vol_cos, cot_value)});

  // (a/2)cot(a/2) = sum_k (-1)^k B_{2k} a^{2k} / (2k)!
  const long va = (a == 0) ? LONG_MAX / 4 : valuation_p(a, ctx.p);
  long k_cut = 0;
  while (2 * (k_cut + 1) * va - vp_factorial(2 * (k_cut + 1), ctx.p) - 1 < ctx.M &&
         k_cut < 200)
    ++k_cut;
  const auto B = bernoulli_numbers(2 * (unsigned long)k_cut);
  PadicNumber series = PadicNumber::zero(ctx.p);
  Rational a2k(1);
  for (long k = 0; k <= k_cut; ++k) {
    const Rational term = B[(std::size_t)(2 * k)] * a2k /
                          Rational(factorial_int((unsigned long)(2 * k)));
    series = (k % 2 == 0) ? series + embed(term, ctx) : series - embed(term, ctx);
    a2k *= a * a;
  }
  const long cap = (a == 0) ? ctx.M
                            : 2 * (k_cut + 1) * va - vp_factorial(2 * (k_cut + 1), ctx.p) - 1;
  series = truncate_abs(series, std::min(ctx.M, std::max(cap, 1L)));
  rep.checks.push_back({"cotangent-series", series, cot_value,
                        padic_agreement_capped(series, cot_value)});
  return rep;
}

WittReport witt_check(const Rational& lambda, long n, const Rational& x, long N,
                      const PadicContext& ctx) {
  check_level(N);
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  check_fermionic_lambda(lambda, ctx.p);
  const Integrand f = Integrand::product(
      {Integrand::lambda_pow(lambda), Integrand::monomial(n).shifted(x)});
  WittReport rep{ctx.p, ctx.M, N, 1, PadicNumber::zero(ctx.p), PadicNumber::zero(ctx.p), 0};
  rep.partial = fermionic_sum(f, N, ctx);
  rep.limit = embed(euler_polynomial<Rational>(lambda, (unsigned long)n, x), ctx);
  rep.agreement = padic_agreement_capped(rep.partial, rep.limit);
  return rep;
}

WittReport generalized_witt_check(const PadicCharacter& chi, const Rational& lambda,
                                  long n, long N, const PadicContext& ctx) {
  check_level(N);
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  check_fermionic_lambda(lambda, ctx.p);
  const Integrand f = Integrand::product({Integrand::character_factor(chi),
                                          Integrand::lambda_pow(lambda),
                                          Integrand::monomial(n)});
  WittReport rep{ctx.p, ctx.M, N, chi.modulus(), PadicNumber::zero(ctx.p),
                 PadicNumber::zero(ctx.p), 0};
  rep.partial = fermionic_sum(f, N, ctx);
  rep.limit = gen_euler_padic(chi, lambda, (unsigned long)n, ctx);
  rep.agreement = padic_agreement_capped(rep.partial, rep.limit);
  return rep;
}

WittReport generalized_witt_check(const DirichletCharacter& chi, const Rational& lambda,
                                  long n, long N, const PadicContext& ctx) {
  return generalized_witt_check(PadicCharacter::from_dirichlet(chi, ctx.p), lambda, n,
                                N, ctx);
}

QbinomMomentReport qbinom_moment(long n, const Rational& q, const PadicContext& ctx,
                                 long N_max) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (N_max < 2) throw std::invalid_argument("N_max must be at least 2");
  check_bosonic_q(q, ctx.p);

  const Integrand f = Integrand::qbinom(n);
  const PadicNumber prev = q_sum(f, q, N_max - 1, ctx);
  const PadicNumber empirical = q_sum(f, q, N_max, ctx);

  QbinomMomentReport rep{n,        ctx.p,     ctx.M,     N_max,     q,
                         empirical, 0,        empirical, 0,         0,
                         false,    false,     0,         empirical, 0};
  rep.stability_digits = padic_agreement_capped(prev, rep.empirical);

  const Rational base = Rational((n % 2 == 0) ? 1 : -1) / q_unit_count(q, n + 1);
  rep.printed_exponent = n + 1 - n * (n + 1) / 2;
  rep.printed = embed(base * rational_pow(q, rep.printed_exponent), ctx);
  rep.printed_agreement = padic_agreement_capped(rep.empirical, rep.printed);
  const long threshold = std::max<long>(2, rep.stability_digits - 1);
  rep.printed_agrees = rep.printed_agreement >= threshold;

  // recover the exponent from empirical = base * q^e by p-adic logarithms
  rep.fitted = rep.printed;
  const PadicNumber target = rep.empirical * embed(Rational(1) / base, ctx);
  long e = 0;
  bool solvable = false;
  if (target.is_exact_zero()) {
    solvable = false;
  } else if (!target.is_zero() && target.valuation() == 0) {
    const PadicNumber log_t = padic_log(target, ctx);  // throws unless = 1 mod p
    if (log_t.is_zero()) {
      solvable = true;  // q^0 within precision
    } else {
      const PadicNumber ratio = log_t * padic_log(embed(q, ctx), ctx).inverse();
      if (!ratio.is_zero() && ratio.valuation() >= 0) {
        // the partial sum certifies the limit only to its settled digits, so
        // digits of the ratio above that level are noise; reconstructing mod
        // a larger power would alias the exponent
        const long settled = std::max<long>(1, rep.stability_digits - 1);
        const long A =
            std::max<long>(1, std::min<long>({ratio.abs_precision(), settled, 12}));
        const Int m = (pow_int(ctx.p, ratio.valuation()) * ratio.unit()) %
                      pow_int(ctx.p, A);
        const long m_long = m.get_si();
        const long span = pow_int(ctx.p, A).get_si();
        e = (m_long <= span / 2) ? m_long : m_long - span;
        solvable = true;
      } else if (ratio.is_inexact_zero()) {
        solvable = true;
      }
    }
  }
  if (solvable) {
    rep.fitted_exponent = e;
    rep.fitted = embed(base * rational_pow(q, e), ctx);
    rep.fitted_agreement = padic_agreement_capped(rep.empirical, rep.fitted);
    rep.fitted_found = rep.fitted_agreement >= threshold;
  }
  return rep;
}

C1NormReport c1_norm_inequality_sample(const Integrand& f, const Rational& q,
                                       long N_sample, const PadicContext& ctx) {
  check_bosonic_q(q, ctx.p);
  C1NormReport rep{ctx.p, ctx.M, N_sample, q_sum(f, q, N_sample, ctx), 0, 0, false};

  const EvalEnv env{q};
  const long grid = ctx.p * ctx.p;
  long min_v = LONG_MAX;
  long samples = 0;
  if (f.rational_valued(env)) {
    std::vector<Rational> vals;
    vals.reserve((std::size_t)grid);
    for (long x = 0; x < grid; ++x) vals.push_back(f.eval_rational(Rational(x), env));
    if (vals[0] != 0) {
      min_v = std::min(min_v, valuation_p(vals[0], ctx.p));
      ++samples;
    }
    for (long x = 0; x < grid; ++x)
      for (long y = x + 1; y < grid; ++y) {
        const Rational diff = vals[(std::size_t)x] - vals[(std::size_t)y];
        if (diff == 0) continue;
        min_v = std::min(min_v, valuation_p(diff, ctx.p) - valuation_p(Int(y - x), ctx.p));
        ++samples;
      }
  } else {
    std::vector<PadicNumber> vals;
    vals.reserve((std::size_t)grid);
    for (long x = 0; x < grid; ++x) vals.push_back(f.eval_padic(Rational(x), ctx, env));
    if (!vals[0].is_zero()) {
      min_v = std::min(min_v, vals[0].valuation());
      ++samples;
    }
    for (long x = 0; x < grid; ++x)
      for (long y = x + 1; y < grid; ++y) {
        const PadicNumber diff = vals[(std::size_t)x] - vals[(std::size_t)y];
        if (diff.is_zero()) continue;
        min_v = std::min(min_v, diff.valuation() - valuation_p(Int(y - x), ctx.p));
        ++samples;
      }
  }
  rep.grid_points = samples;
  if (samples == 0) {
    rep.norm_bound_valuation = 0;
    rep.inequality_holds = rep.integral.is_zero();
    return rep;
  }
  rep.norm_bound_valuation = min_v;
  if (rep.integral.is_exact_zero())
    rep.inequality_holds = true;
  else if (rep.integral.is_inexact_zero())
    rep.inequality_holds = rep.integral.abs_precision() >= min_v - 1;
  else
    rep.inequality_holds = rep.integral.valuation() >= min_v - 1;
  return rep;
}

}  // namespace apeuler
