#include "apeuler/verify.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "apeuler/apostol.hpp"
#include "apeuler/gen_euler.hpp"
#include "apeuler/integrals.hpp"
#include "apeuler/padic_l.hpp"
#include "apeuler/zeta.hpp"

namespace apeuler {

namespace {

using CaseList = std::vector<VerifyCase>;

void record(CaseList& cs, const std::string& id, bool ok, const std::string& detail) {
  cs.push_back({id, ok ? "pass" : "fail", detail});
}

template <class Fn>
void expect_rejection(CaseList& cs, const std::string& id, Fn fn) {
  try {
    fn();
    record(cs, id, false, "expected a domain rejection, none was raised");
  } catch (const std::domain_error& e) {
    cs.push_back({id, "pass", std::string("verified domain rejection: ") + e.what()});
  }
}

std::string rs(const Rational& r) { return rational_to_human(r); }

std::string agree_str(long a) {
  return a == LONG_MAX ? std::string("exact") : std::to_string(a);
}

std::string sci(double v) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(2);
  os << v;
  return os.str();
}

std::string checks_detail(const TrigIntegralReport& rep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    if (i) os << ", ";
    os << rep.checks[i].id << " p^" << agree_str(rep.checks[i].agreement);
  }
  return os.str();
}

const std::vector<Rational>& lambda_grid() {
  static const std::vector<Rational> g = {Rational(1), Rational(2), Rational(1, 2),
                                          Rational(-1, 3), Rational(3, 5)};
  return g;
}

DirichletCharacter character_of_order(long d, long order) {
  for (const auto& c : characters_mod(d))
    if (c.order() == order) return c;
  throw std::logic_error("no character of the requested order");
}

// ---------------------------------------------------------------- recurrence

CaseList suite_recurrence(const VerifyOptions& opts) {
  CaseList cs;
  for (const auto& lam : lambda_grid()) {
    const auto a = euler_numbers<Rational>(lam, 40);
    const auto b = euler_numbers_series_oracle<Rational>(lam, 40);
    const bool ok = a == b;
    record(cs, "recurrence/lambda=" + rs(lam), ok,
           ok ? "recurrence matches the series route exactly through index 40"
              : "recurrence and series route disagree");
  }
  for (const auto& lam : lambda_grid()) {
    const auto E = euler_numbers<Rational>(lam, 2);
    const Rational lp1 = lam + 1;
    const bool ok = E[0] == Rational(2) / lp1 &&
                    E[1] == Rational(-2) * lam / (lp1 * lp1) &&
                    E[2] == (Rational(2) * lam * lam - Rational(2) * lam) /
                                (lp1 * lp1 * lp1);
    record(cs, "recurrence/closed-forms,lambda=" + rs(lam), ok,
           ok ? "E_0, E_1, E_2 match their closed forms exactly"
              : "a closed form disagrees with the table");
  }
  {
    const auto E1 = euler_numbers<Rational>(Rational(1), 2);
    const auto E2 = euler_numbers<Rational>(Rational(2), 2);
    // the (4L^2-2L+2)/(L+1)^3 variant of the E_2 closed form is wrong: at
    // lambda = 2 it gives 14/27 while the table value is 4/27
    const Rational variant = Rational(14, 27);
    const bool ok = E1[2] == 0 && E2[2] == Rational(4, 27) && E2[2] != variant;
    record(cs, "recurrence/e2-variant", ok,
           "E_2(1) = " + rs(E1[2]) + "; E_2(2) = " + rs(E2[2]) +
               ", the quadratic-numerator variant would give " + rs(variant));
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  long done = 0;
  while (done < 3) {
    const Rational lam = Rational(Int(num(rng))) / Rational(Int(den(rng)));
    if (lam == -1) continue;
    const bool ok = euler_numbers<Rational>(lam, 15) ==
                    euler_numbers_series_oracle<Rational>(lam, 15);
    record(cs, "recurrence/random-" + std::to_string(done), ok,
           "seeded lambda = " + rs(lam) + ", indices <= 15");
    ++done;
  }
  return cs;
}

// ------------------------------------------------------------------ theorem5

CaseList suite_theorem5(const VerifyOptions&) {
  CaseList cs;
  for (const auto& lam : lambda_grid())
    for (unsigned long n : {2UL, 4UL, 6UL, 8UL}) {
      bool ok = true;
      for (unsigned long m = 0; m <= 12 && ok; ++m) {
        const auto sides = theorem5_sides(lam, n, m);
        ok = sides.first == sides.second;
      }
      record(cs, "theorem5/lambda=" + rs(lam) + ",n=" + std::to_string(n), ok,
             ok ? "both sides equal exactly for m <= 12"
                : "sides disagree for some m <= 12");
    }
  return cs;
}

// -------------------------------------------------------------- distribution

CaseList suite_distribution(const VerifyOptions&) {
  CaseList cs;
  const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(1, 2)};
  for (const auto& lam : lambda_grid())
    for (unsigned long d : {1UL, 3UL, 5UL, 7UL}) {
      bool ok = true;
      for (unsigned long n = 0; n <= 12 && ok; ++n)
        for (const auto& x : xs)
          ok = ok && euler_polynomial(lam, n, x) == distribution_rhs(lam, n, d, x);
      record(cs, "distribution/lambda=" + rs(lam) + ",d=" + std::to_string(d), ok,
             ok ? "exact for n <= 12 and x in {0, 1, 1/2}"
                : "sides disagree somewhere on the n, x grid");
    }
  return cs;
}

// ---------------------------------------------------------------- characters

CaseList suite_characters(const VerifyOptions&) {
  CaseList cs;
  const std::vector<Rational> lams = {Rational(1), Rational(2), Rational(1, 2)};
  for (long d : {3L, 5L, 7L}) {
    const auto chars = characters_mod(d);
    for (const auto& lam : lams) {
      bool ok = true;
      for (const auto& chi : chars)
        ok = ok && generalized_euler_numbers(chi, lam, 10) ==
                       generalized_oracle(chi, lam, 10);
      record(cs, "characters/d=" + std::to_string(d) + ",lambda=" + rs(lam), ok,
             ok ? "finite sum equals the series route exactly for every "
                  "character, n <= 10"
                : "the two routes disagree for some character");
    }
  }
  {
    // quartic character mod 5 with chi(2) = i, lambda = 2: pinned values in Q(i)
    const auto chars = characters_mod(5);
    bool found = false;
    bool ok = false;
    std::string detail = "no quartic character with chi(2) = i found";
    for (const auto& chi : chars) {
      if (chi.order() != 4 || chi.exponent_at(2) != 1) continue;
      found = true;
      const auto E = generalized_euler_numbers(chi, Rational(2), 3);
      const std::vector<Cyclotomic> expected = {
          Cyclotomic(4, {Rational(-12, 11), Rational(8, 11)}),
          Cyclotomic(4, {Rational(156, 121), Rational(-192, 121)}),
          Cyclotomic(4, {Rational(-2252, 1331), Rational(4112, 1331)}),
          Cyclotomic(4, {Rational(13116, 14641), Rational(-38928, 14641)})};
      ok = E == expected;
      detail = ok ? "E_0..E_3 match the pinned Q(i) values exactly"
                  : "computed values differ from the pinned Q(i) values";
    }
    record(cs, "characters/pinned-quartic", found && ok, detail);
  }
  return cs;
}

// ---------------------------------------------------------------- corollary6

CaseList suite_corollary6(const VerifyOptions&) {
  CaseList cs;
  const double lams[] = {0.3, -0.5, 0.7};
  const Rational rlams[] = {Rational(3, 10), Rational(-1, 2), Rational(7, 10)};
  const double xs[] = {0.25, 1.0, 2.0};
  const Rational rxs[] = {Rational(1, 4), Rational(1), Rational(2)};
  for (int i = 0; i < 3; ++i) {
    const auto cfg = default_eval_config(lams[i]);
    double maxerr = 0.0;
    bool conv = true;
    for (unsigned long k = 0; k <= 6; ++k)
      for (int j = 0; j < 3; ++j) {
        const auto res =
            zeta_lambda(std::complex<double>(-(double)k, 0.0), xs[j], lams[i], cfg);
        conv = conv && res.tolerance_met;
        const double expect = euler_polynomial(rlams[i], k, rxs[j]).get_d();
        maxerr = std::max(maxerr, std::abs(res.value - std::complex<double>(expect)));
      }
    const bool ok = conv && maxerr < 1e-9;
    record(cs, "corollary6/lambda=" + rs(rlams[i]), ok,
           "max |zeta(-k, x) - E_k(x)| = " + sci(maxerr) +
               " over k <= 6, x in {1/4, 1, 2}" +
               (conv ? "" : "; series failed to meet tolerance"));
  }
  return cs;
}

// ---------------------------------------------------------------- corollary9

CaseList suite_corollary9(const VerifyOptions&) {
  CaseList cs;
  const double lams[] = {0.4, -0.3};
  const Rational rlams[] = {Rational(2, 5), Rational(-3, 10)};
  for (long d : {3L, 5L}) {
    const auto chars = characters_mod(d);
    for (int i = 0; i < 2; ++i) {
      const auto cfg = default_eval_config(lams[i]);
      double maxerr = 0.0;
      bool conv = true;
      for (const auto& chi : chars) {
        const auto E = generalized_euler_numbers(chi, rlams[i], 5);
        for (unsigned long k = 0; k <= 5; ++k) {
          const auto res =
              l_lambda(std::complex<double>(-(double)k, 0.0), chi, lams[i], cfg);
          conv = conv && res.tolerance_met;
          maxerr = std::max(maxerr, std::abs(res.value - E[k].to_complex()));
        }
      }
      const bool ok = conv && maxerr < 1e-8;
      record(cs, "corollary9/d=" + std::to_string(d) + ",lambda=" + rs(rlams[i]), ok,
             "max |l(-k, chi) - E_{k,chi}| = " + sci(maxerr) + " over k <= 5" +
                 (conv ? "" : "; series failed to meet tolerance"));
    }
  }
  for (long d : {3L, 5L}) {
    const auto chars = characters_mod(d);
    double maxerr = 0.0;
    bool conv = true;
    for (const auto& chi : chars)
      for (int i = 0; i < 2; ++i) {
        const auto cfg = default_eval_config(lams[i]);
        for (double s : {2.0, 3.5, -2.0}) {
          const auto full = l_lambda(std::complex<double>(s), chi, lams[i], cfg);
          conv = conv && full.tolerance_met;
          std::complex<double> acc{0.0, 0.0};
          for (long a = 1; a <= d; ++a) {
            if (!chi.is_unit(a)) continue;
            const auto part = partial_zeta(std::complex<double>(s), a, d, lams[i], cfg);
            conv = conv && part.tolerance_met;
            acc += 2.0 * chi.value(a).to_complex() * part.value;
          }
          maxerr = std::max(maxerr, std::abs(full.value - acc));
        }
      }
    const bool ok = conv && maxerr < 1e-8;
    record(cs, "corollary9/decomposition,d=" + std::to_string(d), ok,
           "max |l - 2 sum chi(a) H(s, a|" + std::to_string(d) +
               ")| = " + sci(maxerr) + " over s in {2, 7/2, -2}" +
               (conv ? "" : "; series failed to meet tolerance"));
  }
  return cs;
}

// ------------------------------------------------------------- interpolation

CaseList suite_interpolation(const VerifyOptions& opts) {
  CaseList cs;
  for (long p : {5L, 7L}) {
    const PadicContext ctx(p, opts.M);
    std::vector<std::pair<std::string, DirichletCharacter>> picks;
    picks.emplace_back("trivial", characters_mod(1)[0]);
    picks.emplace_back("quadratic", character_of_order(p, 2));
    for (const auto& [name, chi] : picks)
      for (const Rational& lam : {Rational(1), Rational(2)}) {
        long worst = LONG_MAX;
        for (long n = 0; n <= 4; ++n) {
          const PadicNumber s = PadicNumber::from_int(-n, ctx);
          const PadicNumber lhs = l_lambda_p(s, chi, lam, p, ctx);
          const PadicNumber rhs = interpolation_rhs(chi, (unsigned long)n, lam, ctx);
          worst = std::min(worst, padic_agreement_capped(lhs, rhs));
        }
        record(cs,
               "interpolation/p=" + std::to_string(p) + "," + name +
                   ",lambda=" + rs(lam),
               worst >= opts.M - 2,
               "l(-n) matches the twisted difference to p^" + agree_str(worst) +
                   " for n <= 4 (gate p^" + std::to_string(opts.M - 2) + ")");
      }
  }
  const std::vector<long> svals = {0, 1, 2, -3};
  for (long p : {5L, 7L}) {
    const PadicContext ctx(p, opts.M);
    for (long t : {0L, p - 1})
      for (const Rational& lam : {Rational(1), Rational(2)}) {
        bool ok = true;
        for (std::size_t i = 0; i < svals.size(); ++i)
          for (std::size_t j = i + 1; j < svals.size(); ++j)
            ok = ok && congruence_check(PadicNumber::from_int(svals[i], ctx),
                                        PadicNumber::from_int(svals[j], ctx), t, lam,
                                        ctx);
        record(cs,
               "interpolation/congruence,p=" + std::to_string(p) +
                   ",t=" + std::to_string(t) + ",lambda=" + rs(lam),
               ok,
               ok ? "l(s) mod p independent of s over {0, 1, 2, -3}"
                  : "residues mod p differ between s values");
      }
  }
  return cs;
}

// ------------------------------------------------------- binomial-identities

CaseList suite_binomial_identities(const VerifyOptions&) {
  CaseList cs;
  long total = 0, applicable = 0, holds1 = 0, holds2 = 0;
  for (long r = 1; r <= 8; ++r)
    for (long k = 0; k <= 8; ++k)
      for (long j = 0; j <= 8; ++j) {
        const auto res = binomial_identity_check(r, k, j);
        ++total;
        if (res.first_applicable) {
          ++applicable;
          if (res.first_holds) ++holds1;
        }
        if (res.second_holds) ++holds2;
      }
  record(cs, "binomial-identities/first", holds1 == applicable,
         std::to_string(holds1) + "/" + std::to_string(applicable) +
             " applicable triples hold exactly (of " + std::to_string(total) +
             " total)");
  record(cs, "binomial-identities/second", holds2 == total,
         std::to_string(holds2) + "/" + std::to_string(total) +
             " triples hold exactly");
  return cs;
}

// ----------------------------------------------------------------- theorem10

CaseList suite_theorem10(const VerifyOptions& opts) {
  CaseList cs;
  for (long p : {3L, 5L}) {
    const PadicContext ctx(p, opts.M);
    for (const Rational& lam : {Rational(1), Rational(2)}) {
      if (p == 3 && lam == 2) {
        // 1 + lambda = 3 is not a 3-adic unit, so every E_j(lambda^F) in the
        // series side leaves Z_3
        expect_rejection(cs, "theorem10/p=3,lambda=2",
                         [&] { theorem10_verify(2, 1, lam, ctx); });
        continue;
      }
      for (long r : {1L, 2L, 3L}) {
        const auto rep = theorem10_verify(2, r, lam, ctx);
        bool ok = rep.agreement_precision >= opts.M - 2;
        if (lam == 1 && r % 2 == 0)
          ok = ok && rep.agreement_precision_printed >= opts.M - 2;
        record(cs,
               "theorem10/p=" + std::to_string(p) + ",lambda=" + rs(lam) +
                   ",r=" + std::to_string(r),
               ok,
               "harmonic sum matches the series side to p^" +
                   agree_str(rep.agreement_precision) + " (printed B-term variant: p^" +
                   agree_str(rep.agreement_precision_printed) + ", k_max=" +
                   std::to_string(rep.k_max) + ")");
      }
    }
  }
  return cs;
}

// -------------------------------------------------------------------- lemma1

CaseList suite_lemma1(const VerifyOptions&) {
  CaseList cs;
  {
    const PadicContext ctx(3, 8);
    const Integrand f = Integrand::product(
        {Integrand::lambda_pow(Rational(2)), Integrand::monomial(2)});
    bool ok = true;
    std::ostringstream det;
    for (long N : {2L, 3L}) {
      const auto r = lemma1_residual(f, N, ctx);
      const bool good = !r.is_zero() && r.valuation() == 2 * N;
      ok = ok && good;
      det << "N=" << N << " v=" << (r.is_zero() ? -1 : r.valuation()) << " ";
    }
    record(cs, "lemma1/p=3,quadratic-weight", ok,
           "boundary residual of 2^x x^2 has valuation 2N: " + det.str());
  }
  for (long p : {3L, 5L}) {
    const PadicContext ctx(p, 8);
    const Integrand f = Integrand::monomial(1);
    bool ok = true;
    for (long N : {2L, 3L, 4L}) {
      const auto r = lemma1_residual(f, N, ctx);
      ok = ok && !r.is_zero() && r.valuation() == N;
    }
    record(cs, "lemma1/p=" + std::to_string(p) + ",f=x", ok,
           "residual of the coordinate function is exactly p^N");
  }
  {
    const PadicContext ctx(5, 8);
    const Integrand f = Integrand::lambda_pow(Rational(6));
    bool ok = true;
    std::ostringstream det;
    for (long n : {1L, 3L})
      for (long N : {2L, 3L}) {
        const auto r = theorem2_residual(f, n, N, ctx);
        const long v = r.is_zero() ? r.abs_precision() : r.valuation();
        ok = ok && v >= N;
        det << "n=" << n << ",N=" << N << " v=" << v << " ";
      }
    record(cs, "lemma1/theorem2,pure-power", ok,
           "shift residuals of 6^x sit above p^N: " + det.str());
  }
  {
    const PadicContext ctx(5, 8);
    const Integrand f = Integrand::product(
        {Integrand::lambda_pow(Rational(6)), Integrand::monomial(1)});
    bool ok = true;
    std::ostringstream det;
    for (long N : {2L, 3L}) {
      const auto r = theorem2_residual(f, 2, N, ctx);
      const long v = r.is_zero() ? r.abs_precision() : r.valuation();
      ok = ok && v >= N;
      det << "N=" << N << " v=" << v << " ";
    }
    record(cs, "lemma1/theorem2,mixed", ok,
           "shift-by-2 residuals of 6^x x sit above p^N: " + det.str());
  }
  {
    const PadicContext ctx(5, 8);
    bool ok = true;
    std::ostringstream det;
    for (long N : {2L, 3L}) {
      const auto r2 = volkenborn_residual(Integrand::monomial(2), N, ctx);
      const auto r3 = volkenborn_residual(Integrand::monomial(3), N, ctx);
      const bool good = !r2.is_zero() && r2.valuation() == N && !r3.is_zero() &&
                        r3.valuation() == 2 * N;
      ok = ok && good;
      det << "N=" << N << " v(x^2)=" << (r2.is_zero() ? -1 : r2.valuation())
          << " v(x^3)=" << (r3.is_zero() ? -1 : r3.valuation()) << " ";
    }
    record(cs, "lemma1/volkenborn-polynomials", ok,
           "difference-quotient residuals land at p^N and p^2N: " + det.str());
  }
  {
    const PadicContext ctx(5, 8);
    bool ok = true;
    std::ostringstream det;
    for (long N : {2L, 3L}) {
      const auto r = volkenborn_residual(Integrand::lambda_pow(Rational(6)), N, ctx);
      const long v = r.is_zero() ? r.abs_precision() : r.valuation();
      ok = ok && v >= N - 1;
      det << "N=" << N << " v=" << v << " ";
    }
    record(cs, "lemma1/volkenborn-geometric", ok,
           "residual of 6^x against log(6) clears the p^{N-1} floor: " + det.str());
  }
  return cs;
}

// ---------------------------------------------------------------------- witt

CaseList suite_witt(const VerifyOptions&) {
  CaseList cs;
  for (long p : {3L, 5L}) {
    const PadicContext ctx(p, 8);
    // lambda = 2 is a unit but 2^{p^N} does not tend to 1, so the partial
    // sums cannot converge; the domain check rejects it up front
    expect_rejection(cs, "witt/p=" + std::to_string(p) + ",lambda=2",
                     [&] { witt_check(Rational(2), 0, Rational(0), 2, ctx); });
    for (const Rational& lam : {Rational(1), Rational(1 + p)}) {
      for (long n = 0; n <= 4; ++n) {
        bool mono = true;
        long prev = LONG_MIN, terminal = 0;
        std::ostringstream levels;
        for (long N = 2; N <= 6; ++N) {
          const auto rep = witt_check(lam, n, Rational(0), N, ctx);
          mono = mono && rep.agreement >= prev;
          prev = rep.agreement;
          terminal = rep.agreement;
          levels << agree_str(rep.agreement) << (N < 6 ? "," : "");
        }
        record(cs,
               "witt/p=" + std::to_string(p) + ",lambda=" + rs(lam) +
                   ",n=" + std::to_string(n),
               mono && terminal >= 3,
               "certified agreement by level N=2..6: " + levels.str());
      }
    }
  }
  for (long p : {3L, 5L}) {
    const PadicContext ctx(p, 8);
    bool ok = true;
    for (long N = 2; N <= 6; ++N)
      ok = ok && witt_check(Rational(1), 1, Rational(0), N, ctx).agreement == N;
    record(cs, "witt/p=" + std::to_string(p) + ",f=x-exact-level", ok,
           ok ? "partial sums of (-1)^x x miss -1/2 by exactly p^N"
              : "agreement level deviates from N");
  }
  {
    const PadicContext ctx(5, 8);
    const auto rep = witt_check(Rational(1), 2, Rational(1, 2), 4, ctx);
    record(cs, "witt/p=5,shifted-argument", rep.agreement >= 3,
           "E_2(1 : 1/2) recovered to p^" + agree_str(rep.agreement));
  }
  {
    const PadicContext ctx(5, 8);
    const auto quad = character_of_order(5, 2);
    bool ok = true;
    std::ostringstream det;
    for (long n = 0; n <= 2; ++n) {
      const auto rep = generalized_witt_check(quad, Rational(1), n, 4, ctx);
      ok = ok && rep.agreement >= 3;
      det << "n=" << n << " p^" << agree_str(rep.agreement) << " ";
    }
    record(cs, "witt/generalized,quadratic-mod-5", ok,
           "extended partial sums meet the finite character sum: " + det.str());
  }
  {
    const PadicContext ctx(5, 8);
    const auto sext = character_of_order(7, 6);
    expect_rejection(cs, "witt/unsupported-character", [&] {
      generalized_witt_check(sext, Rational(1), 1, 2, ctx);
    });
  }
  return cs;
}

// ---------------------------------------------------------------------- trig

CaseList suite_trig(const VerifyOptions&) {
  CaseList cs;
  for (long p : {3L, 5L}) {
    const PadicContext ctx(p, 6);
    const auto rep = prop12_check(Rational(p), 4, ctx);
    record(cs, "trig/alternating,p=" + std::to_string(p), rep.all_hold(4),
           checks_detail(rep));
    const auto t13 = theorem13_check(PadicNumber::from_int(p, ctx), 4, ctx);
    record(cs, "trig/tangent-series,p=" + std::to_string(p), t13.agreement >= 4,
           "tan(a/2) against the odd series: p^" + agree_str(t13.agreement));
    const auto bos = bosonic_trig_check(Rational(p), 4, ctx);
    record(cs, "trig/bosonic,p=" + std::to_string(p), bos.all_hold(4),
           checks_detail(bos));
  }
  {
    const PadicContext ctx(5, 6);
    const auto rep = prop12_check(Rational(0), 2, ctx);
    record(cs, "trig/degenerate-argument", rep.all_hold(4), checks_detail(rep));
  }
  return cs;
}

// -------------------------------------------------------------------- qbinom

CaseList suite_qbinom(const VerifyOptions&) {
  CaseList cs;
  for (long p : {5L, 7L}) {
    const PadicContext ctx(p, 8);
    const Rational q(1 + p);
    for (long n = 0; n <= 4; ++n) {
      const auto rep = qbinom_moment(n, q, ctx, 4);
      const long expect_e = -n * (n - 1) / 2;
      const bool ok = rep.fitted_found && rep.fitted_exponent == expect_e &&
                      !rep.printed_agrees;
      record(cs, "qbinom/p=" + std::to_string(p) + ",n=" + std::to_string(n), ok,
             "literal exponent " + std::to_string(rep.printed_exponent) +
                 " agrees to p^" + agree_str(rep.printed_agreement) +
                 "; fitted exponent " + std::to_string(rep.fitted_exponent) +
                 " agrees to p^" + agree_str(rep.fitted_agreement) +
                 " (stability p^" + agree_str(rep.stability_digits) + ")");
    }
    {
      const auto total = q_sum(Integrand::constant(Rational(1)), q, 3, ctx);
      const PadicNumber one = PadicNumber::from_int(1, ctx);
      const long agr = padic_agreement_capped(total, one);
      record(cs, "qbinom/p=" + std::to_string(p) + ",total-mass", agr >= ctx.M,
             "q-average of 1 is 1 to p^" + agree_str(agr));
    }
    const std::vector<std::pair<std::string, Integrand>> fs = {
        {"f=x", Integrand::monomial(1)},
        {"f=x^3+2x",
         Integrand::sum({Integrand::monomial(3),
                         Integrand::product({Integrand::constant(Rational(2)),
                                             Integrand::monomial(1)})})},
        {"f=qbinom2", Integrand::qbinom(2)}};
    for (const auto& [name, f] : fs) {
      const auto rep = c1_norm_inequality_sample(f, q, 3, ctx);
      record(cs, "qbinom/p=" + std::to_string(p) + ",norm," + name,
             rep.inequality_holds,
             "sampled norm valuation " + std::to_string(rep.norm_bound_valuation) +
                 " over " + std::to_string(rep.grid_points) +
                 " samples; integral clears the bound");
    }
  }
  {
    const PadicContext ctx(5, 8);
    try {
      q_sum(Integrand::monomial(1), Rational(1), 2, ctx);
      record(cs, "qbinom/bosonic-redirect", false, "q = 1 was not redirected");
    } catch (const std::invalid_argument& e) {
      cs.push_back({"qbinom/bosonic-redirect", "pass",
                    std::string("redirected: ") + e.what()});
    }
  }
  return cs;
}

struct SuiteEntry {
  const char* name;
  CaseList (*fn)(const VerifyOptions&);
};

constexpr SuiteEntry kSuites[] = {
    {"recurrence", suite_recurrence},
    {"theorem5", suite_theorem5},
    {"distribution", suite_distribution},
    {"characters", suite_characters},
    {"corollary6", suite_corollary6},
    {"corollary9", suite_corollary9},
    {"interpolation", suite_interpolation},
    {"binomial-identities", suite_binomial_identities},
    {"theorem10", suite_theorem10},
    {"lemma1", suite_lemma1},
    {"witt", suite_witt},
    {"trig", suite_trig},
    {"qbinom", suite_qbinom},
};

}  // namespace

long VerifySuiteResult::passed() const {
  long n = 0;
  for (const auto& c : cases)
    if (c.status == "pass") ++n;
  return n;
}

long VerifySuiteResult::failed() const {
  long n = 0;
  for (const auto& c : cases)
    if (c.status == "fail") ++n;
  return n;
}

long VerifySuiteResult::skipped() const {
  long n = 0;
  for (const auto& c : cases)
    if (c.status == "skipped") ++n;
  return n;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

VerifySuiteResult run_verify_suite(const std::string& suite, const VerifyOptions& opts) {
  for (const auto& entry : kSuites) {
    if (suite != entry.name) continue;
    VerifySuiteResult res{suite, {}, 0};
    try {
      res.cases = entry.fn(opts);
    } catch (const std::exception& e) {
      res.cases.push_back({suite + "/unhandled-exception", "fail", e.what()});
    }
    if (res.failed() > 0) res.exit_code = 1;
    return res;
  }
  throw std::invalid_argument("unknown verify suite: " + suite);
}

std::vector<VerifySuiteResult> run_verify(const std::string& suite_or_all,
                                          const VerifyOptions& opts) {
  std::vector<VerifySuiteResult> out;
  if (suite_or_all == "all") {
    for (const auto& entry : kSuites) out.push_back(run_verify_suite(entry.name, opts));
    return out;
  }
  out.push_back(run_verify_suite(suite_or_all, opts));
  return out;
}

}  // namespace apeuler
