#pragma once

#include <string>
#include <vector>

#include "apeuler/dirichlet.hpp"
#include "apeuler/integrand.hpp"

namespace apeuler {

// Partial alternating sum sum_{x=0}^{dp^N-1} (-1)^x f(x), where d is the
// character extension of the tree (1 when no character factor is present).
// Rational-valued integrands are summed exactly in Q and embedded once.
PadicNumber fermionic_sum(const Integrand& f, long N, const PadicContext& ctx,
                          const EvalEnv& env = {});
PadicNumber fermionic_sum_extended(const Integrand& f, long d, long N,
                                   const PadicContext& ctx, const EvalEnv& env = {});

// p^{-N} sum_{x<p^N} f(x)
PadicNumber volkenborn_sum(const Integrand& f, long N, const PadicContext& ctx,
                           const EvalEnv& env = {});

// [p^N]_q^{-1} sum_{x<p^N} q^x f(x) for v_p(q-1) >= 1
PadicNumber q_sum(const Integrand& f, const Rational& q, long N,
                  const PadicContext& ctx);

// partial-sum residual of I(f(x+1)) + I(f) = 2 f(0); collapses to the exact
// boundary term f(dp^N) - f(0), so its valuation certifies convergence
PadicNumber lemma1_residual(const Integrand& f, long N, const PadicContext& ctx,
                            const EvalEnv& env = {});

// partial-sum residual of I(f(x+n)) + (-1)^n I(f) = 2 sum_{x<n} (-1)^{n-1-x} f(x)
PadicNumber theorem2_residual(const Integrand& f, long n, long N,
                              const PadicContext& ctx, const EvalEnv& env = {});

// partial-sum residual of I_1(f(x+1)) - I_1(f) = f'(0); needs a differentiable tree
PadicNumber volkenborn_residual(const Integrand& f, long N, const PadicContext& ctx,
                                const EvalEnv& env = {});

struct IdentityCheck {
  std::string id;
  PadicNumber lhs;
  PadicNumber rhs;
  long agreement = 0;  // LONG_MAX when the difference is an exact zero
};

struct TrigIntegralReport {
  long p = 0;
  long M = 0;
  long N = 0;
  std::vector<IdentityCheck> checks;
  bool all_hold(long digits) const;
};

// alternating sums of cos(ax), sin(ax) against 1 and -tan(a/2), plus the
// two rotation relations the pair satisfies at the partial-sum level
TrigIntegralReport prop12_check(const Rational& a, long N, const PadicContext& ctx);

// tan(a/2) against sum_{k<=n_max} (-1)^{k+1} a^{2k+1} E_{2k+1}(1) / (2k+1)!
IdentityCheck theorem13_check(const PadicNumber& a, long n_max, const PadicContext& ctx);

// Volkenborn sums of sin(ax) and cos(ax) against -a/2 and (a/2)cot(a/2), and
// the even Bernoulli series sum (-1)^k B_{2k} a^{2k} / (2k)! against the
// cotangent value
TrigIntegralReport bosonic_trig_check(const Rational& a, long N, const PadicContext& ctx);

struct WittReport {
  long p = 0;
  long M = 0;
  long N = 0;
  long d = 1;
  PadicNumber partial;
  PadicNumber limit;
  long agreement = 0;
};

// alternating partial sum of lambda^y (x+y)^n against E_n(lambda : x); the
// limit exists only when lambda^{p^N} -> 1, so lambda = 1 or v_p(lambda-1) >= 1
// is enforced
WittReport witt_check(const Rational& lambda, long n, const Rational& x, long N,
                      const PadicContext& ctx);

// extended-domain partial sum of (-1)^x chi(x) lambda^x x^n against the
// finite character sum for E_{n,chi}(lambda) evaluated in Z_p
WittReport generalized_witt_check(const PadicCharacter& chi, const Rational& lambda,
                                  long n, long N, const PadicContext& ctx);
WittReport generalized_witt_check(const DirichletCharacter& chi, const Rational& lambda,
                                  long n, long N, const PadicContext& ctx);

struct QbinomMomentReport {
  long n = 0;
  long p = 0;
  long M = 0;
  long N_used = 0;
  Rational q;
  PadicNumber empirical;       // q_sum of [x choose n]_q at N_used
  long stability_digits = 0;   // agreement between the N_used-1 and N_used sums
  PadicNumber printed;         // (-1)^n q^{n+1-C(n+1,2)} / [n+1]_q
  long printed_exponent = 0;
  long printed_agreement = 0;
  bool printed_agrees = false;
  bool fitted_found = false;   // an integer exponent reproducing the sum
  long fitted_exponent = 0;
  PadicNumber fitted;
  long fitted_agreement = 0;
};

// Moment of the q-binomial coefficient. The printed closed form is evaluated
// verbatim and compared; on disagreement the exponent is re-fitted by p-adic
// logarithms, and both candidates ship in the report. Disagreement is data.
QbinomMomentReport qbinom_moment(long n, const Rational& q, const PadicContext& ctx,
                                 long N_max);

struct C1NormReport {
  long p = 0;
  long M = 0;
  long N = 0;
  PadicNumber integral;
  long norm_bound_valuation = 0;  // min valuation over f(0) and sampled quotients
  long grid_points = 0;
  bool inequality_holds = false;  // v_p(integral) >= norm_bound_valuation - 1
};

// one-sided sample check of |integral|_p <= p * ||f||_1: the sampled
// difference quotients only lower-bound the norm, so a pass is sound
C1NormReport c1_norm_inequality_sample(const Integrand& f, const Rational& q,
                                       long N_sample, const PadicContext& ctx);

}  // namespace apeuler
