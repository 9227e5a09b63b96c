#pragma once

#include "apeuler/padic_char.hpp"

namespace apeuler {

// Partial p-adic lambda-zeta value
//   H(s, a|F) = ((-1)^a lambda^a / 2) <a>^{-s} sum_j C(-s,j) (F/a)^j E_j(lambda^F)
// for gcd(a,p)=1, 0<a<F, F an odd multiple of p, and lambda a p-adic unit with
// lambda+1 also a unit (which keeps every E_j(lambda^F) p-integral). The j-sum
// is cut at ceil(M / v_p(F)); term j carries valuation >= j*v_p(F).
PadicNumber h_lambda_p(const PadicNumber& s, long a, long F, const Rational& lambda,
                       const PadicContext& ctx);

// l(s, chi) = 2 sum_{a=1,(a,p)=1}^{F} chi(a) H(s, a|F)
PadicNumber l_lambda_p(const PadicNumber& s, const PadicCharacter& chi,
                       const Rational& lambda, long F, const PadicContext& ctx);
PadicNumber l_lambda_p(const PadicNumber& s, const DirichletCharacter& chi,
                       const Rational& lambda, long F, const PadicContext& ctx);

// finite character sum d^n sum_a (-1)^a lambda^a psi(a) E_n(lambda^d : a/d)
// with p-adic character values; the Z_p-valued sibling of the cyclotomic route
PadicNumber gen_euler_padic(const PadicCharacter& psi, const Rational& lambda,
                            unsigned long n, const PadicContext& ctx);

// E_{n,psi}(lambda) - p^n psi(p) E_{n,psi}(lambda^p), psi the primitive
// character of chi * omega^{-n}; the value l(-n, chi) interpolates
PadicNumber interpolation_rhs(const DirichletCharacter& chi, unsigned long n,
                              const Rational& lambda, const PadicContext& ctx);

// B^(r)(a,F) = ((-1)^a lambda^a a^{-r} / 2) sum_m C(-r,m) (F/a)^m E_m(lambda^F),
// truncated like h_lambda_p; an exact rational partial sum, embedded
PadicNumber b_r(long a, long F, long r, const Rational& lambda, const PadicContext& ctx);

// 2 sum_{j=1, (j,p)=1}^{np} (-1)^j lambda^j / j^r, exact
Rational harmonic_lhs_exact(unsigned long n, long r, const Rational& lambda, long p);
PadicNumber harmonic_lhs(unsigned long n, long r, const Rational& lambda,
                         const PadicContext& ctx);

struct HarmonicSumReport {
  PadicNumber lhs;          // the restricted alternating harmonic sum
  PadicNumber rhs;          // series side with the +2*sum_a B term
  PadicNumber rhs_printed;  // series side with the -2(lambda^{pn}-1)*sum_a B term
  long agreement_precision = 0;
  long agreement_precision_printed = 0;
  long k_max = 0;
};

// Both right-hand sides share the l-value series
//   -sum_{k=0}^{k_max} (r/(r+k)) C(-r-1,k) lambda^{pn} (pn)^k l(r+k, omega^{-k-r})
// and differ in the B-term attached to it; k_max defaults to the smallest k
// with k*v_p(pn) >= M. Agreement is measured against harmonic_lhs.
HarmonicSumReport theorem10_verify(unsigned long n, long r, const Rational& lambda,
                                   const PadicContext& ctx, long k_max = -1);

// l(s1, omega^t) = l(s2, omega^t) mod p, for t = 0 mod p-1
bool congruence_check(const PadicNumber& s1, const PadicNumber& s2, long t,
                      const Rational& lambda, const PadicContext& ctx);

struct BinomialIdentityResult {
  bool first_applicable = false;  // needs j+k > 0 and r != 1-k
  bool first_holds = false;
  bool second_holds = false;
};

// the two exact rational binomial identities:
//   (1/(r+k-1)) C(-r,k) C(1-r-k,j) = (-1/(j+k)) C(-r,k+j-1) C(k+j,j)
//   (r/(r+k)) C(-r-1,k) C(-r-k,j)  = C(-r,k+j) C(k+j,j)
BinomialIdentityResult binomial_identity_check(long r, long k, long j);

// padic_agreement with the exact-zero sentinel capped to what the operands
// can certify
long padic_agreement_capped(const PadicNumber& a, const PadicNumber& b);

}  // namespace apeuler
