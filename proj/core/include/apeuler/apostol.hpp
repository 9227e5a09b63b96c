#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "apeuler/rational.hpp"
#include "apeuler/series.hpp"

namespace apeuler {

// lambda-Euler numbers E_0(lambda)..E_n(lambda), the coefficients of
// 2/(lambda e^t + 1). Recurrence, obtained by multiplying through:
//   E_0 = 2/(lambda+1),
//   E_m = -lambda/(lambda+1) * sum_{k<m} C(m,k) E_k.
// Requires lambda+1 invertible.
template <class F>
std::vector<F> euler_numbers(const F& lambda, unsigned long n) {
  const F one = one_like(lambda);
  const F lp1 = lambda + one;
  if (is_zero_el(lp1)) throw std::domain_error("pole of generating function: lambda = -1");
  const F lp1_inv = inverse_el(lp1);
  std::vector<F> E;
  E.reserve(n + 1);
  E.push_back((one + one) * lp1_inv);
  const F factor = zero_like(lambda) - lambda * lp1_inv;
  for (unsigned long m = 1; m <= n; ++m) {
    F acc = zero_like(lambda);
    for (unsigned long k = 0; k < m; ++k)
      acc = acc + from_int_like(lambda, binomial_int(m, k)) * E[k];
    E.push_back(factor * acc);
  }
  return E;
}

// Independent route: k! * [t^k] of series_inverse((lambda e^t + 1)/2).
template <class F>
std::vector<F> euler_numbers_series_oracle(const F& lambda, unsigned long n) {
  const F one = one_like(lambda);
  if (is_zero_el(lambda + one))
    throw std::domain_error("pole of generating function: lambda = -1");
  const F half = inverse_el(one + one);
  auto den = series_scale(half, series_add(series_scale(lambda, exp_series(one, n)),
                                           TruncatedSeries<F>::constant(one, n)));
  auto inv = series_inverse(den);
  std::vector<F> E;
  E.reserve(n + 1);
  F kfact = one;
  for (unsigned long k = 0; k <= n; ++k) {
    if (k > 0) kfact = kfact * from_int_like(lambda, Int((long)k));
    E.push_back(kfact * inv.c[k]);
  }
  return E;
}

// E_n(lambda : x) = sum_l C(n,l) E_l(lambda) x^{n-l}, with 0^0 = 1.
template <class F>
F euler_polynomial_from_table(const std::vector<F>& E, unsigned long n, const F& x) {
  F acc = zero_like(x);
  F xpow = one_like(x);
  // accumulate from l = n downward so x^{n-l} builds up incrementally
  for (unsigned long l = n + 1; l-- > 0;) {
    acc = acc + from_int_like(x, binomial_int(n, l)) * E[l] * xpow;
    if (l > 0) xpow = xpow * x;
  }
  return acc;
}

template <class F>
F euler_polynomial(const F& lambda, unsigned long n, const F& x) {
  return euler_polynomial_from_table(euler_numbers(lambda, n), n, x);
}

template <class F>
F field_pow(const F& base, unsigned long e) {
  F acc = one_like(base);
  for (unsigned long i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

// RHS of the distribution relation (odd d):
//   d^n sum_{a=0}^{d-1} (-1)^a lambda^a E_n(lambda^d : (a+x)/d).
template <class F>
F distribution_rhs(const F& lambda, unsigned long n, unsigned long d, const F& x) {
  if (d % 2 == 0) throw std::invalid_argument("distribution relation requires odd d");
  const F lam_d = field_pow(lambda, d);
  const auto Ed = euler_numbers(lam_d, n);
  const F dinv = inverse_el(from_int_like(lambda, Int((long)d)));
  F acc = zero_like(lambda);
  F lam_a = one_like(lambda);
  for (unsigned long a = 0; a < d; ++a) {
    const F arg = (from_int_like(lambda, Int((long)a)) + x) * dinv;
    F term = lam_a * euler_polynomial_from_table(Ed, n, arg);
    if (a % 2 == 1) term = zero_like(lambda) - term;
    acc = acc + term;
    lam_a = lam_a * lambda;
  }
  return from_int_like(lambda, rational_pow(Rational((long)d), (long)n).get_num()) * acc;
}

// Finite alternating power sum identity (stated for positive even n):
//   lhs = 2 sum_{l=0}^{n-1} (-1)^{l-1} lambda^l l^m
//   rhs = lambda^n sum_{l=0}^{m-1} C(m,l) E_l(lambda) n^{m-l} + (lambda^n - 1) E_m(lambda)
// with the 0^0 = 1 convention in the l = 0, m = 0 term.
template <class F>
std::pair<F, F> theorem5_sides(const F& lambda, unsigned long n, unsigned long m) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("n must be a positive even integer");
  const F one = one_like(lambda);
  const F two = one + one;

  F lhs = zero_like(lambda);
  F lam_l = one;
  for (unsigned long l = 0; l < n; ++l) {
    F lm = (l == 0 && m == 0) ? one
                              : from_int_like(lambda, rational_pow(Rational((long)l), (long)m).get_num());
    F term = two * lam_l * lm;
    if (l % 2 == 0) term = zero_like(lambda) - term;  // (-1)^{l-1}
    lhs = lhs + term;
    lam_l = lam_l * lambda;
  }

  const auto E = euler_numbers(lambda, m);
  F inner = zero_like(lambda);
  for (unsigned long l = 0; l < m; ++l) {
    inner = inner + from_int_like(lambda, binomial_int(m, l)) * E[l] *
                        from_int_like(lambda, rational_pow(Rational((long)n), (long)(m - l)).get_num());
  }
  const F lam_n = field_pow(lambda, n);
  F rhs = lam_n * inner + (lam_n - one) * E[m];
  return {lhs, rhs};
}

// 2 sum_{l=0}^{n-1} (-1)^l lambda^l l^m, the telescoping partial sum equal to
// E_m(lambda) - lambda^n E_m(lambda : n) for even n.
template <class F>
F alternating_power_sum(const F& lambda, unsigned long n, unsigned long m) {
  const F one = one_like(lambda);
  F acc = zero_like(lambda);
  F lam_l = one;
  for (unsigned long l = 0; l < n; ++l) {
    F lm = (l == 0 && m == 0) ? one
                              : from_int_like(lambda, rational_pow(Rational((long)l), (long)m).get_num());
    F term = (one + one) * lam_l * lm;
    if (l % 2 == 1) term = zero_like(lambda) - term;
    acc = acc + term;
    lam_l = lam_l * lambda;
  }
  return acc;
}

// Classical Bernoulli numbers; B_1 = -1/2 convention.
std::vector<Rational> bernoulli_numbers(unsigned long n);

// lambda-Bernoulli numbers B_n(lambda) for lambda != 1 (intended for roots of
// unity, where t/(lambda e^t - 1) is the right generating function):
//   B_0 = 0, B_1 = 1/(lambda-1),
//   (lambda-1) B_m = -lambda sum_{k<m} C(m,k) B_k   for m >= 2.
template <class F>
std::vector<F> lambda_bernoulli_numbers(const F& lambda, unsigned long n) {
  const F one = one_like(lambda);
  const F lm1 = lambda - one;
  if (is_zero_el(lm1))
    throw std::domain_error("lambda-Bernoulli requires lambda != 1; use bernoulli_numbers");
  const F lm1_inv = inverse_el(lm1);
  std::vector<F> B;
  B.reserve(n + 1);
  B.push_back(zero_like(lambda));
  if (n >= 1) B.push_back(lm1_inv);
  for (unsigned long m = 2; m <= n; ++m) {
    F acc = zero_like(lambda);
    for (unsigned long k = 0; k < m; ++k)
      acc = acc + from_int_like(lambda, binomial_int(m, k)) * B[k];
    B.push_back(zero_like(lambda) - lambda * acc * lm1_inv);
  }
  return B;
}

// B_n(lambda ; x) = sum_k C(n,k) B_k(lambda) x^{n-k}.
template <class F>
F lambda_bernoulli_polynomial(const F& lambda, unsigned long n, const F& x) {
  const auto B = lambda_bernoulli_numbers(lambda, n);
  F acc = zero_like(x);
  F xpow = one_like(x);
  for (unsigned long k = n + 1; k-- > 0;) {
    acc = acc + from_int_like(x, binomial_int(n, k)) * B[k] * xpow;
    if (k > 0) xpow = xpow * x;
  }
  return acc;
}

}  // namespace apeuler
