#include "apeuler/padic_elementary.hpp"

#include <stdexcept>

namespace apeuler {

namespace {

PadicNumber one_at(const PadicContext& ctx) {
  return PadicNumber::from_int(1, ctx);
}

// after this k, every term of exp/sin/cos is 0 mod p^M:
// k*va - v_p(k!) >= k*va - (k-1)/(p-1) >= M
bool exp_tail_dead(long k, long va, const PadicContext& ctx) {
  return (k * va - ctx.M) * (ctx.p - 1) >= k - 1;
}

long require_positive_valuation(const PadicNumber& a, const char* what) {
  if (a.is_inexact_zero()) {
    if (a.abs_precision() >= 1) return a.abs_precision();
    throw std::domain_error(std::string(what) + " series requires v_p(a) >= 1");
  }
  const long va = a.valuation();
  if (va < 1) throw std::domain_error(std::string(what) + " series requires v_p(a) >= 1");
  return va;
}

Rational inv_long(long k) { return Rational(1) / Rational(k); }

}  // namespace

PadicNumber padic_exp(const PadicNumber& a, const PadicContext& ctx) {
  if (a.is_exact_zero()) return one_at(ctx);
  if (a.is_inexact_zero()) {
    const long k = require_positive_valuation(a, "exp");
    return PadicNumber(ctx.p, 0, 1, std::min(ctx.M, k));
  }
  const long va = require_positive_valuation(a, "exp");
  PadicNumber sum = one_at(ctx);
  PadicNumber term = a;
  for (long k = 1; !exp_tail_dead(k, va, ctx); ++k) {
    sum = sum + term;
    term = term * a * PadicNumber::from_rational(inv_long(k + 1), ctx);
  }
  return truncate_abs(sum, ctx.M);
}

PadicNumber padic_log(const PadicNumber& a, const PadicContext& ctx) {
  if (a.is_zero()) throw std::domain_error("log requires an argument congruent to 1 mod p");
  const PadicNumber b = a - one_at(ctx);
  if (b.is_exact_zero()) return PadicNumber::zero(ctx.p);
  if (b.is_inexact_zero()) {
    if (b.abs_precision() < 1)
      throw std::domain_error("log requires an argument congruent to 1 mod p");
    return PadicNumber::zero_mod(ctx.p, std::min(ctx.M, b.abs_precision()));
  }
  const long vb = b.valuation();
  if (vb < 1) throw std::domain_error("log requires an argument congruent to 1 mod p");

  // k*vb - v_p(k) >= k*vb - log_p(k) which is increasing in k, so once
  // k*vb - (ilog_p(k)+1) clears M the rest of the tail is dead too
  PadicNumber sum = PadicNumber::zero(ctx.p);
  PadicNumber power = b;
  long ilog = 0, next_pow = ctx.p;
  for (long k = 1;; ++k) {
    while (next_pow <= k) {
      ++ilog;
      next_pow *= ctx.p;
    }
    if (k * vb - ilog - 1 >= ctx.M) break;
    const Rational coeff = (k % 2 == 1) ? inv_long(k) : -inv_long(k);
    sum = sum + power * PadicNumber::from_rational(coeff, ctx);
    power = power * b;
  }
  if (sum.is_zero()) return sum;
  return truncate_abs(sum, ctx.M);
}

PadicNumber padic_sin(const PadicNumber& a, const PadicContext& ctx) {
  if (a.is_exact_zero()) return PadicNumber::zero(ctx.p);
  if (a.is_inexact_zero()) {
    const long k = require_positive_valuation(a, "sin");
    return PadicNumber::zero_mod(ctx.p, std::min(ctx.M, k));
  }
  const long va = require_positive_valuation(a, "sin");
  const PadicNumber a2 = a * a;
  PadicNumber sum = PadicNumber::zero(ctx.p);
  PadicNumber term = a;
  for (long j = 0; !exp_tail_dead(2 * j + 1, va, ctx); ++j) {
    sum = sum + term;
    const long m = 2 * j + 2;
    term = -(term * a2 * PadicNumber::from_rational(inv_long(m) * inv_long(m + 1), ctx));
  }
  return truncate_abs(sum, ctx.M);
}

PadicNumber padic_cos(const PadicNumber& a, const PadicContext& ctx) {
  if (a.is_exact_zero()) return one_at(ctx);
  if (a.is_inexact_zero()) {
    const long k = require_positive_valuation(a, "cos");
    return PadicNumber(ctx.p, 0, 1, std::min(ctx.M, 2 * k));
  }
  const long va = require_positive_valuation(a, "cos");
  const PadicNumber a2 = a * a;
  PadicNumber sum = one_at(ctx);
  PadicNumber term = -(a2 * PadicNumber::from_rational(inv_long(2), ctx));
  for (long j = 1; !exp_tail_dead(2 * j, va, ctx); ++j) {
    sum = sum + term;
    const long m = 2 * j + 1;
    term = -(term * a2 * PadicNumber::from_rational(inv_long(m) * inv_long(m + 1), ctx));
  }
  return truncate_abs(sum, ctx.M);
}

PadicNumber padic_tan(const PadicNumber& a, const PadicContext& ctx) {
  if (a.is_exact_zero()) return PadicNumber::zero(ctx.p);
  require_positive_valuation(a, "tan");
  const PadicNumber c = padic_cos(a, ctx);
  return truncate_abs(padic_sin(a, ctx) * c.inverse(), ctx.M);
}

PadicNumber padic_elementary(ElementaryKind kind, const PadicNumber& a,
                             const PadicContext& ctx) {
  switch (kind) {
    case ElementaryKind::exp: return padic_exp(a, ctx);
    case ElementaryKind::log: return padic_log(a, ctx);
    case ElementaryKind::sin: return padic_sin(a, ctx);
    case ElementaryKind::cos: return padic_cos(a, ctx);
    case ElementaryKind::tan: return padic_tan(a, ctx);
  }
  throw std::invalid_argument("unknown elementary kind");
}

}  // namespace apeuler
