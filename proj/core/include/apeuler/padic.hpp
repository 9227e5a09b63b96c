#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apeuler/rational.hpp"

namespace apeuler {

struct PadicContext {
  long p;
  long M;
  PadicContext(long p_, long M_);
};

// A p-adic value at finite precision: p^valuation * unit, with the unit known
// modulo p^rel (so the value is known modulo p^{valuation+rel}). Zero comes in
// two flavors: exact (known to be 0) and inexact (only known divisible by
// p^k). Precision propagates pessimistically through arithmetic; nothing ever
// pads digits it cannot certify.
class PadicNumber {
 public:
  static PadicNumber zero(long p);
  static PadicNumber zero_mod(long p, long abs_prec);
  PadicNumber(long p, long valuation, const Int& unit, long rel_prec);

  static PadicNumber from_rational(const Rational& r, const PadicContext& ctx);
  static PadicNumber from_int(const Int& n, const PadicContext& ctx);
  static PadicNumber from_int(long n, const PadicContext& ctx);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && !zero_prec_.has_value(); }
  bool is_inexact_zero() const { return zero_ && zero_prec_.has_value(); }

  // known modulo p^{abs_precision()}; exact zero has no finite bound
  bool has_finite_precision() const { return !is_exact_zero(); }
  long abs_precision() const;

  long valuation() const;     // throws on zero of either flavor
  const Int& unit() const;    // throws on zero
  long rel_precision() const; // 0 for zeros
  std::vector<long> digit_list() const;

  PadicNumber operator+(const PadicNumber& o) const;
  PadicNumber operator-(const PadicNumber& o) const;
  PadicNumber operator*(const PadicNumber& o) const;
  PadicNumber operator-() const;
  PadicNumber inverse() const;
  PadicNumber pow(long e) const;

  // representation equality: same flavor, valuation, digits, precision
  bool operator==(const PadicNumber& o) const;

  std::string to_string() const;

 private:
  long p_;
  bool zero_ = true;
  std::optional<long> zero_prec_;  // inexact zero: divisible by p^k; nullopt = exact
  long val_ = 0;
  Int unit_ = 0;  // in [1, p^rel), prime to p
  long rel_ = 0;

  explicit PadicNumber(long p) : p_(p) {}
  void check_same_prime(const PadicNumber& o) const;
};

// largest certified k with a = b mod p^k; LONG_MAX sentinel when the
// difference collapses to an exact zero
long padic_agreement(const PadicNumber& a, const PadicNumber& b);

bool padic_equal_mod(const PadicNumber& a, const PadicNumber& b, long k);

// drop information so the value is only known modulo p^abs_prec
PadicNumber truncate_abs(const PadicNumber& x, long abs_prec);

// the (p-1)-st root of unity congruent to a mod p
PadicNumber teichmuller(const Int& a, const PadicContext& ctx);
PadicNumber teichmuller(long a, const PadicContext& ctx);

// <a> = a / teichmuller(a), always = 1 mod p
PadicNumber angle_bracket(const Int& a, const PadicContext& ctx);
PadicNumber angle_bracket(long a, const PadicContext& ctx);

// base^s for base = 1 mod p and s a p-adic integer, via the binomial series
// sum_j C(s,j)(base-1)^j
PadicNumber padic_exponent(const PadicNumber& base, const PadicNumber& s,
                           const PadicContext& ctx);

// C(s, j) = s(s-1)...(s-j+1)/j!
PadicNumber padic_binom(const PadicNumber& s, unsigned long j, const PadicContext& ctx);

Int pow_int(long base, long exp);  // base^exp as an Int, exp >= 0

// ---- field-trait hooks (series use at a fixed exemplar precision) ----
PadicNumber zero_like(const PadicNumber& x);
PadicNumber one_like(const PadicNumber& x);
PadicNumber from_int_like(const PadicNumber& x, const Int& n);
bool is_zero_el(const PadicNumber& x);
PadicNumber inverse_el(const PadicNumber& x);

}  // namespace apeuler
