#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace apeuler {

using Int = mpz_class;
using Rational = mpq_class;

// Parses "num/den", "num", or "-num/den". Denominator must be nonzero; the
// result is canonical (positive denominator, reduced, zero as 0/1).
Rational rational_from_string(const std::string& s);

// Canonical "num/den" form, including "0/1" and "7/1". The machine format.
std::string rational_to_string(const Rational& r);

// Human form as GMP prints it: "7", "-1/2", "0".
std::string rational_to_human(const Rational& r);

// p-adic valuation of a nonzero rational; throws on zero.
long valuation_p(const Rational& r, long p);
long valuation_p(const Int& n, long p);

bool is_p_integral(const Rational& r, long p);

// r^e with negative e meaning inverse; 0^e for e<0 throws.
Rational rational_pow(const Rational& r, long e);

Int binomial_int(unsigned long n, unsigned long k);

// Generalized binomial C(top, j) = top(top-1)...(top-j+1)/j! over Q.
Rational binomial_rational(const Rational& top, unsigned long j);

Int factorial_int(unsigned long n);

// ---- field-trait hooks used by TruncatedSeries<F> ----
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int_like(const Rational&, const Int& n) { return Rational(n); }
inline bool is_zero_el(const Rational& r) { return r == 0; }
inline Rational inverse_el(const Rational& r) {
  if (r == 0) throw std::domain_error("division by zero rational");
  return Rational(1) / r;
}

}  // namespace apeuler
