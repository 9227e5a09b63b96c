#include "apeuler/rational.hpp"

namespace apeuler {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_human(const Rational& r) { return r.get_str(); }

long valuation_p(const Int& n, long p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Int m = n;
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    m /= p;
    ++v;
  }
  return v;
}

long valuation_p(const Rational& r, long p) {
  if (r == 0) throw std::domain_error("valuation of zero");
  long v = 0;
  if (r.get_num() != 0) v += valuation_p(Int(r.get_num()), p);
  v -= valuation_p(Int(r.get_den()), p);
  return v;
}

bool is_p_integral(const Rational& r, long p) {
  if (r == 0) return true;
  return !mpz_divisible_ui_p(r.get_den().get_mpz_t(), p);
}

Rational rational_pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r == 0) {
    if (e < 0) throw std::domain_error("0 to a negative power");
    return Rational(0);
  }
  Rational base = e < 0 ? Rational(1) / r : r;
  unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), k);
  out.canonicalize();
  return out;
}

Int binomial_int(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational binomial_rational(const Rational& top, unsigned long j) {
  Rational acc(1);
  for (unsigned long i = 0; i < j; ++i) {
    acc *= (top - Rational((long)i));
    acc /= Rational((long)(i + 1));
  }
  return acc;
}

Int factorial_int(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace apeuler
