#include "apeuler/padic.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace apeuler {

namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

Int mod_into(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("modular inverse does not exist");
  return r;
}

// exemplar-free precision for the series trait hooks
constexpr long kTraitPrecision = 32;

}  // namespace

Int pow_int(long base, long exp) {
  if (base < 0 || exp < 0) throw std::invalid_argument("pow_int needs nonnegative arguments");
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)base, (unsigned long)exp);
  return r;
}

PadicContext::PadicContext(long p_, long M_) : p(p_), M(M_) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (M < 1) throw std::invalid_argument("M must be at least 1");
}

PadicNumber PadicNumber::zero(long p) {
  PadicNumber z(p);
  z.zero_ = true;
  z.zero_prec_.reset();
  return z;
}

PadicNumber PadicNumber::zero_mod(long p, long abs_prec) {
  PadicNumber z(p);
  z.zero_ = true;
  z.zero_prec_ = abs_prec;
  return z;
}

PadicNumber::PadicNumber(long p, long valuation, const Int& unit, long rel_prec)
    : p_(p) {
  if (rel_prec <= 0)
    throw std::runtime_error("precision exhausted; surviving relative precision " +
                             std::to_string(rel_prec));
  const Int pk = pow_int(p, rel_prec);
  Int u = mod_into(unit, pk);
  if (u == 0 || mpz_divisible_ui_p(u.get_mpz_t(), (unsigned long)p))
    throw std::logic_error("p-adic unit part is divisible by p");
  zero_ = false;
  val_ = valuation;
  unit_ = std::move(u);
  rel_ = rel_prec;
}

long PadicNumber::abs_precision() const {
  if (is_exact_zero())
    throw std::logic_error("exact zero has unbounded precision");
  if (is_inexact_zero()) return *zero_prec_;
  return val_ + rel_;
}

long PadicNumber::valuation() const {
  if (zero_) throw std::domain_error("valuation of zero");
  return val_;
}

const Int& PadicNumber::unit() const {
  if (zero_) throw std::domain_error("zero has no unit part");
  return unit_;
}

long PadicNumber::rel_precision() const { return zero_ ? 0 : rel_; }

std::vector<long> PadicNumber::digit_list() const {
  std::vector<long> out;
  if (zero_) return out;
  Int u = unit_;
  for (long i = 0; i < rel_; ++i) {
    out.push_back((long)mpz_fdiv_ui(u.get_mpz_t(), (unsigned long)p_));
    mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), (unsigned long)p_);
  }
  return out;
}

void PadicNumber::check_same_prime(const PadicNumber& o) const {
  if (p_ != o.p_) throw std::invalid_argument("p-adic prime mismatch");
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
  check_same_prime(o);
  if (is_exact_zero()) return o;
  if (o.is_exact_zero()) return *this;
  if (is_inexact_zero() || o.is_inexact_zero()) {
    if (is_inexact_zero() && o.is_inexact_zero())
      return zero_mod(p_, std::min(*zero_prec_, *o.zero_prec_));
    const PadicNumber& z = is_inexact_zero() ? *this : o;
    const PadicNumber& x = is_inexact_zero() ? o : *this;
    const long A = std::min(*z.zero_prec_, x.abs_precision());
    if (x.val_ >= A) return zero_mod(p_, A);
    return PadicNumber(p_, x.val_, x.unit_, A - x.val_);
  }
  const long v = std::min(val_, o.val_);
  const long A = std::min(val_ + rel_, o.val_ + o.rel_);
  const Int mod = pow_int(p_, A - v);
  const Int xa = mod_into(unit_ * pow_int(p_, val_ - v), mod);
  const Int xb = mod_into(o.unit_ * pow_int(p_, o.val_ - v), mod);
  Int S = mod_into(xa + xb, mod);
  if (S == 0) return zero_mod(p_, A);
  long t = 0;
  while (mpz_divisible_ui_p(S.get_mpz_t(), (unsigned long)p_)) {
    mpz_divexact_ui(S.get_mpz_t(), S.get_mpz_t(), (unsigned long)p_);
    ++t;
  }
  return PadicNumber(p_, v + t, S, A - (v + t));
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  PadicNumber r(p_);
  r.zero_ = false;
  r.val_ = val_;
  r.rel_ = rel_;
  r.unit_ = pow_int(p_, rel_) - unit_;
  return r;
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
  check_same_prime(o);
  if (is_exact_zero() || o.is_exact_zero()) return zero(p_);
  if (is_inexact_zero() || o.is_inexact_zero()) {
    if (is_inexact_zero() && o.is_inexact_zero())
      return zero_mod(p_, *zero_prec_ + *o.zero_prec_);
    const PadicNumber& z = is_inexact_zero() ? *this : o;
    const PadicNumber& x = is_inexact_zero() ? o : *this;
    return zero_mod(p_, *z.zero_prec_ + x.val_);
  }
  const long rel = std::min(rel_, o.rel_);
  return PadicNumber(p_, val_ + o.val_, mod_into(unit_ * o.unit_, pow_int(p_, rel)), rel);
}

PadicNumber PadicNumber::inverse() const {
  if (zero_)
    throw std::domain_error(is_exact_zero()
                                ? "division by zero p-adic value"
                                : "inverse of a value indistinguishable from zero");
  return PadicNumber(p_, -val_, mod_inverse(unit_, pow_int(p_, rel_)), rel_);
}

PadicNumber PadicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (is_exact_zero()) {
    if (e == 0) throw std::invalid_argument("0^0 is undefined for p-adic zero");
    return *this;
  }
  if (is_inexact_zero()) {
    if (e == 0) throw std::invalid_argument("0^0 is undefined for p-adic zero");
    return zero_mod(p_, *zero_prec_ * e);
  }
  if (e == 0) return PadicNumber(p_, 0, Int(1), rel_);
  PadicNumber acc = *this;
  long highest = 63;
  while (highest > 0 && ((e >> highest) & 1) == 0) --highest;
  for (long bit = highest - 1; bit >= 0; --bit) {
    acc = acc * acc;
    if ((e >> bit) & 1) acc = acc * *this;
  }
  return acc;
}

bool PadicNumber::operator==(const PadicNumber& o) const {
  if (p_ != o.p_ || zero_ != o.zero_) return false;
  if (zero_) return zero_prec_ == o.zero_prec_;
  return val_ == o.val_ && rel_ == o.rel_ && unit_ == o.unit_;
}

std::string PadicNumber::to_string() const {
  std::ostringstream os;
  if (is_exact_zero()) return "0";
  if (is_inexact_zero()) {
    os << "O(" << p_ << "^" << *zero_prec_ << ")";
    return os.str();
  }
  const auto ds = digit_list();
  bool first = true;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] == 0) continue;
    if (!first) os << " + ";
    const long e = val_ + (long)i;
    os << ds[i];
    if (e == 1) os << "*" << p_;
    else if (e != 0) os << "*" << p_ << "^" << e;
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << p_ << "^" << abs_precision() << ")";
  return os.str();
}

PadicNumber PadicNumber::from_rational(const Rational& r, const PadicContext& ctx) {
  if (r == 0) return zero(ctx.p);
  Int num = r.get_num();
  Int den = r.get_den();
  long v = 0;
  while (mpz_divisible_ui_p(num.get_mpz_t(), (unsigned long)ctx.p)) {
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), (unsigned long)ctx.p);
    ++v;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)ctx.p)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), (unsigned long)ctx.p);
    --v;
  }
  const Int pk = pow_int(ctx.p, ctx.M);
  const Int unit = mod_into(num * mod_inverse(den, pk), pk);
  return PadicNumber(ctx.p, v, unit, ctx.M);
}

PadicNumber PadicNumber::from_int(const Int& n, const PadicContext& ctx) {
  return from_rational(Rational(n), ctx);
}

PadicNumber PadicNumber::from_int(long n, const PadicContext& ctx) {
  return from_rational(Rational(n), ctx);
}

long padic_agreement(const PadicNumber& a, const PadicNumber& b) {
  const PadicNumber d = a - b;
  if (d.is_exact_zero()) return LONG_MAX;
  if (d.is_inexact_zero()) return d.abs_precision();
  return d.valuation();
}

bool padic_equal_mod(const PadicNumber& a, const PadicNumber& b, long k) {
  return padic_agreement(a, b) >= k;
}

PadicNumber truncate_abs(const PadicNumber& x, long abs_prec) {
  if (x.is_exact_zero()) return x;
  if (x.is_inexact_zero())
    return PadicNumber::zero_mod(x.prime(), std::min(x.abs_precision(), abs_prec));
  if (x.valuation() >= abs_prec) return PadicNumber::zero_mod(x.prime(), abs_prec);
  const long rel = std::min(x.rel_precision(), abs_prec - x.valuation());
  return PadicNumber(x.prime(), x.valuation(), x.unit(), rel);
}

PadicNumber teichmuller(const Int& a, const PadicContext& ctx) {
  const Int pM = pow_int(ctx.p, ctx.M);
  Int x = mod_into(a, pM);
  if (mpz_divisible_ui_p(x.get_mpz_t(), (unsigned long)ctx.p))
    throw std::domain_error("a must be prime to p");
  for (long i = 0; i <= ctx.M; ++i) {
    Int next;
    mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), (unsigned long)ctx.p, pM.get_mpz_t());
    if (next == x) break;
    x = next;
  }
  return PadicNumber(ctx.p, 0, x, ctx.M);
}

PadicNumber teichmuller(long a, const PadicContext& ctx) {
  return teichmuller(Int(a), ctx);
}

PadicNumber angle_bracket(const Int& a, const PadicContext& ctx) {
  return PadicNumber::from_int(a, ctx) * teichmuller(a, ctx).inverse();
}

PadicNumber angle_bracket(long a, const PadicContext& ctx) {
  return angle_bracket(Int(a), ctx);
}

PadicNumber padic_exponent(const PadicNumber& base, const PadicNumber& s,
                           const PadicContext& ctx) {
  if (base.is_zero() || base.valuation() != 0 ||
      mpz_fdiv_ui(base.unit().get_mpz_t(), (unsigned long)ctx.p) != 1)
    throw std::domain_error("base must be congruent to 1 mod p");
  if (!s.is_zero() && s.valuation() < 0)
    throw std::domain_error("s must be a p-adic integer");

  const PadicNumber one = PadicNumber::from_int(1, ctx);
  const PadicNumber u = base - one;
  if (u.is_exact_zero()) return one;
  const long vu = u.is_inexact_zero() ? u.abs_precision() : u.valuation();

  PadicNumber acc = one;
  PadicNumber term = one;
  for (long j = 1;; ++j) {
    term = term * (s - PadicNumber::from_int(j - 1, ctx)) * u *
           PadicNumber::from_int(j, ctx).inverse();
    acc = acc + term;
    if (term.is_exact_zero()) break;
    // every term k >= j has valuation >= k*vu - v_p(k!) >= k((p-1)vu - 1)/(p-1),
    // an increasing floor, so this cut certifies the whole dropped tail
    if (j * ((ctx.p - 1) * vu - 1) >= (ctx.M + 1) * (ctx.p - 1)) break;
  }
  return acc;
}

PadicNumber padic_binom(const PadicNumber& s, unsigned long j, const PadicContext& ctx) {
  PadicNumber c = PadicNumber::from_int(1, ctx);
  for (unsigned long i = 1; i <= j; ++i) {
    c = c * (s - PadicNumber::from_int((long)(i - 1), ctx)) *
        PadicNumber::from_int((long)i, ctx).inverse();
    if (c.is_exact_zero()) return c;
  }
  if (!c.is_zero() && c.abs_precision() <= 0)
    throw std::runtime_error("precision exhausted; surviving absolute precision " +
                             std::to_string(c.abs_precision()));
  return c;
}

PadicNumber zero_like(const PadicNumber& x) { return PadicNumber::zero(x.prime()); }

PadicNumber one_like(const PadicNumber& x) {
  const long rel = x.rel_precision() > 0 ? x.rel_precision() : kTraitPrecision;
  return PadicNumber(x.prime(), 0, Int(1), rel);
}

PadicNumber from_int_like(const PadicNumber& x, const Int& n) {
  const long rel = x.rel_precision() > 0 ? x.rel_precision() : kTraitPrecision;
  return PadicNumber::from_rational(Rational(n), PadicContext(x.prime(), rel));
}

bool is_zero_el(const PadicNumber& x) { return x.is_zero(); }

PadicNumber inverse_el(const PadicNumber& x) { return x.inverse(); }

}  // namespace apeuler
