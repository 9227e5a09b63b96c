#include "apeuler/padic_char.hpp"

#include <numeric>
#include <stdexcept>

namespace apeuler {

namespace {

long pow_mod(long base, long exp, long mod) {
  long r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp) {
    if (exp & 1) r = (long)((__int128)r * base % mod);
    base = (long)((__int128)base * base % mod);
    exp >>= 1;
  }
  return r;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long smallest_primitive_root(long p) {
  const auto qs = prime_factors(p - 1);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : qs)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace

PadicCharacter::PadicCharacter(long p, long f, std::vector<long> res)
    : p_(p), f_(f), res_(std::move(res)) {}

PadicCharacter PadicCharacter::trivial(long p) {
  return PadicCharacter(p, 1, {1});
}

PadicCharacter PadicCharacter::omega(long p) { return omega_power(p, 1); }

PadicCharacter PadicCharacter::omega_power(long p, long t) {
  long tm = t % (p - 1);
  if (tm < 0) tm += p - 1;
  std::vector<long> res((std::size_t)p, 0);
  for (long a = 1; a < p; ++a) res[(std::size_t)a] = pow_mod(a, tm, p);
  return PadicCharacter(p, p, std::move(res));
}

PadicCharacter PadicCharacter::from_dirichlet(const DirichletCharacter& chi, long p) {
  const long d = chi.modulus();
  const long ord = chi.order();
  if ((p - 1) % ord != 0)
    throw std::domain_error("values not in Z_p; unsupported");
  const long ef = chi.value_field();
  const long g = smallest_primitive_root(p);
  std::vector<long> res((std::size_t)d, 0);
  for (long a = 0; a < d; ++a) {
    const long k = chi.exponent_at(a);
    if (k < 0) continue;
    // zeta_{ef}^k has order dividing ord | p-1, so k(p-1)/ef is integral
    const long e = (long)((__int128)k * (p - 1) / ef % (p - 1));
    res[(std::size_t)a] = pow_mod(g, e, p);
  }
  if (d == 1) res[0] = 1;
  return PadicCharacter(p, d, std::move(res));
}

long PadicCharacter::residue_at(long a) const {
  long r = a % f_;
  if (r < 0) r += f_;
  return res_[(std::size_t)r];
}

PadicNumber PadicCharacter::value(long a, const PadicContext& ctx) const {
  const long r = residue_at(a);
  if (r == 0) return PadicNumber::zero(p_);
  return teichmuller(Int(r), ctx);
}

PadicNumber PadicCharacter::value(const Int& a, const PadicContext& ctx) const {
  return value((long)mpz_fdiv_ui(a.get_mpz_t(), (unsigned long)f_), ctx);
}

PadicCharacter PadicCharacter::operator*(const PadicCharacter& o) const {
  if (p_ != o.p_) throw std::invalid_argument("p-adic character prime mismatch");
  const long f = std::lcm(f_, o.f_);
  std::vector<long> res((std::size_t)f, 0);
  for (long a = 0; a < f; ++a) {
    const long r1 = residue_at(a);
    const long r2 = o.residue_at(a);
    if (r1 != 0 && r2 != 0) res[(std::size_t)a] = (long)((__int128)r1 * r2 % p_);
  }
  return PadicCharacter(p_, f, std::move(res));
}

bool PadicCharacter::operator==(const PadicCharacter& o) const {
  return p_ == o.p_ && f_ == o.f_ && res_ == o.res_;
}

long PadicCharacter::conductor() const {
  for (long f = 1; f <= f_; ++f) {
    if (f_ % f != 0) continue;
    bool ok = true;
    for (long a = 0; a < f_ && ok; ++a) {
      if (res_[(std::size_t)a] == 0) continue;
      if (a % f == 1 % f && res_[(std::size_t)a] != 1) ok = false;
    }
    if (ok) return f;
  }
  return f_;
}

PadicCharacter PadicCharacter::primitive() const {
  const long fc = conductor();
  if (fc == f_) return *this;
  if (fc == 1) return trivial(p_);
  std::vector<long> res((std::size_t)fc, 0);
  for (long b = 0; b < fc; ++b) {
    if (std::gcd(b, fc) != 1) continue;
    long lift = b;
    while (residue_at(lift) == 0) lift += fc;
    res[(std::size_t)b] = residue_at(lift);
  }
  return PadicCharacter(p_, fc, std::move(res));
}

}  // namespace apeuler
