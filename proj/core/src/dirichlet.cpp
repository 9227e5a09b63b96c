#include "apeuler/dirichlet.hpp"

#include <numeric>
#include <stdexcept>

namespace apeuler {

namespace {

struct PrimePowerFactor {
  long p;
  long k;
  long pk;       // p^k
  long phi;      // p^{k-1}(p-1), order of the cyclic unit group
  std::vector<long> dlog;  // residue -> discrete log base the chosen root; -1 off units
};

long pow_mod(long base, long exp, long mod) {
  long r = 1 % mod;
  base %= mod;
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

long primitive_root_mod_p(long p) {
  if (p == 3) return 2;
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

PrimePowerFactor make_factor(long p, long k) {
  PrimePowerFactor f;
  f.p = p;
  f.k = k;
  f.pk = 1;
  for (long i = 0; i < k; ++i) f.pk *= p;
  f.phi = (f.pk / p) * (p - 1);
  long g = primitive_root_mod_p(p);
  if (k >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
  f.dlog.assign(f.pk, -1);
  long cur = 1 % f.pk;
  for (long j = 0; j < f.phi; ++j) {
    f.dlog[cur] = j;
    cur = (long)((__int128)cur * g % f.pk);
  }
  return f;
}

std::vector<PrimePowerFactor> factor_odd_modulus(long d) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("character modulus must be an odd positive integer");
  std::vector<PrimePowerFactor> fs;
  long n = d;
  for (long p = 3; p * p <= n; p += 2) {
    if (n % p == 0) {
      long k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      fs.push_back(make_factor(p, k));
    }
  }
  if (n > 1) fs.push_back(make_factor(n, 1));
  return fs;
}

long group_exponent(const std::vector<PrimePowerFactor>& fs) {
  long e = 1;
  for (const auto& f : fs) e = std::lcm(e, f.phi);
  return e;
}

}  // namespace

void DirichletCharacter::recompute_order() {
  long t = 1;
  for (long a = 0; a < d_; ++a) {
    const long k = exps_[a];
    if (k > 0) t = std::lcm(t, e_ / std::gcd(e_, k));
  }
  order_ = t;
}

std::vector<DirichletCharacter> characters_mod(long d) {
  const auto fs = factor_odd_modulus(d);
  const long e = group_exponent(fs);
  long num_chars = 1;
  for (const auto& f : fs) num_chars *= f.phi;

  std::vector<DirichletCharacter> out;
  out.reserve(num_chars);
  for (long idx = 0; idx < num_chars; ++idx) {
    // mixed-radix digits of idx pick one power of each factor's dual generator
    std::vector<long> c(fs.size());
    long rest = idx;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      c[i] = rest % fs[i].phi;
      rest /= fs[i].phi;
    }
    DirichletCharacter chi;
    chi.d_ = d;
    chi.e_ = e;
    chi.exps_.assign(d, -1);
    for (long a = 0; a < d; ++a) {
      long k = 0;
      bool unit = true;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const long dl = fs[i].dlog[a % fs[i].pk];
        if (dl < 0) {
          unit = false;
          break;
        }
        const long local = (long)((__int128)c[i] * dl % fs[i].phi);
        k = (k + local * (e / fs[i].phi)) % e;
      }
      if (unit) chi.exps_[a] = k;
    }
    if (d == 1) chi.exps_[0] = 0;
    chi.recompute_order();
    out.push_back(std::move(chi));
  }
  return out;
}

Cyclotomic DirichletCharacter::value(long a) const {
  long r = a % d_;
  if (r < 0) r += d_;
  const long k = exps_[r];
  if (k < 0) return Cyclotomic(e_);
  return Cyclotomic::zeta_power(e_, k);
}

Cyclotomic DirichletCharacter::value(const Int& a) const {
  const unsigned long r = mpz_fdiv_ui(a.get_mpz_t(), (unsigned long)d_);
  return value((long)r);
}

bool DirichletCharacter::is_unit(long a) const {
  long r = a % d_;
  if (r < 0) r += d_;
  return exps_[r] >= 0;
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
  if (d_ != o.d_)
    throw std::invalid_argument("character product needs matching moduli");
  DirichletCharacter out;
  out.d_ = d_;
  out.e_ = e_;
  out.exps_.assign(d_, -1);
  for (long a = 0; a < d_; ++a)
    if (exps_[a] >= 0 && o.exps_[a] >= 0) out.exps_[a] = (exps_[a] + o.exps_[a]) % e_;
  if (d_ == 1) out.exps_[0] = 0;
  out.recompute_order();
  return out;
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
  return d_ == o.d_ && exps_ == o.exps_;
}

long DirichletCharacter::conductor() const {
  for (long f = 1; f <= d_; ++f) {
    if (d_ % f != 0) continue;
    bool factors_through = true;
    for (long a = 1; a < d_ && factors_through; ++a) {
      if (exps_[a] < 0) continue;
      if (a % f == 1 % f && exps_[a] != 0) factors_through = false;
    }
    if (factors_through) return f;
  }
  return d_;
}

long conductor_of(const DirichletCharacter& chi) { return chi.conductor(); }

DirichletCharacter DirichletCharacter::primitive() const {
  const long f = conductor();
  if (f == d_) return *this;
  // chi factors through (Z/f)*; read its values along lifts coprime to d
  auto candidates = characters_mod(f);
  for (const auto& psi : candidates) {
    bool match = true;
    for (long a = 0; a < f && match; ++a) {
      if (std::gcd(a, f) != 1 && f > 1) continue;
      long lift = a;
      while (std::gcd(lift, d_) != 1) lift += f;
      // compare psi(a) and chi(lift) as roots of unity; e_f divides e_d
      const long kf = psi.exps_[a % f];
      const long kd = exps_[lift % d_];
      if (kf < 0 || kd < 0) {
        match = false;
        break;
      }
      if ((long)((__int128)kf * (e_ / psi.e_) % e_) != kd % e_) match = false;
    }
    if (match) return psi;
  }
  throw std::logic_error("no primitive character induces this one");
}

int DirichletCharacter::parity() const {
  if (d_ == 1) return 1;
  const long k = exps_[d_ - 1];
  if (k == 0) return 1;
  if (e_ % 2 == 0 && k == e_ / 2) return -1;
  throw std::logic_error("character value at -1 is not a sign");
}

DirichletCharacter character_from_exponents(long d, std::vector<long> exps) {
  const auto fs = factor_odd_modulus(d);
  if ((long)exps.size() != d)
    throw std::invalid_argument("exponent table length must equal the modulus");
  DirichletCharacter chi;
  chi.d_ = d;
  chi.e_ = group_exponent(fs);
  chi.exps_ = std::move(exps);
  for (long a = 0; a < d; ++a) {
    const long k = chi.exps_[a];
    if (k >= chi.e_ || (k < 0 && k != -1))
      throw std::invalid_argument("exponent out of range for the value field");
  }
  chi.recompute_order();
  return chi;
}

}  // namespace apeuler
