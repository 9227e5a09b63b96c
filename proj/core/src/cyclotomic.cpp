#include "apeuler/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace apeuler {

long euler_phi(long m) {
  if (m <= 0) throw std::invalid_argument("euler_phi of nonpositive m");
  long result = m;
  long n = m;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      result -= result / q;
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(long m) {
  if (m <= 0) throw std::invalid_argument("mobius of nonpositive m");
  int sign = 1;
  for (long q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      m /= q;
      if (m % q == 0) return 0;
      sign = -sign;
    }
  }
  if (m > 1) sign = -sign;
  return sign;
}

namespace {

// (x^d - 1) as an integer polynomial
std::vector<Int> x_pow_minus_one(long d) {
  std::vector<Int> p(d + 1, Int(0));
  p[0] = -1;
  p[d] = 1;
  return p;
}

// exact division of integer polynomials; remainder must be zero
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  const long dn = (long)num.size() - 1;
  const long dd = (long)den.size() - 1;
  if (dn < dd) throw std::logic_error("cyclotomic division underflow");
  std::vector<Int> q(dn - dd + 1, Int(0));
  for (long k = dn - dd; k >= 0; --k) {
    // den is monic in every use here
    Int coef = num[k + dd];
    q[k] = coef;
    if (coef == 0) continue;
    for (long i = 0; i <= dd; ++i) num[k + i] -= coef * den[i];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

std::vector<Int> compute_cyclotomic(long m,
                                    const std::function<const std::vector<Int>&(long)>& get) {
  if (m == 1) return {Int(-1), Int(1)};  // x - 1
  auto num = x_pow_minus_one(m);
  for (long d = 1; d < m; ++d) {
    if (m % d == 0) num = poly_divide_exact(std::move(num), get(d));
  }
  return num;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) {
  static std::mutex mu;
  static std::map<long, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::function<const std::vector<Int>&(long)> get = [&](long k) -> const std::vector<Int>& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    auto poly = compute_cyclotomic(k, get);
    return cache.emplace(k, std::move(poly)).first->second;
  };
  return get(m);
}

Cyclotomic::Cyclotomic(long m) : m_(m), coords_(euler_phi(m), Rational(0)) {
  if (m < 1) throw std::invalid_argument("cyclotomic conductor must be >= 1");
}

Cyclotomic::Cyclotomic(long m, const Rational& scalar) : Cyclotomic(m) { coords_[0] = scalar; }

Cyclotomic::Cyclotomic(long m, std::vector<Rational> coords) : m_(m) {
  if (m < 1) throw std::invalid_argument("cyclotomic conductor must be >= 1");
  const long deg = euler_phi(m);
  // reduce mod Phi_m (monic): replace x^deg by the tail
  const auto& phi = cyclotomic_polynomial(m);
  while ((long)coords.size() > deg) {
    Rational top = coords.back();
    coords.pop_back();
    if (top == 0) continue;
    const std::size_t base = coords.size() - deg;
    for (long i = 0; i < deg; ++i) coords[base + i] -= top * Rational(phi[i]);
  }
  coords.resize(deg, Rational(0));
  coords_ = std::move(coords);
}

Cyclotomic Cyclotomic::zeta_power(long m, long k) {
  k %= m;
  if (k < 0) k += m;
  std::vector<Rational> coords(k + 1, Rational(0));
  coords[k] = 1;
  return Cyclotomic(m, std::move(coords));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return coords_[0];
}

void Cyclotomic::require_same_field(const Cyclotomic& o) const {
  if (m_ != o.m_) throw std::invalid_argument("cyclotomic conductor mismatch");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  require_same_field(o);
  auto out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coords_[i];
  Cyclotomic r(m_);
  r.coords_ = std::move(out);
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  require_same_field(o);
  auto out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.coords_[i];
  Cyclotomic r(m_);
  r.coords_ = std::move(out);
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(m_);
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = -coords_[i];
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  require_same_field(o);
  std::vector<Rational> prod(coords_.size() + o.coords_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coords_.size(); ++j)
      prod[i + j] += coords_[i] * o.coords_[j];
  }
  return Cyclotomic(m_, std::move(prod));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return m_ == o.m_ && coords_ == o.coords_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero cyclotomic");
  if (is_rational()) return Cyclotomic(m_, Rational(1) / coords_[0]);
  // extended Euclid in Q[x]: u*self + v*Phi_m = gcd = nonzero constant,
  // since Phi_m is irreducible over Q.
  const auto& phi_int = cyclotomic_polynomial(m_);
  std::vector<Rational> r0(phi_int.begin(), phi_int.end());
  std::vector<Rational> r1 = coords_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rational> s0 = {Rational(0)};  // coefficient of self in r0
  std::vector<Rational> s1 = {Rational(1)};  // coefficient of self in r1
  auto poly_sub_mul = [](const std::vector<Rational>& a, const std::vector<Rational>& q,
                         const std::vector<Rational>& b) {
    // a - q*b
    std::vector<Rational> out(std::max(a.size(), q.size() + b.size() ? q.size() + b.size() - 1 : 0),
                              Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  while (true) {
    // divide r0 by r1: r0 = q*r1 + r2
    std::vector<Rational> q(std::max<std::size_t>(1, r0.size() >= r1.size()
                                                         ? r0.size() - r1.size() + 1
                                                         : 1),
                            Rational(0));
    auto rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational coef = rem.back() / r1.back();
      const std::size_t shift = rem.size() - r1.size();
      q[shift] += coef;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= coef * r1[i];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    auto s2 = poly_sub_mul(s0, q, s1);
    if (rem.empty()) {
      // r1 is the gcd; it must be a nonzero constant
      if (r1.size() != 1)
        throw std::logic_error("cyclotomic inverse: nonconstant gcd (reducible modulus?)");
      Rational g = r1[0];
      std::vector<Rational> inv_coords;
      inv_coords.reserve(s1.size());
      for (const auto& c : s1) inv_coords.push_back(c / g);
      return Cyclotomic(m_, std::move(inv_coords));
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic acc(m_, Rational(1));
  Cyclotomic base = *this;
  unsigned long k = (unsigned long)e;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * (double)k / (double)m_;
    acc += coords_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << rational_to_string(coords_[i]);
  }
  os << "] (zeta_" << m_ << ")";
  return os.str();
}

}  // namespace apeuler
