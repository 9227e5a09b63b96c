#pragma once

#include <complex>
#include <string>
#include <vector>

#include "apeuler/rational.hpp"

namespace apeuler {

long euler_phi(long m);
int mobius(long m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic,
// integral. Cached process-wide behind a mutex.
const std::vector<Int>& cyclotomic_polynomial(long m);

// An element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}
// modulo the m-th cyclotomic polynomial. Immutable after construction.
class Cyclotomic {
 public:
  // zero of Q(zeta_m)
  explicit Cyclotomic(long m);
  // scalar embedding of a rational
  Cyclotomic(long m, const Rational& scalar);
  // from power-basis coordinates (reduced if over-long)
  Cyclotomic(long m, std::vector<Rational> coords);

  static Cyclotomic zeta_power(long m, long k);

  long conductor() const { return m_; }
  long degree() const { return (long)coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  // the scalar value when is_rational(); throws otherwise
  Rational rational_value() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  bool operator==(const Cyclotomic& o) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  // standard embedding zeta_m -> exp(2 pi i/m)
  std::complex<double> to_complex() const;

  std::string to_string() const;

 private:
  long m_;
  std::vector<Rational> coords_;  // length phi(m)

  void require_same_field(const Cyclotomic& o) const;
};

// ---- field-trait hooks for TruncatedSeries<Cyclotomic> ----
inline Cyclotomic zero_like(const Cyclotomic& c) { return Cyclotomic(c.conductor()); }
inline Cyclotomic one_like(const Cyclotomic& c) {
  return Cyclotomic(c.conductor(), Rational(1));
}
inline Cyclotomic from_int_like(const Cyclotomic& c, const Int& n) {
  return Cyclotomic(c.conductor(), Rational(n));
}
inline bool is_zero_el(const Cyclotomic& c) { return c.is_zero(); }
inline Cyclotomic inverse_el(const Cyclotomic& c) { return c.inverse(); }

}  // namespace apeuler
