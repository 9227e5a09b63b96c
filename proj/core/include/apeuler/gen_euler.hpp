#pragma once

#include <vector>

#include "apeuler/apostol.hpp"
#include "apeuler/dirichlet.hpp"

namespace apeuler {

// Character-twisted lambda-Euler numbers E_{0,chi}(lambda)..E_{n,chi}(lambda)
// over Q(zeta_e), e = chi's value field. Two independent routes that must
// agree exactly; lambda is rational and gets embedded as a scalar.

// finite-sum route:
//   E_{n,chi}(lambda) = d^n sum_{a=0}^{d-1} (-1)^a lambda^a chi(a) E_n(lambda^d : a/d)
std::vector<Cyclotomic> generalized_euler_numbers(const DirichletCharacter& chi,
                                                  const Rational& lambda, unsigned long n);

// series route: n-th coefficient (times n!) of
//   2 sum_{a=0}^{d-1} (-1)^a chi(a) lambda^a e^{at} / (lambda^d e^{dt} + 1)
std::vector<Cyclotomic> generalized_oracle(const DirichletCharacter& chi,
                                           const Rational& lambda, unsigned long n);

}  // namespace apeuler
