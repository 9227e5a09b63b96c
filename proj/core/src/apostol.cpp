#include "apeuler/apostol.hpp"

namespace apeuler {

std::vector<Rational> bernoulli_numbers(unsigned long n) {
  // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1, solved for B_m.
  std::vector<Rational> B;
  B.reserve(n + 1);
  B.push_back(Rational(1));
  for (unsigned long m = 1; m <= n; ++m) {
    Rational acc(0);
    for (unsigned long k = 0; k < m; ++k) acc += Rational(binomial_int(m + 1, k)) * B[k];
    B.push_back(-acc / Rational(binomial_int(m + 1, m)));
  }
  return B;
}

}  // namespace apeuler
