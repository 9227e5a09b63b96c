#pragma once

#include <complex>

#include "apeuler/dirichlet.hpp"

namespace apeuler {

enum class Acceleration { direct, alternating_acceleration };

struct SeriesEvalConfig {
  long max_terms = 10000;
  Acceleration acceleration = Acceleration::direct;
  double target_tolerance = 1e-12;
};

// Nonconvergence is reported, not thrown: tolerance_met goes false and value
// carries the best partial estimate.
struct EvalResult {
  std::complex<double> value{0.0, 0.0};
  long terms_used = 0;
  bool tolerance_met = false;
};

// picks the acceleration mode the module defaults to for this lambda:
// averaging acceleration for slowly decaying alternating tails (lambda > 0.8),
// plain summation otherwise
SeriesEvalConfig default_eval_config(double lambda);

// zeta_lambda(s, x) = 2 sum_{n>=0} (-1)^n lambda^n (n+x)^{-s}, |lambda| < 1
EvalResult zeta_lambda(std::complex<double> s, double x, double lambda,
                       const SeriesEvalConfig& cfg);

// l_lambda(s, chi) = 2 sum_{n>=1} (-1)^n chi(n) lambda^n n^{-s}
EvalResult l_lambda(std::complex<double> s, const DirichletCharacter& chi, double lambda,
                    const SeriesEvalConfig& cfg);

// H_lambda(s, a | F) = (lambda^a (-1)^a / 2) F^{-s} zeta_{lambda^F}(s, a/F),
// for 0 < a < F, F odd
EvalResult partial_zeta(std::complex<double> s, long a, long F, double lambda,
                        const SeriesEvalConfig& cfg);

}  // namespace apeuler
