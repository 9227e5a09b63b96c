#include "apeuler/zeta.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace apeuler {

namespace {

using cplx = std::complex<double>;
// Accumulation runs in extended precision: at s = -k the alternating terms
// peak many orders above the limit, and plain double accumulation leaves
// cancellation noise near 1e-9, too coarse for the special-value checks.
using lcplx = std::complex<long double>;

void validate(double lambda, const SeriesEvalConfig& cfg) {
  if (!(std::abs(lambda) < 1.0))
    throw std::domain_error("lambda must satisfy |lambda| < 1");
  if (cfg.max_terms < 8) throw std::invalid_argument("max_terms must be at least 8");
  if (!(cfg.target_tolerance > 0.0))
    throw std::invalid_argument("target_tolerance must be positive");
}

cplx narrow(const lcplx& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// term generator abstraction: term(n) for n = n0, n0+1, ...; env(n) is a
// positive envelope with |term(n)| <= env(n) whose successive ratio tends
// monotonically toward |lambda| (so character zeros inside term cannot fool
// the stopping rule). Once env(n+1)/env(n) <= rbound the geometric bound
// env(n+1)/(1 - rbound) covers the whole remaining tail.
template <class TermFn, class EnvFn>
EvalResult sum_direct(TermFn term, EnvFn env, long n0, double lambda,
                      const SeriesEvalConfig& cfg) {
  const double rbound = (1.0 + std::abs(lambda)) / 2.0;
  EvalResult res;
  lcplx sum(0.0L, 0.0L);
  for (long n = n0; n < n0 + cfg.max_terms; ++n) {
    sum += term(n);
    res.terms_used = n - n0 + 1;
    const double e_cur = env(n);
    const double e_next = env(n + 1);
    if (e_cur == 0.0 || (e_next <= rbound * e_cur && e_next / (1.0 - rbound) < cfg.target_tolerance)) {
      res.tolerance_met = true;
      break;
    }
  }
  res.value = narrow(sum);
  return res;
}

// Repeated adjacent averaging of partial sums (the classical transformation
// for alternating series). Converges even for lambda near 1.
template <class TermFn>
EvalResult sum_accelerated(TermFn term, long n0, const SeriesEvalConfig& cfg) {
  EvalResult res;
  long m = 32;
  lcplx prev_estimate(0.0L, 0.0L);
  bool have_prev = false;
  while (true) {
    if (m > cfg.max_terms) m = cfg.max_terms;
    std::vector<lcplx> S((std::size_t)m);
    lcplx acc(0.0L, 0.0L);
    for (long n = 0; n < m; ++n) {
      acc += term(n0 + n);
      S[(std::size_t)n] = acc;
    }
    res.terms_used = m;
    lcplx diag = S[0];
    for (std::size_t stage = 1; stage < S.size(); ++stage) {
      for (std::size_t i = 0; i + stage < S.size(); ++i)
        S[i] = 0.5L * (S[i] + S[i + 1]);
      const lcplx next_diag = S[0];
      if (std::abs(next_diag - diag) < 0.5L * cfg.target_tolerance) {
        res.value = narrow(next_diag);
        res.tolerance_met = true;
        return res;
      }
      diag = next_diag;
    }
    if (have_prev && std::abs(diag - prev_estimate) < cfg.target_tolerance) {
      res.value = narrow(diag);
      res.tolerance_met = true;
      return res;
    }
    prev_estimate = diag;
    have_prev = true;
    if (m == cfg.max_terms) {
      res.value = narrow(diag);
      res.tolerance_met = false;
      return res;
    }
    m *= 2;
  }
}

lcplx power_term(long double base, const lcplx& s) {
  // base^{-s} = exp(-s ln base), base > 0
  return std::exp(-s * std::log(base));
}

}  // namespace

SeriesEvalConfig default_eval_config(double lambda) {
  SeriesEvalConfig cfg;
  cfg.acceleration =
      lambda > 0.8 ? Acceleration::alternating_acceleration : Acceleration::direct;
  return cfg;
}

EvalResult zeta_lambda(cplx s, double x, double lambda, const SeriesEvalConfig& cfg) {
  validate(lambda, cfg);
  if (!(x > 0.0)) throw std::domain_error("x must be positive");
  const lcplx ls(s.real(), s.imag());
  const long double lx = x;
  const long double llam = lambda;
  auto term = [&](long n) -> lcplx {
    const long double sign_lam = (n % 2 == 0) ? 1.0L : -1.0L;
    return 2.0L * sign_lam * std::pow(llam, (long double)n) *
           power_term((long double)n + lx, ls);
  };
  auto env = [&](long n) -> double {
    return 2.0 * std::pow(std::abs(lambda), (double)n) * std::pow((double)n + x, -s.real());
  };
  if (cfg.acceleration == Acceleration::alternating_acceleration)
    return sum_accelerated(term, 0, cfg);
  return sum_direct(term, env, 0, lambda, cfg);
}

EvalResult l_lambda(cplx s, const DirichletCharacter& chi, double lambda,
                    const SeriesEvalConfig& cfg) {
  validate(lambda, cfg);
  if (chi.modulus() % 2 == 0)
    throw std::domain_error("character modulus must be odd");
  const long d = chi.modulus();
  const lcplx ls(s.real(), s.imag());
  const long double llam = lambda;
  std::vector<lcplx> chivals((std::size_t)d);
  for (long a = 0; a < d; ++a) {
    const cplx cv = chi.value(a).to_complex();
    chivals[(std::size_t)a] = lcplx(cv.real(), cv.imag());
  }
  auto term = [&](long n) -> lcplx {
    const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
    const lcplx cv = chivals[(std::size_t)(n % d)];
    if (cv == lcplx(0.0L, 0.0L)) return lcplx(0.0L, 0.0L);
    return 2.0L * sign * cv * std::pow(llam, (long double)n) *
           power_term((long double)n, ls);
  };
  auto env = [&](long n) -> double {
    return 2.0 * std::pow(std::abs(lambda), (double)n) * std::pow((double)n, -s.real());
  };
  if (cfg.acceleration == Acceleration::alternating_acceleration)
    return sum_accelerated(term, 1, cfg);
  return sum_direct(term, env, 1, lambda, cfg);
}

EvalResult partial_zeta(cplx s, long a, long F, double lambda, const SeriesEvalConfig& cfg) {
  if (F % 2 == 0 || F < 1) throw std::domain_error("F must be odd and positive");
  if (!(a > 0 && a < F)) throw std::domain_error("a must satisfy 0 < a < F");
  validate(lambda, cfg);
  const double lamF = std::pow(lambda, (double)F);
  EvalResult inner = zeta_lambda(s, (double)a / (double)F, lamF, cfg);
  const long double sign = (a % 2 == 0) ? 1.0L : -1.0L;
  const long double front = sign * std::pow((long double)lambda, (long double)a) / 2.0L;
  const lcplx scaled = front * power_term((long double)F, lcplx(s.real(), s.imag())) *
                       lcplx(inner.value.real(), inner.value.imag());
  inner.value = narrow(scaled);
  return inner;
}

}  // namespace apeuler
