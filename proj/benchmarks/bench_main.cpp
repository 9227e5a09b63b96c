#include <benchmark/benchmark.h>

#include "apeuler/gen_euler.hpp"
#include "apeuler/integrals.hpp"
#include "apeuler/padic_l.hpp"
#include "apeuler/zeta.hpp"

using namespace apeuler;

namespace {

const DirichletCharacter& quad5() {
  static const DirichletCharacter chi = [] {
    for (const auto& c : characters_mod(5))
      if (c.order() == 2) return c;
    throw std::logic_error("unreachable");
  }();
  return chi;
}

void BM_EulerNumbers(benchmark::State& state) {
  const Rational lam(1, 2);
  const unsigned long n = (unsigned long)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(euler_numbers(lam, n));
}
BENCHMARK(BM_EulerNumbers)->Arg(8)->Arg(32);

void BM_SeriesOracle(benchmark::State& state) {
  const Rational lam(1, 2);
  const unsigned long n = (unsigned long)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(euler_numbers_series_oracle(lam, n));
}
BENCHMARK(BM_SeriesOracle)->Arg(8)->Arg(32);

void BM_TwistedNumbers(benchmark::State& state) {
  const Rational lam(2);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_euler_numbers(quad5(), lam, 8));
}
BENCHMARK(BM_TwistedNumbers);

void BM_SeriesValue(benchmark::State& state) {
  const auto cfg = default_eval_config(0.7);
  for (auto _ : state)
    benchmark::DoNotOptimize(zeta_lambda({-3.0, 0.0}, 1.0, 0.7, cfg));
}
BENCHMARK(BM_SeriesValue);

void BM_PadicLValue(benchmark::State& state) {
  const PadicContext ctx(5, 8);
  const auto s = PadicNumber::from_int(-2, ctx);
  for (auto _ : state)
    benchmark::DoNotOptimize(l_lambda_p(s, quad5(), Rational(2), 5, ctx));
}
BENCHMARK(BM_PadicLValue);

void BM_AlternatingSum(benchmark::State& state) {
  const PadicContext ctx(5, 8);
  const long N = state.range(0);
  const Integrand f = Integrand::product(
      {Integrand::lambda_pow(Rational(6)), Integrand::monomial(2)});
  for (auto _ : state) benchmark::DoNotOptimize(fermionic_sum(f, N, ctx));
}
BENCHMARK(BM_AlternatingSum)->Arg(3)->Arg(4);

void BM_QbinomMoment(benchmark::State& state) {
  const PadicContext ctx(5, 8);
  const Rational q(6);
  for (auto _ : state) benchmark::DoNotOptimize(qbinom_moment(2, q, ctx, 3));
}
BENCHMARK(BM_QbinomMoment);

}  // namespace

BENCHMARK_MAIN();
