#pragma once

#include <stdexcept>
#include <vector>

#include "apeuler/rational.hpp"

namespace apeuler {

// Truncated formal power series c_0 + c_1 t + ... + c_T t^T over a coefficient
// field F. F must supply, via ADL: zero_like, one_like, from_int_like,
// is_zero_el, inverse_el. All arithmetic demands equal truncation orders; the
// order is always chosen by the caller.
template <class F>
struct TruncatedSeries {
  std::vector<F> c;

  explicit TruncatedSeries(std::vector<F> coeffs) : c(std::move(coeffs)) {
    if (c.empty()) throw std::invalid_argument("series needs at least the constant term");
  }

  std::size_t order() const { return c.size() - 1; }

  static TruncatedSeries constant(const F& value, std::size_t T) {
    std::vector<F> v(T + 1, zero_like(value));
    v[0] = value;
    return TruncatedSeries(std::move(v));
  }
};

template <class F>
void check_same_order(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series order mismatch");
}

template <class F>
TruncatedSeries<F> series_add(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  check_same_order(a, b);
  std::vector<F> out;
  out.reserve(a.c.size());
  for (std::size_t k = 0; k < a.c.size(); ++k) out.push_back(a.c[k] + b.c[k]);
  return TruncatedSeries<F>(std::move(out));
}

template <class F>
TruncatedSeries<F> series_sub(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  check_same_order(a, b);
  std::vector<F> out;
  out.reserve(a.c.size());
  for (std::size_t k = 0; k < a.c.size(); ++k) out.push_back(a.c[k] - b.c[k]);
  return TruncatedSeries<F>(std::move(out));
}

template <class F>
TruncatedSeries<F> series_scale(const F& s, const TruncatedSeries<F>& a) {
  std::vector<F> out;
  out.reserve(a.c.size());
  for (const auto& ck : a.c) out.push_back(s * ck);
  return TruncatedSeries<F>(std::move(out));
}

// Cauchy product truncated at the shared order.
template <class F>
TruncatedSeries<F> series_mul(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  check_same_order(a, b);
  const std::size_t T = a.order();
  std::vector<F> out(T + 1, zero_like(a.c[0]));
  for (std::size_t i = 0; i <= T; ++i) {
    if (is_zero_el(a.c[i])) continue;
    for (std::size_t j = 0; i + j <= T; ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
  }
  return TruncatedSeries<F>(std::move(out));
}

// Multiplicative inverse: b with a*b = 1 + O(t^{T+1}). Needs c_0 invertible.
template <class F>
TruncatedSeries<F> series_inverse(const TruncatedSeries<F>& a) {
  if (is_zero_el(a.c[0])) throw std::domain_error("non-invertible series");
  const std::size_t T = a.order();
  const F c0inv = inverse_el(a.c[0]);
  std::vector<F> out(T + 1, zero_like(a.c[0]));
  out[0] = c0inv;
  for (std::size_t n = 1; n <= T; ++n) {
    F acc = zero_like(a.c[0]);
    for (std::size_t k = 1; k <= n; ++k) acc = acc + a.c[k] * out[n - k];
    out[n] = zero_like(a.c[0]) - c0inv * acc;
  }
  return TruncatedSeries<F>(std::move(out));
}

template <class F>
TruncatedSeries<F> series_div(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  return series_mul(a, series_inverse(b));
}

// e^{ct}: coefficient of t^k is c^k/k!.
template <class F>
TruncatedSeries<F> exp_series(const F& cval, std::size_t T) {
  std::vector<F> out;
  out.reserve(T + 1);
  F term = one_like(cval);
  out.push_back(term);
  for (std::size_t k = 1; k <= T; ++k) {
    term = term * cval * inverse_el(from_int_like(cval, Int((long)k)));
    out.push_back(term);
  }
  return TruncatedSeries<F>(std::move(out));
}

}  // namespace apeuler
