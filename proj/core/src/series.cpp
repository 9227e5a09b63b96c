#include "apeuler/series.hpp"

// Series arithmetic is header-only (templates); this translation unit pins an
// instantiation over Rational so ABI problems surface at library build time.
namespace apeuler {
template struct TruncatedSeries<Rational>;
template TruncatedSeries<Rational> series_mul(const TruncatedSeries<Rational>&,
                                              const TruncatedSeries<Rational>&);
template TruncatedSeries<Rational> series_inverse(const TruncatedSeries<Rational>&);
template TruncatedSeries<Rational> exp_series(const Rational&, std::size_t);
}  // namespace apeuler
