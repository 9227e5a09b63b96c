#pragma once

#include "apeuler/padic.hpp"

namespace apeuler {

// Maclaurin series on their p-adic convergence domains (p odd throughout).
// exp/sin/cos/tan need v_p(a) >= 1, which keeps the k-th term valuation
// k*v_p(a) - v_p(k!) strictly increasing; log needs a = 1 mod p. Series are
// truncated as soon as every remaining term is certified to vanish modulo
// p^M, and the result is cut to absolute precision M.
PadicNumber padic_exp(const PadicNumber& a, const PadicContext& ctx);
PadicNumber padic_log(const PadicNumber& a, const PadicContext& ctx);
PadicNumber padic_sin(const PadicNumber& a, const PadicContext& ctx);
PadicNumber padic_cos(const PadicNumber& a, const PadicContext& ctx);
PadicNumber padic_tan(const PadicNumber& a, const PadicContext& ctx);

enum class ElementaryKind { exp, log, sin, cos, tan };

PadicNumber padic_elementary(ElementaryKind kind, const PadicNumber& a,
                             const PadicContext& ctx);

}  // namespace apeuler
