#pragma once

#include <climits>
#include <string>

#include "json.hpp"

#include "apeuler/cyclotomic.hpp"
#include "apeuler/dirichlet.hpp"
#include "apeuler/integrals.hpp"
#include "apeuler/padic.hpp"
#include "apeuler/padic_l.hpp"
#include "apeuler/rational.hpp"
#include "apeuler/verify.hpp"
#include "apeuler/zeta.hpp"

namespace apeuler {

// ordered_json keeps insertion order, so serialization is byte-stable
using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return rational_to_human(r); }

// Exact zero: valuation null, no digits. Inexact zero: valuation carries the
// divisibility bound p^k, still no digits.
inline Json to_json(const PadicNumber& x) {
  Json j;
  j["p"] = x.prime();
  if (x.is_exact_zero()) {
    j["valuation"] = nullptr;
    j["digits"] = Json::array();
    j["precision"] = 0;
  } else if (x.is_inexact_zero()) {
    j["valuation"] = x.abs_precision();
    j["digits"] = Json::array();
    j["precision"] = 0;
  } else {
    j["valuation"] = x.valuation();
    j["digits"] = x.digit_list();
    j["precision"] = x.rel_precision();
  }
  j["text"] = x.to_string();
  return j;
}

inline Json to_json(const EvalResult& r) {
  Json j;
  j["re"] = r.value.real();
  j["im"] = r.value.imag();
  j["terms_used"] = r.terms_used;
  j["tolerance_met"] = r.tolerance_met;
  return j;
}

inline Json to_json(const Cyclotomic& z) {
  Json j;
  j["conductor"] = z.conductor();
  Json coords = Json::array();
  for (const auto& c : z.coords()) coords.push_back(rational_to_human(c));
  j["coords"] = coords;
  return j;
}

inline Json to_json(const DirichletCharacter& chi) {
  Json j;
  j["modulus"] = chi.modulus();
  j["order"] = chi.order();
  j["conductor"] = chi.conductor();
  j["parity"] = chi.parity();
  Json exps = Json::array();
  for (long a = 0; a < chi.modulus(); ++a) exps.push_back(chi.exponent_at(a));
  j["exponents"] = exps;
  return j;
}

inline Json agreement_json(long agreement) {
  if (agreement == LONG_MAX) return "exact";
  return agreement;
}

inline Json to_json(const IdentityCheck& c, long N, long p, long M) {
  Json j;
  j["id"] = c.id;
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  j["agreement_precision"] = agreement_json(c.agreement);
  j["N"] = N;
  j["p"] = p;
  j["M"] = M;
  return j;
}

inline Json to_json(const TrigIntegralReport& r) {
  Json j;
  j["p"] = r.p;
  j["M"] = r.M;
  j["N"] = r.N;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c, r.N, r.p, r.M));
  j["checks"] = checks;
  return j;
}

inline Json to_json(const WittReport& r) {
  Json j;
  j["lhs"] = to_json(r.partial);
  j["rhs"] = to_json(r.limit);
  j["agreement_precision"] = agreement_json(r.agreement);
  j["N"] = r.N;
  j["p"] = r.p;
  j["M"] = r.M;
  j["domain_extension"] = r.d;
  return j;
}

inline Json to_json(const QbinomMomentReport& r) {
  Json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["M"] = r.M;
  j["N"] = r.N_used;
  j["q"] = rational_to_human(r.q);
  j["empirical"] = to_json(r.empirical);
  j["stability_digits"] = agreement_json(r.stability_digits);
  j["printed_exponent"] = r.printed_exponent;
  j["printed"] = to_json(r.printed);
  j["printed_agreement"] = agreement_json(r.printed_agreement);
  j["printed_agrees"] = r.printed_agrees;
  j["fitted_found"] = r.fitted_found;
  j["fitted_exponent"] = r.fitted_exponent;
  j["fitted"] = to_json(r.fitted);
  j["fitted_agreement"] = agreement_json(r.fitted_agreement);
  return j;
}

inline Json to_json(const C1NormReport& r) {
  Json j;
  j["p"] = r.p;
  j["M"] = r.M;
  j["N"] = r.N;
  j["integral"] = to_json(r.integral);
  j["norm_bound_valuation"] = r.norm_bound_valuation;
  j["grid_points"] = r.grid_points;
  j["inequality_holds"] = r.inequality_holds;
  return j;
}

inline Json to_json(const HarmonicSumReport& r, long p, long M) {
  Json j;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["rhs_printed"] = to_json(r.rhs_printed);
  j["agreement_precision"] = agreement_json(r.agreement_precision);
  j["agreement_precision_printed"] = agreement_json(r.agreement_precision_printed);
  j["k_max"] = r.k_max;
  j["p"] = p;
  j["M"] = M;
  return j;
}

inline Json to_json(const VerifyCase& c) {
  Json j;
  j["id"] = c.id;
  j["status"] = c.status;
  j["detail"] = c.detail;
  return j;
}

inline Json to_json(const VerifySuiteResult& r) {
  Json j;
  j["suite"] = r.suite;
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  j["cases"] = cases;
  j["exit_code"] = r.exit_code;
  return j;
}

}  // namespace apeuler
