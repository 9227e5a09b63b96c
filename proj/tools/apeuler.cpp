// apeuler: tables, special-value evaluation, p-adic integrals, and named
// verification suites. Exit codes: 0 success, 1 computation did not meet its
// target (tolerance or suite failure), 2 usage or domain error.

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apeuler/apostol.hpp"
#include "apeuler/gen_euler.hpp"
#include "apeuler/integrals.hpp"
#include "apeuler/integrand.hpp"
#include "apeuler/json_io.hpp"
#include "apeuler/padic_l.hpp"
#include "apeuler/verify.hpp"
#include "apeuler/zeta.hpp"

namespace {

using namespace apeuler;

long env_default_M() {
  const char* s = std::getenv("APEULER_DEFAULT_M");
  if (s == nullptr || *s == '\0') return 8;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1) return 8;
  return v;
}

// "RE" or "RE,IM"
std::complex<double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

// "d:index", an index into the deterministic characters_mod(d) ordering
DirichletCharacter parse_char(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("character spec must be d:index, e.g. 5:1");
  const long d = std::stol(text.substr(0, colon));
  const unsigned long idx = std::stoul(text.substr(colon + 1));
  const auto chars = characters_mod(d);
  if (idx >= chars.size())
    throw std::invalid_argument("character index out of range for modulus " +
                                std::to_string(d));
  return chars[idx];
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int emit_table(const std::vector<Rational>& vals, const Json& meta, bool as_json,
               bool as_csv) {
  if (as_csv) {
    std::cout << "index,value\n";
    for (std::size_t k = 0; k < vals.size(); ++k)
      std::cout << k << "," << rational_to_human(vals[k]) << "\n";
  } else if (as_json) {
    Json out = meta;
    Json arr = Json::array();
    for (const auto& v : vals) arr.push_back(to_json(v));
    out["values"] = arr;
    emit(out);
  } else {
    std::string line;
    for (std::size_t k = 0; k < vals.size(); ++k) {
      if (k > 0) line += ", ";
      line += rational_to_human(vals[k]);
    }
    std::cout << line << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apostol-Euler laboratory: exact number tables, zeta-type values, "
               "p-adic integrals and L-values, and verification suites"};
  app.require_subcommand(1);
  app.footer(
      "Structured output is JSON (rationals as exact strings, p-adic values as\n"
      "{p, valuation, digits, precision, text}); --csv is limited to flat tables.\n"
      "APEULER_DEFAULT_M sets the default p-adic precision. Schemas and the\n"
      "integrand grammar are documented in docs/formats.md.");

  auto* euler = app.add_subcommand(
      "euler", "lambda-Euler numbers E_0..E_n, or polynomial values at --x");
  std::string e_lambda, e_x;
  long e_n = 0;
  bool e_json = false, e_csv = false;
  euler->add_option("--lambda", e_lambda, "rational parameter, e.g. 1, 2, -1/3")
      ->required();
  euler->add_option("--n", e_n, "top index")->required()->check(CLI::NonNegativeNumber);
  auto* e_xopt =
      euler->add_option("--x", e_x, "evaluate E_k(lambda : x) instead of E_k(lambda)");
  auto* e_jf = euler->add_flag("--json", e_json, "JSON object output");
  auto* e_cf = euler->add_flag("--csv", e_csv, "index,value rows");
  e_jf->excludes(e_cf);

  auto* bern = app.add_subcommand(
      "bernoulli", "Bernoulli numbers B_0..B_n; classical at lambda = 1, twisted otherwise");
  std::string b_lambda = "1";
  long b_n = 0;
  bool b_json = false, b_csv = false;
  bern->add_option("--lambda", b_lambda, "rational weight")->capture_default_str();
  bern->add_option("--n", b_n, "top index")->required()->check(CLI::NonNegativeNumber);
  auto* b_jf = bern->add_flag("--json", b_json, "JSON object output");
  auto* b_cf = bern->add_flag("--csv", b_csv, "index,value rows");
  b_jf->excludes(b_cf);

  auto* ce = app.add_subcommand(
      "char-euler", "character-twisted Euler numbers over the character's value field");
  std::string ce_chi, ce_lambda = "1";
  long ce_n = 0;
  ce->add_option("--chi", ce_chi, "character as d:index")->required();
  ce->add_option("--lambda", ce_lambda, "rational weight")->capture_default_str();
  ce->add_option("--n", ce_n, "top index")->required()->check(CLI::NonNegativeNumber);

  auto* ze = app.add_subcommand(
      "zeta", "alternating Hurwitz-type value 2 sum_n (-1)^n lambda^n (n+x)^-s");
  std::string z_s;
  double z_x = 1.0, z_lambda = 0.0;
  ze->add_option("--s", z_s, "complex argument as RE or RE,IM")->required();
  ze->add_option("--x", z_x, "shift, x > 0")->capture_default_str();
  ze->add_option("--lambda", z_lambda, "real weight, |lambda| < 1")->required();

  auto* lc = app.add_subcommand(
      "l", "character L-value 2 sum_n (-1)^n chi(n) lambda^n n^-s");
  std::string l_s, l_chi;
  double l_lam = 0.0;
  lc->add_option("--s", l_s, "complex argument as RE or RE,IM")->required();
  lc->add_option("--chi", l_chi, "character as d:index")->required();
  lc->add_option("--lambda", l_lam, "real weight, |lambda| < 1")->required();

  auto* pz = app.add_subcommand(
      "partial-zeta", "the sum restricted to the residue class a mod F");
  std::string pz_s;
  long pz_a = 0, pz_F = 0;
  double pz_lam = 0.0;
  pz->add_option("--s", pz_s, "complex argument as RE or RE,IM")->required();
  pz->add_option("--a", pz_a, "residue, 0 < a < F")->required();
  pz->add_option("--F", pz_F, "odd period")->required();
  pz->add_option("--lambda", pz_lam, "real weight, |lambda| < 1")->required();

  auto* pl = app.add_subcommand(
      "padic-l", "p-adic L-value interpolating character-twisted Euler numbers");
  long pl_p = 0, pl_M = env_default_M(), pl_s = 0, pl_F = 0;
  std::string pl_chi = "1:0", pl_lambda = "1";
  pl->add_option("--p", pl_p, "odd prime")->required();
  pl->add_option("--M", pl_M, "working precision in digits")->capture_default_str();
  pl->add_option("--s", pl_s, "integer argument")->required();
  pl->add_option("--chi", pl_chi, "character as d:index")->capture_default_str();
  pl->add_option("--lambda", pl_lambda, "rational weight")->capture_default_str();
  pl->add_option("--F", pl_F, "period; 0 picks lcm(p, character modulus)")
      ->capture_default_str();

  auto* ha = app.add_subcommand(
      "harmonic", "restricted alternating harmonic sum against its L-series expansion");
  long h_p = 0, h_M = env_default_M(), h_n = 0, h_r = 0, h_kmax = -1;
  std::string h_lambda = "1";
  ha->add_option("--p", h_p, "odd prime")->required();
  ha->add_option("--M", h_M, "working precision in digits")->capture_default_str();
  ha->add_option("--n", h_n, "range parameter; the sum runs over j <= np")
      ->required()
      ->check(CLI::PositiveNumber);
  ha->add_option("--r", h_r, "power in the denominator, r >= 1")->required();
  ha->add_option("--lambda", h_lambda, "rational weight")->capture_default_str();
  ha->add_option("--k-max", h_kmax, "series cut; -1 picks it from the precision")
      ->capture_default_str();

  auto* ig = app.add_subcommand(
      "integrate", "partial p-adic integral of a prefix-syntax integrand");
  std::string ig_f, ig_measure, ig_q, ig_lambda = "1", ig_chi;
  long ig_N = 3, ig_p = 0, ig_M = env_default_M();
  ig->add_option("--f", ig_f,
                 "integrand, e.g. \"mul(pow(lambda,x), pow(add(x,c:1/2), 3))\"")
      ->required();
  ig->add_option("--measure", ig_measure, "fermionic, volkenborn, or q")
      ->required()
      ->check(CLI::IsMember({"fermionic", "volkenborn", "q"}));
  ig->add_option("--q", ig_q, "rational q with v_p(q-1) >= 1 (required for measure q)");
  ig->add_option("--N", ig_N, "partial-sum level; sums over x < p^N")
      ->capture_default_str();
  ig->add_option("--p", ig_p, "odd prime")->required();
  ig->add_option("--M", ig_M, "working precision in digits")->capture_default_str();
  ig->add_option("--lambda", ig_lambda, "value bound to the symbol lambda")
      ->capture_default_str();
  ig->add_option("--chi", ig_chi, "character bound to the symbol chi, as d:index");

  auto* vf = app.add_subcommand("verify", "named verification suites, JSON report");
  std::vector<std::string> suite_choices = verify_suite_names();
  suite_choices.push_back("all");
  std::string v_suite;
  long v_p = 5, v_M = env_default_M();
  unsigned long long v_seed = 12345;
  vf->add_option("--suite", v_suite, "suite name, or all")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  vf->add_option("--p", v_p, "odd prime the p-adic suites run at")->capture_default_str();
  vf->add_option("--M", v_M, "working precision in digits")->capture_default_str();
  vf->add_option("--seed", v_seed, "seed for the randomized cases")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*euler) {
      const Rational lambda = rational_from_string(e_lambda);
      const auto E = euler_numbers(lambda, (unsigned long)e_n);
      Json meta;
      meta["lambda"] = to_json(lambda);
      meta["n"] = e_n;
      std::vector<Rational> vals;
      if (e_xopt->count() > 0) {
        const Rational x = rational_from_string(e_x);
        meta["x"] = to_json(x);
        for (long k = 0; k <= e_n; ++k)
          vals.push_back(euler_polynomial_from_table(E, (unsigned long)k, x));
      } else {
        vals = E;
      }
      return emit_table(vals, meta, e_json, e_csv);
    }

    if (*bern) {
      const Rational lambda = rational_from_string(b_lambda);
      const auto B = (lambda == 1)
                         ? bernoulli_numbers((unsigned long)b_n)
                         : lambda_bernoulli_numbers(lambda, (unsigned long)b_n);
      Json meta;
      meta["lambda"] = to_json(lambda);
      meta["n"] = b_n;
      return emit_table(B, meta, b_json, b_csv);
    }

    if (*ce) {
      const DirichletCharacter chi = parse_char(ce_chi);
      const Rational lambda = rational_from_string(ce_lambda);
      const auto vals = generalized_euler_numbers(chi, lambda, (unsigned long)ce_n);
      Json out;
      out["chi"] = to_json(chi);
      out["lambda"] = to_json(lambda);
      out["n"] = ce_n;
      Json arr = Json::array();
      for (const auto& v : vals) arr.push_back(to_json(v));
      out["values"] = arr;
      emit(out);
      return 0;
    }

    if (*ze) {
      const std::complex<double> s = parse_complex(z_s);
      const EvalResult res = zeta_lambda(s, z_x, z_lambda, default_eval_config(z_lambda));
      Json out;
      out["s"] = Json{{"re", s.real()}, {"im", s.imag()}};
      out["x"] = z_x;
      out["lambda"] = z_lambda;
      out["result"] = to_json(res);
      emit(out);
      return res.tolerance_met ? 0 : 1;
    }

    if (*lc) {
      const std::complex<double> s = parse_complex(l_s);
      const DirichletCharacter chi = parse_char(l_chi);
      const EvalResult res = l_lambda(s, chi, l_lam, default_eval_config(l_lam));
      Json out;
      out["s"] = Json{{"re", s.real()}, {"im", s.imag()}};
      out["chi"] = to_json(chi);
      out["lambda"] = l_lam;
      out["result"] = to_json(res);
      emit(out);
      return res.tolerance_met ? 0 : 1;
    }

    if (*pz) {
      const std::complex<double> s = parse_complex(pz_s);
      const EvalResult res =
          partial_zeta(s, pz_a, pz_F, pz_lam, default_eval_config(pz_lam));
      Json out;
      out["s"] = Json{{"re", s.real()}, {"im", s.imag()}};
      out["a"] = pz_a;
      out["F"] = pz_F;
      out["lambda"] = pz_lam;
      out["result"] = to_json(res);
      emit(out);
      return res.tolerance_met ? 0 : 1;
    }

    if (*pl) {
      const PadicContext ctx(pl_p, pl_M);
      const DirichletCharacter chi = parse_char(pl_chi);
      const Rational lambda = rational_from_string(pl_lambda);
      const long F = (pl_F != 0) ? pl_F : std::lcm(pl_p, chi.modulus());
      const PadicNumber value =
          l_lambda_p(PadicNumber::from_int(pl_s, ctx), chi, lambda, F, ctx);
      Json out;
      out["p"] = pl_p;
      out["M"] = pl_M;
      out["s"] = pl_s;
      out["chi"] = to_json(chi);
      out["lambda"] = to_json(lambda);
      out["F"] = F;
      out["value"] = to_json(value);
      emit(out);
      return 0;
    }

    if (*ha) {
      const PadicContext ctx(h_p, h_M);
      const Rational lambda = rational_from_string(h_lambda);
      const HarmonicSumReport rep =
          theorem10_verify((unsigned long)h_n, h_r, lambda, ctx, h_kmax);
      Json out = to_json(rep, h_p, h_M);
      out["n"] = h_n;
      out["r"] = h_r;
      out["lambda"] = to_json(lambda);
      emit(out);
      return 0;
    }

    if (*ig) {
      const PadicContext ctx(ig_p, ig_M);
      IntegrandSymbols syms;
      syms.lambda = rational_from_string(ig_lambda);
      std::optional<DirichletCharacter> dchi;
      if (!ig_chi.empty()) {
        dchi = parse_char(ig_chi);
        syms.chi = PadicCharacter::from_dirichlet(*dchi, ig_p);
      }
      const Integrand f = parse_integrand(ig_f, syms);
      std::optional<Rational> q;
      if (!ig_q.empty()) q = rational_from_string(ig_q);
      if (ig_measure == "q" && !q.has_value())
        throw std::invalid_argument("measure q needs --q");
      EvalEnv env;
      env.q = q;
      Json out;
      out["f"] = f.to_string();
      out["measure"] = ig_measure;
      out["p"] = ig_p;
      out["M"] = ig_M;
      out["N"] = ig_N;
      out["lambda"] = to_json(syms.lambda);
      if (dchi.has_value()) out["chi"] = to_json(*dchi);
      if (q.has_value()) out["q"] = to_json(*q);
      const PadicNumber value = (ig_measure == "fermionic")
                                    ? fermionic_sum(f, ig_N, ctx, env)
                                : (ig_measure == "volkenborn")
                                    ? volkenborn_sum(f, ig_N, ctx, env)
                                    : q_sum(f, *q, ig_N, ctx);
      out["value"] = to_json(value);
      emit(out);
      return 0;
    }

    if (*vf) {
      VerifyOptions opts;
      opts.p = v_p;
      opts.M = v_M;
      opts.seed = v_seed;
      const auto results = run_verify(v_suite, opts);
      Json arr = Json::array();
      int rc = 0;
      for (const auto& r : results) {
        arr.push_back(to_json(r));
        std::cerr << r.suite << ": " << r.passed() << " passed, " << r.failed()
                  << " failed, " << r.skipped() << " skipped\n";
        rc = std::max(rc, r.exit_code);
      }
      std::cout << arr.dump(2) << "\n";
      return rc;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
