#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apeuler/padic.hpp"
#include "apeuler/padic_char.hpp"

namespace apeuler {

// Ambient data an expression tree may reference but does not own: the bosonic
// parameter q for q-binomial factors. Everything else (lambda, characters,
// trig coefficients) is baked into the nodes at construction.
struct EvalEnv {
  std::optional<Rational> q;
};

enum class IntegrandKind {
  constant,
  monomial,     // x^n
  lambda_pow,   // lambda^x
  character,    // chi(x)
  sine,         // sin(a*x)
  cosine,       // cos(a*x)
  exponential,  // e^{a*x}
  qbinom,       // [x choose n]_q
  log_scale,    // the constant log_p(a); shows up as d/dx lambda^x
  product,
  sum,
  shift,        // f(x + c)
};

// Closed expression-tree vocabulary for integrands on Z_p. Trees are
// immutable values; evaluation at a point is exact (rational-valued subtrees
// are summed in Q and embedded once, everything else goes through honest
// p-adic arithmetic at context precision).
class Integrand {
 public:
  static Integrand constant(const Rational& c);
  static Integrand coordinate();  // x
  static Integrand monomial(long n);
  static Integrand lambda_pow(const Rational& lambda);
  static Integrand character_factor(const PadicCharacter& chi);
  static Integrand sine(const Rational& a);
  static Integrand cosine(const Rational& a);
  static Integrand exponential(const Rational& a);
  static Integrand qbinom(long n);
  static Integrand log_scale(const Rational& a);
  static Integrand product(std::vector<Integrand> parts);
  static Integrand sum(std::vector<Integrand> parts);

  IntegrandKind kind() const { return kind_; }

  Integrand shifted(const Rational& c) const;  // x -> x + c
  Integrand translated(long n) const;          // x -> x + n

  // chi factors differentiate to zero (locally constant); a q-binomial
  // factor has no derivative and poisons the whole tree
  bool differentiable() const;
  Integrand derivative() const;

  // true when evaluation lands in Q: no character, trig, or log factor, and
  // any q-binomial factor has a rational q bound in the environment
  bool rational_valued(const EvalEnv& env) const;

  Rational eval_rational(const Rational& x, const EvalEnv& env) const;
  Rational eval_rational(const Int& x, const EvalEnv& env) const;
  PadicNumber eval_padic(const Rational& x, const PadicContext& ctx,
                         const EvalEnv& env) const;
  PadicNumber eval_padic(const Int& x, const PadicContext& ctx,
                         const EvalEnv& env) const;

  // lcm of the moduli of all character factors; 1 when there are none.
  // Character integrals extend their summation range by this factor.
  long character_extension() const;

  std::string to_string() const;

 private:
  IntegrandKind kind_ = IntegrandKind::constant;
  Rational param_ = Rational(0);  // constant value / lambda / trig coefficient / shift
  long n_ = 0;                    // monomial or q-binomial degree
  std::optional<PadicCharacter> chi_;
  std::vector<Integrand> children_;

  Integrand() = default;
};

// Symbols the prefix grammar can reference: 'lambda' (bare, or as the base of
// pow(lambda, x)) and 'chi'.
struct IntegrandSymbols {
  Rational lambda = Rational(1);
  std::optional<PadicCharacter> chi;
};

// Prefix grammar, e.g. "mul(pow(lambda,x), pow(add(x,c:1/2), 3))":
//   expr := c:RAT | x | lambda | chi | qbinom(N)
//         | pow(expr, N) | pow(lambda, x) | pow(x, N)
//         | add(expr, expr, ...) | mul(expr, expr, ...)
//         | shift(expr, RAT) | sin(RAT) | cos(RAT) | exp(RAT)
// pow with an integer exponent expands structurally; only the base 'lambda'
// admits the exponent 'x'.
Integrand parse_integrand(const std::string& text, const IntegrandSymbols& symbols);

}  // namespace apeuler
