#include "apeuler/integrand.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "apeuler/padic_elementary.hpp"

namespace apeuler {

namespace {

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long integer_point(const Rational& x, const char* what) {
  if (!is_integer(x)) throw std::invalid_argument(std::string(what) + " needs an integer point");
  const Int n = x.get_num();
  if (!n.fits_slong_p()) throw std::invalid_argument("evaluation point out of range");
  return n.get_si();
}

// [x choose n]_q = prod_{i<n} (1 - q^{x-i}) / (1 - q^{n-i}); a factor 1-q^0
// in the numerator makes the whole value 0 (the x < n case)
Rational qbinom_value(long n, long x, const Rational& q) {
  Rational acc(1);
  for (long i = 0; i < n; ++i) {
    if (x - i == 0) return Rational(0);
    acc *= (Rational(1) - rational_pow(q, x - i)) / (Rational(1) - rational_pow(q, n - i));
  }
  return acc;
}

}  // namespace

Integrand Integrand::constant(const Rational& c) {
  Integrand f;
  f.kind_ = IntegrandKind::constant;
  f.param_ = c;
  return f;
}

Integrand Integrand::coordinate() { return monomial(1); }

Integrand Integrand::monomial(long n) {
  if (n < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  Integrand f;
  f.kind_ = IntegrandKind::monomial;
  f.n_ = n;
  return f;
}

Integrand Integrand::lambda_pow(const Rational& lambda) {
  if (lambda == 0) throw std::invalid_argument("lambda^x needs lambda != 0");
  Integrand f;
  f.kind_ = IntegrandKind::lambda_pow;
  f.param_ = lambda;
  return f;
}

Integrand Integrand::character_factor(const PadicCharacter& chi) {
  Integrand f;
  f.kind_ = IntegrandKind::character;
  f.chi_ = chi;
  return f;
}

Integrand Integrand::sine(const Rational& a) {
  Integrand f;
  f.kind_ = IntegrandKind::sine;
  f.param_ = a;
  return f;
}

Integrand Integrand::cosine(const Rational& a) {
  Integrand f;
  f.kind_ = IntegrandKind::cosine;
  f.param_ = a;
  return f;
}

Integrand Integrand::exponential(const Rational& a) {
  Integrand f;
  f.kind_ = IntegrandKind::exponential;
  f.param_ = a;
  return f;
}

Integrand Integrand::qbinom(long n) {
  if (n < 0) throw std::invalid_argument("q-binomial degree must be nonnegative");
  Integrand f;
  f.kind_ = IntegrandKind::qbinom;
  f.n_ = n;
  return f;
}

Integrand Integrand::log_scale(const Rational& a) {
  Integrand f;
  f.kind_ = IntegrandKind::log_scale;
  f.param_ = a;
  return f;
}

Integrand Integrand::product(std::vector<Integrand> parts) {
  if (parts.empty()) throw std::invalid_argument("product needs at least one factor");
  if (parts.size() == 1) return parts.front();
  Integrand f;
  f.kind_ = IntegrandKind::product;
  f.children_ = std::move(parts);
  return f;
}

Integrand Integrand::sum(std::vector<Integrand> parts) {
  if (parts.empty()) throw std::invalid_argument("sum needs at least one term");
  if (parts.size() == 1) return parts.front();
  Integrand f;
  f.kind_ = IntegrandKind::sum;
  f.children_ = std::move(parts);
  return f;
}

Integrand Integrand::shifted(const Rational& c) const {
  if (c == 0) return *this;
  Integrand f;
  f.kind_ = IntegrandKind::shift;
  f.param_ = c;
  f.children_.push_back(*this);
  return f;
}

Integrand Integrand::translated(long n) const { return shifted(Rational(n)); }

bool Integrand::differentiable() const {
  if (kind_ == IntegrandKind::qbinom) return false;
  for (const auto& c : children_)
    if (!c.differentiable()) return false;
  return true;
}

Integrand Integrand::derivative() const {
  switch (kind_) {
    case IntegrandKind::constant:
    case IntegrandKind::log_scale:
    case IntegrandKind::character:
      return constant(Rational(0));
    case IntegrandKind::monomial:
      if (n_ == 0) return constant(Rational(0));
      if (n_ == 1) return constant(Rational(1));
      return product({constant(Rational(n_)), monomial(n_ - 1)});
    case IntegrandKind::lambda_pow:
      if (param_ == 1) return constant(Rational(0));
      return product({log_scale(param_), lambda_pow(param_)});
    case IntegrandKind::sine:
      return product({constant(param_), cosine(param_)});
    case IntegrandKind::cosine:
      return product({constant(-param_), sine(param_)});
    case IntegrandKind::exponential:
      return product({constant(param_), exponential(param_)});
    case IntegrandKind::qbinom:
      throw std::domain_error("q-binomial factor is not differentiable");
    case IntegrandKind::product: {
      std::vector<Integrand> terms;
      for (size_t i = 0; i < children_.size(); ++i) {
        std::vector<Integrand> factors = children_;
        factors[i] = children_[i].derivative();
        terms.push_back(product(std::move(factors)));
      }
      return sum(std::move(terms));
    }
    case IntegrandKind::sum: {
      std::vector<Integrand> terms;
      for (const auto& c : children_) terms.push_back(c.derivative());
      return sum(std::move(terms));
    }
    case IntegrandKind::shift:
      return children_.front().derivative().shifted(param_);
  }
  throw std::logic_error("unhandled integrand kind");
}

bool Integrand::rational_valued(const EvalEnv& env) const {
  switch (kind_) {
    case IntegrandKind::constant:
    case IntegrandKind::monomial:
    case IntegrandKind::lambda_pow:
      return true;
    case IntegrandKind::qbinom:
      return env.q.has_value();
    case IntegrandKind::character:
    case IntegrandKind::sine:
    case IntegrandKind::cosine:
    case IntegrandKind::exponential:
    case IntegrandKind::log_scale:
      return false;
    case IntegrandKind::product:
    case IntegrandKind::sum:
    case IntegrandKind::shift:
      for (const auto& c : children_)
        if (!c.rational_valued(env)) return false;
      return true;
  }
  return false;
}

Rational Integrand::eval_rational(const Rational& x, const EvalEnv& env) const {
  switch (kind_) {
    case IntegrandKind::constant:
      return param_;
    case IntegrandKind::monomial:
      return rational_pow(x, n_);
    case IntegrandKind::lambda_pow:
      return rational_pow(param_, integer_point(x, "lambda^x"));
    case IntegrandKind::qbinom: {
      if (!env.q.has_value())
        throw std::invalid_argument("q-binomial factor needs a bosonic q");
      const long xi = integer_point(x, "[x choose n]_q");
      if (xi < 0) throw std::invalid_argument("[x choose n]_q needs a nonnegative point");
      return qbinom_value(n_, xi, *env.q);
    }
    case IntegrandKind::product: {
      Rational acc(1);
      for (const auto& c : children_) acc *= c.eval_rational(x, env);
      return acc;
    }
    case IntegrandKind::sum: {
      Rational acc(0);
      for (const auto& c : children_) acc += c.eval_rational(x, env);
      return acc;
    }
    case IntegrandKind::shift:
      return children_.front().eval_rational(x + param_, env);
    default:
      throw std::logic_error("eval_rational on a non-rational factor");
  }
}

Rational Integrand::eval_rational(const Int& x, const EvalEnv& env) const {
  return eval_rational(Rational(x), env);
}

PadicNumber Integrand::eval_padic(const Rational& x, const PadicContext& ctx,
                                  const EvalEnv& env) const {
  if (rational_valued(env))
    return PadicNumber::from_rational(eval_rational(x, env), ctx);
  switch (kind_) {
    case IntegrandKind::character: {
      const long xi = integer_point(x, "chi(x)");
      return chi_->value(xi, ctx);
    }
    case IntegrandKind::sine: {
      const Rational arg = param_ * x;
      if (arg == 0) return PadicNumber::zero(ctx.p);
      return padic_sin(PadicNumber::from_rational(arg, ctx), ctx);
    }
    case IntegrandKind::cosine: {
      const Rational arg = param_ * x;
      if (arg == 0) return PadicNumber::from_int(1, ctx);
      return padic_cos(PadicNumber::from_rational(arg, ctx), ctx);
    }
    case IntegrandKind::exponential: {
      const Rational arg = param_ * x;
      if (arg == 0) return PadicNumber::from_int(1, ctx);
      return padic_exp(PadicNumber::from_rational(arg, ctx), ctx);
    }
    case IntegrandKind::log_scale:
      return padic_log(PadicNumber::from_rational(param_, ctx), ctx);
    case IntegrandKind::qbinom:
      throw std::invalid_argument("q-binomial factor needs a bosonic q");
    case IntegrandKind::product: {
      PadicNumber acc = PadicNumber::from_int(1, ctx);
      for (const auto& c : children_) acc = acc * c.eval_padic(x, ctx, env);
      return acc;
    }
    case IntegrandKind::sum: {
      PadicNumber acc = PadicNumber::zero(ctx.p);
      for (const auto& c : children_) acc = acc + c.eval_padic(x, ctx, env);
      return acc;
    }
    case IntegrandKind::shift:
      return children_.front().eval_padic(x + param_, ctx, env);
    default:
      throw std::logic_error("unhandled integrand kind");
  }
}

PadicNumber Integrand::eval_padic(const Int& x, const PadicContext& ctx,
                                  const EvalEnv& env) const {
  return eval_padic(Rational(x), ctx, env);
}

long Integrand::character_extension() const {
  long d = 1;
  if (kind_ == IntegrandKind::character) d = chi_->modulus();
  for (const auto& c : children_) d = std::lcm(d, c.character_extension());
  return d;
}

std::string Integrand::to_string() const {
  auto wrap = [](const Rational& r) {
    std::string s = rational_to_human(r);
    if (s.find('/') != std::string::npos || (!s.empty() && s[0] == '-'))
      return "(" + s + ")";
    return s;
  };
  switch (kind_) {
    case IntegrandKind::constant:
      return rational_to_human(param_);
    case IntegrandKind::monomial:
      if (n_ == 0) return "1";
      if (n_ == 1) return "x";
      return "x^" + std::to_string(n_);
    case IntegrandKind::lambda_pow:
      return wrap(param_) + "^x";
    case IntegrandKind::character:
      return "chi(x)";
    case IntegrandKind::sine:
      return "sin(" + rational_to_human(param_) + "*x)";
    case IntegrandKind::cosine:
      return "cos(" + rational_to_human(param_) + "*x)";
    case IntegrandKind::exponential:
      return "exp(" + rational_to_human(param_) + "*x)";
    case IntegrandKind::qbinom:
      return "[x choose " + std::to_string(n_) + "]_q";
    case IntegrandKind::log_scale:
      return "log(" + rational_to_human(param_) + ")";
    case IntegrandKind::product: {
      std::string out;
      for (size_t i = 0; i < children_.size(); ++i) {
        if (i) out += " * ";
        out += children_[i].to_string();
      }
      return out;
    }
    case IntegrandKind::sum: {
      std::string out = "(";
      for (size_t i = 0; i < children_.size(); ++i) {
        if (i) out += " + ";
        out += children_[i].to_string();
      }
      return out + ")";
    }
    case IntegrandKind::shift:
      return "shift(" + children_.front().to_string() + ", " +
             rational_to_human(param_) + ")";
  }
  return "?";
}

namespace {

struct Parser {
  const std::string& s;
  const IntegrandSymbols& syms;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("integrand parse error at offset " +
                                std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string ident() {
    skip_ws();
    size_t b = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == b) fail("expected a name");
    return s.substr(b, pos - b);
  }

  std::string number_token() {
    skip_ws();
    size_t b = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    if (pos == b) fail("expected a number");
    return s.substr(b, pos - b);
  }

  Rational rational_lit() {
    const std::string tok = number_token();
    try {
      return rational_from_string(tok);
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  long int_lit() {
    const Rational r = rational_lit();
    if (r.get_den() != 1) fail("expected an integer");
    const Int n = r.get_num();
    if (!n.fits_slong_p()) fail("integer out of range");
    return n.get_si();
  }

  Integrand power_of(const Integrand& base, long k) {
    if (k < 0) fail("exponent must be nonnegative");
    if (k == 0) return Integrand::constant(Rational(1));
    std::vector<Integrand> copies(static_cast<size_t>(k), base);
    return Integrand::product(std::move(copies));
  }

  Integrand parse_pow() {
    expect('(');
    skip_ws();
    const size_t mark = pos;
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      const std::string name = ident();
      if (name == "lambda" && peek_is(',')) {
        expect(',');
        skip_ws();
        if (pos < s.size() && s[pos] == 'x') {
          ++pos;
          expect(')');
          return Integrand::lambda_pow(syms.lambda);
        }
        const long k = int_lit();
        expect(')');
        return Integrand::constant(rational_pow(syms.lambda, k));
      }
      if (name == "x" && peek_is(',')) {
        expect(',');
        const long k = int_lit();
        expect(')');
        return Integrand::monomial(k);
      }
      pos = mark;
    }
    Integrand base = parse_expr();
    expect(',');
    const long k = int_lit();
    expect(')');
    return power_of(base, k);
  }

  std::vector<Integrand> parse_args() {
    expect('(');
    std::vector<Integrand> parts;
    parts.push_back(parse_expr());
    while (peek_is(',')) {
      expect(',');
      parts.push_back(parse_expr());
    }
    expect(')');
    return parts;
  }

  Integrand parse_expr() {
    skip_ws();
    if (pos >= s.size()) fail("expected an expression");
    if (s.compare(pos, 2, "c:") == 0) {
      pos += 2;
      return Integrand::constant(rational_lit());
    }
    const std::string name = ident();
    if (name == "x") return Integrand::coordinate();
    if (name == "lambda") return Integrand::constant(syms.lambda);
    if (name == "chi") {
      if (!syms.chi.has_value()) fail("no character bound for chi");
      return Integrand::character_factor(*syms.chi);
    }
    if (name == "pow") return parse_pow();
    if (name == "add") return Integrand::sum(parse_args());
    if (name == "mul") return Integrand::product(parse_args());
    if (name == "shift") {
      expect('(');
      Integrand inner = parse_expr();
      expect(',');
      const Rational c = rational_lit();
      expect(')');
      return inner.shifted(c);
    }
    if (name == "sin" || name == "cos" || name == "exp") {
      expect('(');
      const Rational a = rational_lit();
      expect(')');
      if (name == "sin") return Integrand::sine(a);
      if (name == "cos") return Integrand::cosine(a);
      return Integrand::exponential(a);
    }
    if (name == "qbinom") {
      expect('(');
      const long n = int_lit();
      expect(')');
      return Integrand::qbinom(n);
    }
    fail("unknown form '" + name + "'");
  }
};

}  // namespace

Integrand parse_integrand(const std::string& text, const IntegrandSymbols& symbols) {
  Parser parser{text, symbols};
  Integrand f = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return f;
}

}  // namespace apeuler
