#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "apeuler/dirichlet.hpp"
#include "apeuler/gen_euler.hpp"

using namespace apeuler;

TEST_CASE("cyclotomic polynomial and phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  // Phi_5 = 1 + t + t^2 + t^3 + t^4
  const auto& phi5 = cyclotomic_polynomial(5);
  REQUIRE(phi5.size() == 5);
  for (const auto& c : phi5) CHECK(c == 1);
  // Phi_12 = t^4 - t^2 + 1
  const auto& phi12 = cyclotomic_polynomial(12);
  REQUIRE(phi12.size() == 5);
  CHECK(phi12[0] == 1);
  CHECK(phi12[2] == -1);
  CHECK(phi12[4] == 1);
}

TEST_CASE("cyclotomic arithmetic reduces by the minimal polynomial") {
  // zeta_4^2 = -1
  const auto i = Cyclotomic::zeta_power(4, 1);
  CHECK(i * i == Cyclotomic(4, Rational(-1)));
  CHECK(i.pow(4) == Cyclotomic(4, Rational(1)));
  CHECK(i.inverse() == i.pow(3));
  // 1 + zeta_3 + zeta_3^2 = 0
  const auto z = Cyclotomic::zeta_power(3, 1);
  CHECK(Cyclotomic(3, Rational(1)) + z + z * z == Cyclotomic(3));
  // complex embedding of zeta_8
  const auto c = Cyclotomic::zeta_power(8, 1).to_complex();
  CHECK(std::abs(c.real() - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(c.imag() - std::sqrt(0.5)) < 1e-12);
  CHECK(Cyclotomic(6, Rational(5, 3)).is_rational());
  CHECK(Cyclotomic(6, Rational(5, 3)).rational_value() == Rational(5, 3));
}

TEST_CASE("character tables mod small odd d") {
  const auto c1 = characters_mod(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].is_trivial());
  CHECK(c1[0].value(0) == Cyclotomic(1, Rational(1)));

  const auto c5 = characters_mod(5);
  REQUIRE(c5.size() == 4);
  CHECK(c5[0].is_trivial());
  for (const auto& chi : c5) {
    CHECK(chi.modulus() == 5);
    CHECK((chi.order() == 1 || chi.order() == 2 || chi.order() == 4));
    CHECK(chi.value(0).is_zero());
    // multiplicativity on units
    for (long a = 1; a < 5; ++a)
      for (long b = 1; b < 5; ++b)
        CHECK(chi.value(a) * chi.value(b) == chi.value(a * b));
  }
  // orders partition: 1, 2, 4, 4
  long n_order4 = 0;
  for (const auto& chi : c5) n_order4 += (chi.order() == 4) ? 1 : 0;
  CHECK(n_order4 == 2);

  const auto c9 = characters_mod(9);
  REQUIRE(c9.size() == 6);
  // the order-2 character mod 9 has conductor 3
  for (const auto& chi : c9)
    if (chi.order() == 2) {
      CHECK(chi.conductor() == 3);
      CHECK_FALSE(chi.is_primitive());
      CHECK(chi.primitive().modulus() == 3);
    }
}

TEST_CASE("parity matches the value at -1") {
  for (long d : {3l, 5l, 7l}) {
    for (const auto& chi : characters_mod(d)) {
      const auto v = chi.value(d - 1);
      CHECK(Cyclotomic(chi.value_field(), Rational(chi.parity())) == v);
    }
  }
}

TEST_CASE("character round trip through exponent table") {
  for (const auto& chi : characters_mod(7)) {
    std::vector<long> exps;
    for (long a = 0; a < 7; ++a) exps.push_back(chi.exponent_at(a));
    CHECK(character_from_exponents(7, exps) == chi);
  }
}

TEST_CASE("twisted Euler numbers: both routes agree exactly") {
  for (long d : {3l, 5l}) {
    for (const auto& chi : characters_mod(d)) {
      for (const Rational& lam : {Rational(1), Rational(2), Rational(1, 2)}) {
        const auto a = generalized_euler_numbers(chi, lam, 6);
        const auto b = generalized_oracle(chi, lam, 6);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
      }
    }
  }
}

TEST_CASE("quadratic character mod 3: pinned values") {
  const auto c3 = characters_mod(3);
  REQUIRE(c3.size() == 2);
  const auto& chi = c3[1];
  CHECK(chi.order() == 2);

  const auto v1 = generalized_euler_numbers(chi, Rational(1), 4);
  const Rational expect1[] = {Rational(-2), Rational(0), Rational(4), Rational(0),
                              Rational(-44)};
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(v1[n].is_rational());
    CHECK(v1[n].rational_value() == expect1[n]);
  }

  const auto v2 = generalized_euler_numbers(chi, Rational(2), 4);
  const Rational expect2[] = {Rational(-4, 3), Rational(4, 3), Rational(-4, 9),
                              Rational(-4), Rational(52, 3)};
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(v2[n].is_rational());
    CHECK(v2[n].rational_value() == expect2[n]);
  }
}
