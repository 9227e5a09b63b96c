#include <climits>
#include <stdexcept>

#include "apeuler/json_io.hpp"
#include "doctest.h"

using namespace apeuler;

TEST_CASE("rationals serialize in human form") {
  CHECK(to_json(Rational(7)) == Json("7"));
  CHECK(to_json(Rational(-1, 2)) == Json("-1/2"));
  CHECK(to_json(Rational(4, 27)) == Json("4/27"));
}

TEST_CASE("p-adic serialization distinguishes the zero flavors") {
  const PadicContext ctx(5, 6);
  const auto j = to_json(PadicNumber::from_int(50, ctx));
  CHECK(j["p"] == 5);
  CHECK(j["valuation"] == 2);
  CHECK(j["digits"].size() == 6);
  CHECK(j["digits"][0] == 2);
  CHECK(j["precision"] == 6);
  CHECK(j["text"].get<std::string>().find("O(5^8)") != std::string::npos);

  const auto jz = to_json(PadicNumber::zero(5));
  CHECK(jz["valuation"].is_null());
  CHECK(jz["digits"].empty());
  CHECK(jz["text"] == "0");

  const auto jm = to_json(PadicNumber::zero_mod(5, 4));
  CHECK(jm["valuation"] == 4);
  CHECK(jm["digits"].empty());
  CHECK(jm["text"] == "O(5^4)");
}

TEST_CASE("agreement serialization") {
  CHECK(agreement_json(5) == Json(5));
  CHECK(agreement_json(LONG_MAX) == Json("exact"));
}

TEST_CASE("character serialization") {
  const auto tab = characters_mod(5);
  const auto j = to_json(tab[1]);
  CHECK(j["modulus"] == 5);
  CHECK(j["exponents"].size() == 5);
  CHECK(j["exponents"][0] == -1);
}

TEST_CASE("suite registry") {
  const auto& names = verify_suite_names();
  REQUIRE(names.size() == 13);
  CHECK(names.front() == "recurrence");
  CHECK(names.back() == "qbinom");

  const VerifyOptions opts;
  CHECK_THROWS_AS(run_verify_suite("nope", opts), std::invalid_argument);

  const auto one = run_verify_suite("recurrence", opts);
  CHECK(one.suite == "recurrence");
  CHECK(one.passed() > 0);
  CHECK(one.failed() == 0);
  CHECK(one.exit_code == 0);

  const auto both = run_verify("theorem5", opts);
  REQUIRE(both.size() == 1);
  CHECK(both[0].suite == "theorem5");

  const auto all = run_verify("all", opts);
  REQUIRE(all.size() == names.size());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].suite == names[i]);
}

TEST_CASE("suite results serialize with stable ordering") {
  const VerifyOptions opts;
  const auto res = run_verify_suite("binomial-identities", opts);
  const auto j = to_json(res);
  CHECK(j["suite"] == "binomial-identities");
  CHECK(j["cases"].is_array());
  CHECK(j["cases"].size() == res.cases.size());
  CHECK(j["exit_code"] == 0);
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("status"));
    CHECK(c.contains("detail"));
  }
  // two serializations of the same run are byte-identical
  CHECK(j.dump() == to_json(run_verify_suite("binomial-identities", opts)).dump());
}
