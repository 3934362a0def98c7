#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "hyperoct/io.hpp"

using namespace hyperoct;

TEST_CASE_TEMPLATE("system files round trip", K, PrimeField, RationalField) {
  K f;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto sys = random_invariant_system(f, 3, 1 + seed % 2, 8, seed);
    std::string text = system_to_json(sys).dump(2);
    auto back = system_from_json(Json::parse(text), f);
    CHECK(back.f == sys.f);
    CHECK(back.phi == sys.phi);
    CHECK(system_to_json(back).dump(2) == text);
  }
}

TEST_CASE("coefficients are written as signed residues") {
  PrimeField f(101);
  CHECK(coeff_string(f.from_int(-3)) == "-3");
  CHECK(coeff_string(f.from_int(50)) == "50");
  CHECK(coeff_string(f.from_int(51)) == "-50");
  RationalField q;
  CHECK(coeff_string(q.from_string("-6/4")) == "-3/2");
}

TEST_CASE("malformed system files are rejected") {
  RationalField f;
  auto base = system_to_json(fixtures::three_variable_example(f));
  CHECK_NOTHROW(system_from_json(base, f));

  auto missing = base;
  missing.erase("phi");
  CHECK_THROWS_AS(system_from_json(missing, f), ParseError);

  auto short_term = base;
  short_term["phi"][0][1] = Json::array({2, 2});
  CHECK_THROWS_AS(system_from_json(short_term, f), ParseError);

  auto bad_coeff = base;
  bad_coeff["f"][0][0][0] = "1.5";
  CHECK_THROWS_AS(system_from_json(bad_coeff, f), ParseError);

  auto not_invariant = base;
  not_invariant["phi"].push_back(Json::array({"1", Json::array({1, 0, 0})}));
  CHECK_THROWS_AS(system_from_json(not_invariant, f), InvarianceError);

  CHECK(system_characteristic(Json{{"p", "rational"}}) == 0);
  CHECK(system_characteristic(Json{{"p", 65521}}) == 65521);
  CHECK_THROWS_AS(system_characteristic(Json{{"p", "GF"}}), ParseError);
}

TEST_CASE("representation output") {
  RationalField f;
  auto rep = critical_hyperoctahedral(fixtures::three_variable_example(f), 3);
  auto j = rep_to_json(rep, bound_nC(3, 1, 8));
  CHECK(j["stats"]["compressed_total"] == 10);
  CHECK(j["stats"]["expanded_total"] == 148);
  CHECK(j["stats"]["bound_nC"] == 240);
  REQUIRE(j["entries"].size() == 4);
  CHECK(j["entries"][0]["type"]["lambda"] == Json::parse("[[1,1],[2,1]]"));
  CHECK(j["entries"][3]["type"]["zero_pad"] == 2);
  CHECK(j["entries"][3]["orbit_size"] == 6);
}
