#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "hyperoct/oracle.hpp"

using namespace hyperoct;

TEST_CASE("direct system of the three-variable example") {
  RationalField f;
  auto sys = fixtures::three_variable_example(f);
  auto eqs = naive_system(sys);
  REQUIRE(eqs.size() == 4);
  auto x = [&](size_t i) { return MultiPoly<RationalField>::variable(f, 3, i); };
  auto c = [&](int64_t a) { return MultiPoly<RationalField>::constant(f, 3, f.from_int(a)); };
  // Minor on columns 1, 2.
  auto expect = c(8) * x(0) * x(1) * (x(0) - x(1)) * (x(0) + x(1)) *
                (x(0) * x(0) * x(2) * x(2) + x(1) * x(1) * x(2) * x(2) - c(3));
  CHECK((eqs[1] == expect || eqs[1] == -expect));
}

TEST_CASE("minor counts") {
  PrimeField f;
  auto sys = random_invariant_system(f, 4, 2, 8, 3);
  CHECK(naive_system(sys).size() == 2 + 4);
  // With s + 1 > n there are no minors.
  auto x = MultiPoly<PrimeField>::variable(f, 1, 0);
  std::vector<MultiPoly<PrimeField>> rows{x * x, x * x};
  CHECK(maximal_minors(jacobian(rows, 1)).empty());
}

TEST_CASE_TEMPLATE("direct solution has 148 points", K, RationalField, PrimeField) {
  K f;
  Rng rng(41);
  auto r = naive_solve(fixtures::three_variable_example(f), rng);
  CHECK(r.degree() == 148);
  CHECK(validate_param(r));
}

TEST_CASE("direct solution of an inconsistent system is empty") {
  PrimeField f;
  Rng rng(42);
  auto one = MultiPoly<PrimeField>::constant(f, 3, f.one());
  auto x = MultiPoly<PrimeField>::variable(f, 3, 0);
  InvariantSystem<PrimeField> sys(f, 3, 1, {one}, x * x);
  CHECK(naive_solve(sys, rng).is_empty());
}

TEST_CASE("direct and compressed counts agree on random systems") {
  PrimeField f;
  Rng rng(43);
  for (uint64_t seed = 0; seed < 8; ++seed) {
    auto sys = random_invariant_system(f, 3, 1 + seed % 2, 6, seed);
    auto rep = critical_hyperoctahedral(sys, seed);
    auto r = naive_solve(sys, rng);
    CAPTURE(seed);
    CHECK(expansion_count(rep) == r.degree());
    CHECK(rep.compressed_total() <= r.degree());
  }
}

TEST_CASE("low degree systems have positive-dimensional critical sets") {
  // Below degree 2n the invariants only involve eta_1, ..., eta_{n-1}, whose
  // fibers are curves.
  PrimeField f;
  Rng rng(44);
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto sys = random_invariant_system(f, 3, 1, 4, seed);
    CHECK_THROWS_AS(naive_solve(sys, rng), PositiveDimensional);
    CHECK_THROWS_AS(critical_hyperoctahedral(sys, seed), PositiveDimensional);
  }
}
