#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperoct/quotient.hpp"

using namespace hyperoct;

namespace {

template <class F>
UniPoly<F> P(const F& f, std::initializer_list<int64_t> cs) {
  return UniPoly<F>::from_ints(f, cs);
}

}  // namespace

TEST_CASE_TEMPLATE("gcd of the typing example polynomials", F, PrimeField, RationalField) {
  F f;
  auto a = P(f, {0, 2, -3, 1});  // t^3 - 3t^2 + 2t
  auto b = P(f, {3, -4, 1});     // t^2 - 4t + 3
  CHECK(gcd(a, b) == P(f, {-1, 1}));
  CHECK(gcd(UniPoly<F>(f), UniPoly<F>(f)).is_zero());
  CHECK(gcd(a, UniPoly<F>(f)) == a);
}

TEST_CASE_TEMPLATE("multiplicity decomposition of t (t-2)(t-3)^2 (t-1)^3", F, PrimeField, RationalField) {
  F f;
  auto q1 = P(f, {0, 2, -3, 1});
  auto q2 = P(f, {3, -4, 1});
  auto md = multiplicity_decomposition(q1 * q2 * q2);
  CHECK(md.t_valuation == 1);
  REQUIRE(md.parts.size() == 3);
  CHECK(md.parts[0].first == P(f, {-2, 1}));
  CHECK(md.parts[0].second == 1);
  CHECK(md.parts[1].first == P(f, {-3, 1}));
  CHECK(md.parts[1].second == 2);
  CHECK(md.parts[2].first == P(f, {-1, 1}));
  CHECK(md.parts[2].second == 3);
}

TEST_CASE("multiplicity decomposition rejects small characteristic") {
  PrimeField f(3);
  CHECK_THROWS_AS(multiplicity_decomposition(P(f, {0, 0, 0, 1})), std::invalid_argument);
  CHECK_THROWS(multiplicity_decomposition(UniPoly<PrimeField>(f)));
}

TEST_CASE("degree of the zero polynomial is minus infinity") {
  RationalField q;
  UniPoly<RationalField> z(q);
  CHECK(z.degree().is_minus_infinity());
  CHECK(z.degree() < UniPoly<RationalField>::constant(q, q.one()).degree());
  CHECK(P(q, {1, 2, 3}).degree() == 2u);
  CHECK_THROWS(z.degree().value());
}

TEST_CASE("division with remainder") {
  RationalField q;
  auto a = P(q, {1, 0, 0, 2});
  auto b = P(q, {1, 3});
  auto [qq, r] = divrem(a, b);
  CHECK(qq * b + r == a);
  CHECK(r.len() < b.len());
  CHECK_THROWS_AS(divrem(a, UniPoly<RationalField>(q)), DivisionByZero);
}

TEST_CASE("field parsing") {
  PrimeField f(7);
  CHECK(f.from_string("10").value() == 3);
  CHECK(f.from_string("-1").value() == 6);
  CHECK(f.from_string("1/2").value() == 4);
  CHECK_THROWS_AS(f.from_string("1/7"), ParseError);
  CHECK_THROWS_AS(f.from_string("x"), ParseError);
  RationalField q;
  CHECK(q.from_string("6/4").to_string() == "3/2");
  CHECK(q.from_string("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
}

TEST_CASE_TEMPLATE("dynamic evaluation gcd splits the modulus", F, PrimeField, RationalField) {
  F f;
  auto v = P(f, {6, -5, 1});  // (t-2)(t-3)
  // a = u - t, b = u - 2 with coefficients in K[t]/(v), low degree first
  std::vector<UniPoly<F>> a{P(f, {0, -1}), P(f, {1})};
  std::vector<UniPoly<F>> b{P(f, {-2}), P(f, {1})};
  auto br = quotient_gcd_d5(v, a, b);
  REQUIRE(br.size() == 2);
  CHECK(br[0].modulus == P(f, {-2, 1}));
  REQUIRE(br[0].gcd.len() == 2);
  CHECK(br[0].gcd.coeff(0).residue() == P(f, {-2}));
  CHECK(br[1].modulus == P(f, {-3, 1}));
  CHECK(br[1].gcd.len() == 1);
}

TEST_CASE_TEMPLATE("dynamic evaluation merges equal-degree branches", F, PrimeField, RationalField) {
  F f;
  // v = (t-1)(t-2)(t-3); a = (u - t)(u - 5), b = u - 5: gcd is u - 5 everywhere.
  auto v = P(f, {-6, 11, -6, 1});
  std::vector<UniPoly<F>> a{P(f, {0, 5}), P(f, {-5, -1}), P(f, {1})};
  std::vector<UniPoly<F>> b{P(f, {-5}), P(f, {1})};
  auto br = quotient_gcd_d5(v, a, b);
  REQUIRE(br.size() == 1);
  CHECK(br[0].modulus == v);
  CHECK(br[0].gcd.len() == 2);
}

TEST_CASE("chinese remaindering") {
  RationalField q;
  auto m1 = P(q, {-1, 1}), m2 = P(q, {-2, 1});
  auto c = crt(P(q, {5}), m1, P(q, {7}), m2);
  CHECK(c.eval(q.from_int(1)) == q.from_int(5));
  CHECK(c.eval(q.from_int(2)) == q.from_int(7));
}

TEST_CASE("quotient field elements split on zero divisors") {
  RationalField q;
  QuotientField<RationalField> A(P(q, {6, -5, 1}));
  auto x = A.from_poly(P(q, {-2, 1}));
  bool split = false;
  try {
    (void)x.is_zero();
  } catch (Split<RationalField>& s) {
    split = true;
    CHECK(s.factor == P(q, {-2, 1}));
  }
  CHECK(split);
  CHECK_FALSE(A.from_int(3).is_zero());
  auto y = A.from_poly(P(q, {1, 1}));
  CHECK((y * y.inv()) == A.one());
}

#include "hyperoct/finite_field.hpp"

TEST_CASE("irreducibility and distinct-degree factorization over GF(p)") {
  PrimeField f(65521);
  Rng rng(7);
  auto h = random_irreducible(f, 3, rng);
  CHECK(is_irreducible(h));
  CHECK_FALSE(is_irreducible(P(f, {-2, 0, 1}) * P(f, {1, 1})));
  auto lin = P(f, {-5, 1});
  auto g = h * lin * P(f, {-7, 1});
  auto ddf = distinct_degree_factorization(g);
  REQUIRE(ddf.size() == 2);
  CHECK(ddf[0].first == 1);
  CHECK(ddf[0].second == lin * P(f, {-7, 1}));
  CHECK(ddf[1].first == 3);
  CHECK(ddf[1].second == h.monic());
}

TEST_CASE("roots in prime and extension fields") {
  PrimeField f(103);
  Rng rng(3);
  REQUIRE(is_irreducible(P(f, {1, 0, 1})));  // 103 = 3 mod 4
  auto g = P(f, {-1, 1}) * P(f, {-2, 1}) * P(f, {1, 0, 1});
  auto r = roots_in_field(g, rng);
  std::vector<uint32_t> vals;
  for (auto& x : r) vals.push_back(x.value());
  std::sort(vals.begin(), vals.end());
  CHECK(vals == std::vector<uint32_t>{1, 2});
  ExtField L = extension_field(f, 2, rng);
  std::vector<QElem<PrimeField>> c{L.from_int(1), L.zero(), L.one()};
  UniPoly<ExtField> gl(L, c);
  auto rl = roots_in_field(gl, rng);
  CHECK(rl.size() == 2);
  for (auto& x : rl) CHECK((x * x + L.one()).is_zero());
  CHECK(field_order(L) == 103 * 103);
}
