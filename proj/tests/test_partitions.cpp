#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hyperoct/partitions.hpp"

using namespace hyperoct;

namespace {

Partition P(std::vector<uint32_t> parts) { return Partition::from_parts(std::move(parts)); }

// All set partitions of {0..m-1} as restricted growth strings.
void set_partitions(uint32_t m, std::vector<uint32_t>& cur, uint32_t blocks,
                    const std::function<void(const std::vector<uint32_t>&)>& visit) {
  if (cur.size() == m) {
    visit(cur);
    return;
  }
  for (uint32_t b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    set_partitions(m, cur, std::max(blocks, b + 1), visit);
    cur.pop_back();
  }
}

// Orbit of v under all signed permutations.
size_t signed_orbit_size(const std::vector<int>& v) {
  size_t n = v.size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<int>> seen;
  do {
    for (uint32_t signs = 0; signs < (1u << n); ++signs) {
      std::vector<int> w(n);
      for (size_t i = 0; i < n; ++i) w[i] = ((signs >> i) & 1) ? -v[perm[i]] : v[perm[i]];
      seen.insert(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return seen.size();
}

}  // namespace

TEST_CASE("partitions of small integers") {
  auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == P({1, 1, 1}));
  CHECK(p3[1] == P({1, 2}));
  CHECK(p3[2] == P({3}));
  auto p1 = partitions_of(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == P({1}));
  CHECK(partitions_of(7).size() == 15);
  CHECK(partitions_of(10).size() == 42);
  for (uint32_t m = 1; m <= 8; ++m)
    for (const auto& l : partitions_of(m)) CHECK(l.size() == m);
}

TEST_CASE("partition groups and printing") {
  auto l = Partition::from_groups({{1, 3}, {2, 2}});
  CHECK(l.size() == 7);
  CHECK(l.length() == 5);
  CHECK(l.to_string() == "(1^3 2^2)");
  CHECK(P({2, 1, 2, 1, 1}) == l);
  CHECK(OrbitType{P({1}), 2}.to_string() == "(1^1)[2]");
  CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
}

TEST_CASE("extended refinement") {
  CHECK(is_extended_refinement({P({1, 1, 2}), 0}, {P({1, 3}), 0}));
  CHECK(is_extended_refinement({P({3}), 1}, {P({1, 3}), 0}));
  CHECK_FALSE(is_extended_refinement({P({2, 2}), 0}, {P({1, 3}), 0}));
  CHECK_FALSE(is_extended_refinement({P({1, 3}), 0}, {P({1, 1, 2}), 0}));
  for (uint32_t m = 1; m <= 6; ++m)
    for (const auto& l : partitions_of(m)) CHECK(is_extended_refinement({l, 0}, {l, 0}));
}

TEST_CASE("extended refinement is transitive") {
  std::mt19937_64 rng(11);
  std::vector<OrbitType> all;
  for (uint32_t m = 1; m <= 6; ++m)
    for (const auto& l : partitions_of(m)) all.push_back({l, 6 - m});
  int checked = 0;
  for (int it = 0; it < 4000; ++it) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    if (is_extended_refinement(a, b) && is_extended_refinement(b, c)) {
      CHECK(is_extended_refinement(a, c));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("coincidence pattern counts match enumeration") {
  for (uint32_t m = 1; m <= 5; ++m) {
    std::map<std::vector<uint32_t>, uint64_t> count;
    std::vector<uint32_t> cur;
    set_partitions(m, cur, 0, [&](const std::vector<uint32_t>& rgs) {
      std::vector<uint32_t> sizes(*std::max_element(rgs.begin(), rgs.end()) + 1, 0);
      for (uint32_t b : rgs) ++sizes[b];
      std::sort(sizes.begin(), sizes.end());
      ++count[sizes];
    });
    uint64_t total = 0;
    for (const auto& l : partitions_of(m)) {
      CHECK(set_partition_count(l) == count[l.parts()]);
      total += set_partition_count(l);
    }
    const uint64_t bell[] = {1, 1, 2, 5, 15, 52};
    CHECK(total == bell[m]);
  }
}

TEST_CASE("orbit sizes") {
  CHECK(zeta(P({2}), 3) == 3);
  CHECK(zeta(P({1, 1, 1, 1}), 4) == 24);
  CHECK(zeta(Partition::from_groups({{1, 3}, {2, 2}}), 9) == 45360);
  CHECK(orbit_size_x(P({1, 1}), 3) == 24);
  CHECK(orbit_size_x(P({3}), 3) == 8);
  CHECK(orbit_size_x(P({2}), 3) == 12);
  CHECK(orbit_size_x(P({1}), 3) == 6);
  CHECK(orbit_size_x(P({1, 2}), 3) == 24);
}

TEST_CASE("orbit sizes match signed permutation enumeration") {
  for (uint32_t n = 1; n <= 5; ++n)
    for (uint32_t m = 0; m <= n; ++m)
      for (const auto& l : (m == 0 ? std::vector<Partition>{Partition()} : partitions_of(m))) {
        // Distinct absolute values per block, then zeros.
        std::vector<int> v;
        int val = 1;
        for (uint32_t part : l.parts()) {
          for (uint32_t j = 0; j < part; ++j) v.push_back(val);
          ++val;
        }
        while (v.size() < n) v.push_back(0);
        CAPTURE(n);
        CAPTURE(l.to_string());
        CHECK(orbit_size_x(l, n) == signed_orbit_size(v));
        // gamma = zeta * prod k_i! * (n-m)!
        uint64_t extra = factorial(n - m);
        for (auto [mi, ki] : l.groups()) extra *= factorial(ki);
        CHECK(gamma_count(l, n) == zeta(l, n) * extra);
        CHECK(placement_count(l, n) * (extra / factorial(n - m)) == zeta(l, n));
      }
}

TEST_CASE("bound column") {
  struct Row {
    uint32_t n, s, d;
    uint64_t nC;
  };
  const Row rows[] = {{3, 1, 8, 240},   {3, 2, 8, 960},    {4, 1, 8, 560},     {4, 2, 8, 2240},     {4, 3, 8, 8960},
                      {5, 1, 12, 7560}, {5, 2, 12, 45360}, {5, 3, 12, 272160}, {5, 4, 12, 1632960}};
  for (const auto& r : rows) {
    CAPTURE(r.n);
    CAPTURE(r.s);
    CHECK(bound_nC(r.n, r.s, r.d) == r.nC);
    auto b = bounds(r.n, r.s, r.d);
    CHECK(b.nC == r.n * b.C);
  }
  CHECK_THROWS_AS(bounds(3, 1, 7), std::invalid_argument);
  CHECK_THROWS_AS(bounds(3, 3, 8), std::invalid_argument);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), std::overflow_error);
}
