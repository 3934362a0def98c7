#pragma once

// Shared inputs for the unit and acceptance tests.

#include "hyperoct/hyperoct.hpp"

namespace fixtures {

using namespace hyperoct;

// f = x1^4 + x2^4 + x3^4 - 18, phi = x1^2 x2^2 x3^2 - 3 (x1^2 + x2^2 + x3^2).
template <class K>
InvariantSystem<K> three_variable_example(const K& f) {
  auto x = [&](size_t i) { return MultiPoly<K>::variable(f, 3, i); };
  auto c = [&](int64_t a) { return MultiPoly<K>::constant(f, 3, f.from_int(a)); };
  auto sq = [&](size_t i) { return x(i) * x(i); };
  auto f1 = sq(0) * sq(0) + sq(1) * sq(1) + sq(2) * sq(2) - c(18);
  auto phi = sq(0) * sq(1) * sq(2) - c(3) * (sq(0) + sq(1) + sq(2));
  return InvariantSystem<K>(f, 3, 1, {f1}, phi);
}

template <class K>
ZeroDimParam<K> param(const K& f, std::initializer_list<int64_t> v, std::vector<std::vector<int64_t>> coords,
                      std::vector<int64_t> beta) {
  ZeroDimParam<K> r{UniPoly<K>::from_ints(f, v), {}, {}};
  for (auto& c : coords) {
    std::vector<typename K::Elem> cs;
    for (auto a : c) cs.push_back(f.from_int(a));
    r.coords.emplace_back(f, std::move(cs));
  }
  for (auto b : beta) r.beta.push_back(f.from_int(b));
  return r;
}

// Expected entries for the example: type and point set.
template <class K>
std::vector<std::pair<OrbitType, ZeroDimParam<K>>> three_variable_expected(const K& f) {
  return {
      {{Partition::from_parts({1, 2}), 0}, param(f, {3, 0, -8, 0, 1}, {{-36, 0, -4}, {-12, 0, 16}}, {0, 1})},
      {{Partition::from_parts({3}), 0}, param(f, {-6, 0, 1}, {{12}}, {1})},
      {{Partition::from_parts({2}), 1}, param(f, {-9, 0, 1}, {{18}}, {1})},
      {{Partition::from_parts({1}), 2}, param(f, {-18, 0, 1}, {{36}}, {1})},
  };
}

}  // namespace fixtures
