#pragma once

// Direct formulation of the critical point set, without symmetry: the
// constraints together with all maximal minors of the Jacobian of
// (f_1, ..., f_s, phi). Serves as the reference answer.

#include "hyperoct/invariants.hpp"
#include "hyperoct/zerodim.hpp"

namespace hyperoct {

template <class K>
std::vector<MultiPoly<K>> naive_system(const InvariantSystem<K>& sys) {
  std::vector<MultiPoly<K>> rows = sys.f;
  rows.push_back(sys.phi);
  std::vector<MultiPoly<K>> out = sys.f;
  for (auto& m : maximal_minors(jacobian(rows, sys.n)))
    if (!m.is_zero()) out.push_back(std::move(m));
  return out;
}

template <class K>
ZeroDimParam<K> naive_solve(const InvariantSystem<K>& sys, Rng& rng) {
  return solve_zero_dim(naive_system(sys), sys.field, sys.n, rng);
}

}  // namespace hyperoct
