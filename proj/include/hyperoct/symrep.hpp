#pragma once

// Critical points of an S_m-invariant system in squared coordinates z,
// stratified by the partition type of z, each stratum described by the
// elementary symmetric functions of its distinct block values.

#include "hyperoct/partitions.hpp"
#include "hyperoct/zerodim.hpp"

namespace hyperoct {

// Restriction of (q, phi) to the slice where z is constant on the blocks of
// lambda (parts in increasing order, k_i blocks of size m_i for each group),
// with one variable w_b per block.
template <class K>
struct SliceSystem {
  Partition lambda;
  size_t nvars = 0;  // k = length(lambda)
  std::vector<MultiPoly<K>> equations;
  std::optional<MultiPoly<K>> open;  // product of (w_b - w_c), b < c
};

// Block index of each of the m coordinates.
inline std::vector<size_t> block_layout(const Partition& lambda) {
  std::vector<size_t> out;
  size_t b = 0;
  for (auto [m, k] : lambda.groups())
    for (uint32_t j = 0; j < k; ++j, ++b)
      for (uint32_t l = 0; l < m; ++l) out.push_back(b);
  return out;
}

template <class K>
SliceSystem<K> slice_system(const std::vector<MultiPoly<K>>& q, const MultiPoly<K>& phi, const Partition& lambda) {
  const K& field = phi.field();
  size_t m = lambda.size();
  size_t k = lambda.length();
  if (phi.nvars() != m) throw std::invalid_argument("slice_system: partition size differs from the number of variables");
  std::vector<MultiPoly<K>> img;
  for (size_t b : block_layout(lambda)) img.push_back(MultiPoly<K>::variable(field, k, b));
  SliceSystem<K> out{lambda, k, {}, std::nullopt};
  std::vector<MultiPoly<K>> rows;
  for (const auto& g : q) {
    MultiPoly<K> gl = g.substitute(img, k);
    rows.push_back(gl);
    if (!gl.is_zero()) out.equations.push_back(gl);
  }
  rows.push_back(phi.substitute(img, k));
  if (k >= q.size() + 1)
    for (auto& minor : maximal_minors(jacobian(rows, k)))
      if (!minor.is_zero()) out.equations.push_back(std::move(minor));
  if (k >= 2) {
    MultiPoly<K> g = MultiPoly<K>::constant(field, k, field.one());
    for (size_t b = 0; b < k; ++b)
      for (size_t c = b + 1; c < k; ++c)
        g *= MultiPoly<K>::variable(field, k, b) - MultiPoly<K>::variable(field, k, c);
    out.open = std::move(g);
  }
  return out;
}

// Elementary symmetric polynomials of the block variables within each group,
// in group order: e_1, ..., e_{k_i} of group i.
template <class K>
std::vector<MultiPoly<K>> group_elementary(const K& field, const Partition& lambda) {
  size_t k = lambda.length();
  std::vector<MultiPoly<K>> out;
  size_t first = 0;
  for (auto [m, ki] : lambda.groups()) {
    std::vector<MultiPoly<K>> e{MultiPoly<K>::constant(field, k, field.one())};
    for (uint32_t j = 0; j < ki; ++j) {
      e.push_back(MultiPoly<K>(field, k));
      MultiPoly<K> w = MultiPoly<K>::variable(field, k, first + j);
      for (size_t i = e.size() - 1; i >= 1; --i) e[i] = e[i] + e[i - 1] * w;
    }
    out.insert(out.end(), e.begin() + 1, e.end());
    first += ki;
  }
  return out;
}

// From block values w to the symmetric coordinates epsilon of each group.
template <class K>
ZeroDimParam<K> compress(const ZeroDimParam<K>& r, const Partition& lambda, Rng& rng) {
  return pushforward(r, group_elementary(r.field(), lambda), rng);
}

template <class K>
struct SymStratum {
  Partition lambda;
  ZeroDimParam<K> param;  // epsilon coordinates
};

// Nonempty strata of the critical set of phi on {q = 0} in K^m (q and phi
// in m variables, symmetric), one per partition of m.
template <class K>
std::vector<SymStratum<K>> symmetric_representation(const std::vector<MultiPoly<K>>& q, const MultiPoly<K>& phi,
                                                    uint32_t m, Rng& rng) {
  std::vector<SymStratum<K>> out;
  for (const Partition& lambda : partitions_of(m)) {
    SliceSystem<K> sl = slice_system(q, phi, lambda);
    SolveOptions<K> opts;
    opts.open = sl.open;
    ZeroDimParam<K> w = solve_zero_dim(sl.equations, phi.field(), sl.nvars, rng, opts);
    if (w.degree() == 0) continue;
    out.push_back({lambda, compress(w, lambda, rng)});
  }
  return out;
}

}  // namespace hyperoct
