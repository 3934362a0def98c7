#pragma once

// Critical points of a B_n-invariant problem, described orbit type by orbit
// type. For a point of type (lambda, [n-m]) the stored coordinates are the
// elementary symmetric functions eps of the distinct squared values within
// each group of equal block size.

#include <map>

#include "hyperoct/invariants.hpp"
#include "hyperoct/symrep.hpp"

namespace hyperoct {

class DuplicateMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// q_i(T) = T^{k_i} - eps_{i,1} T^{k_i-1} + eps_{i,2} T^{k_i-2} - ...
template <class F>
std::vector<UniPoly<F>> group_polynomials(const F& field, const Partition& lambda,
                                          const std::vector<typename F::Elem>& eps) {
  std::vector<UniPoly<F>> out;
  size_t off = 0;
  for (auto [m, k] : lambda.groups()) {
    std::vector<typename F::Elem> c(k + 1, field.zero());
    c[k] = field.one();
    for (uint32_t j = 1; j <= k; ++j) c[k - j] = (j % 2) ? -eps[off + j - 1] : eps[off + j - 1];
    out.emplace_back(field, std::move(c));
    off += k;
  }
  return out;
}

template <class F>
struct FiberTypeResult {
  OrbitType type;
  std::vector<typename F::Elem> eps;  // symmetric coordinates for the new type
};

// Type of the points over eps when some block values coincide or vanish:
// the multiset of block values is read off prod q_i^{m_i}.
template <class F>
FiberTypeResult<F> fiber_type_core(const F& field, const Partition& lambda, uint32_t zero_pad,
                                   const std::vector<typename F::Elem>& eps) {
  if (eps.size() != lambda.length()) throw std::invalid_argument("fiber type: wrong number of coordinates");
  auto qs = group_polynomials(field, lambda, eps);
  UniPoly<F> q = UniPoly<F>::constant(field, field.one());
  size_t idx = 0;
  for (auto [m, k] : lambda.groups()) {
    for (uint32_t r = 0; r < m; ++r) q *= qs[idx];
    ++idx;
  }
  auto md = multiplicity_decomposition(q);
  std::vector<Partition::Group> groups;
  FiberTypeResult<F> out;
  for (const auto& [p, mult] : md.parts) {
    size_t u = p.len() - 1;
    groups.emplace_back(static_cast<uint32_t>(mult), static_cast<uint32_t>(u));
    for (size_t l = 1; l <= u; ++l) out.eps.push_back((l % 2) ? -p.coeff(u - l) : p.coeff(u - l));
  }
  out.type = OrbitType{Partition::from_groups(groups), zero_pad + static_cast<uint32_t>(md.t_valuation)};
  return out;
}

template <class K>
struct FiberType {
  Partition lambda;
  uint32_t zero_pad;
  std::vector<typename K::Elem> b;  // new symmetric coordinates followed by a trailing 0
};

// theta holds the k symmetric coordinates followed by a trailing 0.
template <class K>
FiberType<K> type_of_fiber_extended(const K& field, const Partition& lambda, uint32_t zero_pad,
                                    const std::vector<typename K::Elem>& theta) {
  if (theta.size() != lambda.length() + 1 || !theta.back().is_zero())
    throw std::invalid_argument("theta must have length k + 1 and end with 0");
  std::vector<typename K::Elem> eps(theta.begin(), theta.end() - 1);
  auto r = fiber_type_core(field, lambda, zero_pad, eps);
  r.eps.push_back(field.zero());
  return {r.type.lambda, r.type.zero_pad, std::move(r.eps)};
}

template <class K>
struct HyperEntry {
  OrbitType type;
  ZeroDimParam<K> param;
  uint32_t level = 0;  // number of free coordinates of the stratum it came from
};

// Splits the points of r (type lambda with zero_pad zeros, generically) by
// their actual orbit type. Output sorted by type.
template <class K>
std::vector<HyperEntry<K>> decompose_extended(const Partition& lambda, const ZeroDimParam<K>& r, uint32_t zero_pad,
                                              Rng& rng) {
  std::vector<HyperEntry<K>> out;
  if (r.degree() == 0) return out;
  UniPoly<K> dv_inv = invmod(r.v.derivative(), r.v);
  auto branches = split_evaluate(r.v, [&](const QuotientField<K>& a) {
    std::vector<QElem<K>> eps;
    for (const auto& c : r.coords) eps.push_back(a.from_poly(mulmod(c, dv_inv, r.v)));
    auto res = fiber_type_core(a, lambda, zero_pad, eps);
    std::vector<UniPoly<K>> vals;
    for (const auto& e : res.eps) vals.push_back(e.residue());
    return std::make_pair(res.type, vals);
  });
  std::map<OrbitType, std::pair<UniPoly<K>, std::vector<UniPoly<K>>>> grouped;
  for (auto& [w, tv] : branches) {
    auto& [type, vals] = tv;
    auto it = grouped.find(type);
    if (it == grouped.end()) {
      grouped.emplace(type, std::make_pair(w, vals));
      continue;
    }
    auto& [m, acc] = it->second;
    for (size_t j = 0; j < acc.size(); ++j) acc[j] = crt(acc[j], m, vals[j], w);
    m = m * w;
  }
  for (auto& [type, mv] : grouped) {
    auto& [m, vals] = mv;
    out.push_back({type, image_param(m, vals, rng), 0});
  }
  return out;
}

template <class K>
struct HyperRep {
  uint32_t n = 0;
  uint32_t s = 0;
  uint64_t seed = 0;
  std::vector<HyperEntry<K>> entries;

  size_t compressed_total() const {
    size_t t = 0;
    for (const auto& e : entries) t += e.param.degree();
    return t;
  }
};

// Number of points of the expansion of one entry in K-bar^n.
template <class K>
uint64_t expansion_count(const HyperEntry<K>& e, uint32_t n) {
  return e.param.degree() * orbit_size_x(e.type.lambda, n);
}

template <class K>
uint64_t expansion_count(const HyperRep<K>& rep) {
  uint64_t t = 0;
  for (const auto& e : rep.entries) t += expansion_count(e, rep.n);
  return t;
}

// Keeps the first entry of each orbit type. Entries of a type found again at
// a higher level describe a subset of the first one; with check set this is
// verified and DuplicateMismatch is thrown otherwise.
template <class K>
std::vector<HyperEntry<K>> remove_duplicates(const std::vector<HyperEntry<K>>& entries, bool check) {
  std::map<OrbitType, size_t> first;
  std::vector<HyperEntry<K>> out;
  for (const auto& e : entries) {
    auto it = first.find(e.type);
    if (it == first.end()) {
      first.emplace(e.type, out.size());
      out.push_back(e);
      continue;
    }
    if (check && !contains_point_set(out[it->second].param, e.param))
      throw DuplicateMismatch("entries for type " + e.type.to_string() + " from levels " +
                              std::to_string(out[it->second].level) + " and " + std::to_string(e.level) +
                              " are not nested");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.type < b.type; });
  return out;
}

struct CriticalOptions {
  bool check_duplicates = false;
};

template <class K>
HyperRep<K> critical_hyperoctahedral(const InvariantSystem<K>& sys, uint64_t seed, const CriticalOptions& opts = {}) {
  sys.validate();
  Rng rng(seed);
  std::vector<HyperEntry<K>> all;
  for (uint32_t m = sys.s; m <= sys.n; ++m) {
    std::vector<MultiPoly<K>> q;
    for (const auto& g : sys.f) {
      MultiPoly<K> t = rewrite_squares(truncate(g, m));
      if (t.is_zero())
        throw PositiveDimensional("a constraint vanishes identically on a coordinate subspace of dimension " +
                                  std::to_string(m));
      q.push_back(std::move(t));
    }
    MultiPoly<K> phi = rewrite_squares(truncate(sys.phi, m));
    for (auto& st : symmetric_representation(q, phi, m, rng))
      for (auto& e : decompose_extended(st.lambda, st.param, sys.n - m, rng)) {
        e.level = m;
        e.param.seed = seed;
        all.push_back(std::move(e));
      }
  }
  HyperRep<K> rep;
  rep.n = sys.n;
  rep.s = sys.s;
  rep.seed = seed;
  rep.entries = remove_duplicates(all, opts.check_duplicates);
  return rep;
}

// All placements of the blocks of lambda among n coordinates, as maps from
// canonical positions (blocks in group order, then zeros) to coordinates.
// Blocks of equal size are unordered: the first coordinate of each block
// increases within a group.
inline std::vector<std::vector<size_t>> block_placements(const Partition& lambda, uint32_t n) {
  std::vector<uint32_t> sizes;
  for (auto [m, k] : lambda.groups())
    for (uint32_t j = 0; j < k; ++j) sizes.push_back(m);
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<void(size_t, size_t, size_t)> rec = [&](size_t blk, size_t pos, size_t min_first) {
    if (blk == sizes.size()) {
      size_t p = pos;
      for (size_t c = 0; c < n; ++c)
        if (!used[c]) perm[p++] = c;
      out.push_back(perm);
      return;
    }
    size_t sz = sizes[blk];
    bool same_as_next = blk + 1 < sizes.size() && sizes[blk + 1] == sz;
    // first element: smallest unused coordinate above min_first
    std::vector<size_t> chosen;
    std::function<void(size_t)> pick = [&](size_t from) {
      if (chosen.size() == sz) {
        for (size_t i = 0; i < sz; ++i) perm[pos + i] = chosen[i];
        rec(blk + 1, pos + sz, same_as_next ? chosen[0] + 1 : 0);
        return;
      }
      for (size_t c = from; c < n; ++c) {
        if (used[c]) continue;
        if (chosen.empty() && c < min_first) continue;
        used[c] = true;
        chosen.push_back(c);
        pick(c + 1);
        chosen.pop_back();
        used[c] = false;
      }
    };
    pick(0);
  };
  rec(0, 0, 0);
  return out;
}

// The points of K-bar^n of one entry, in the canonical layout: block values
// a (roots of the group polynomials, in every order), then square roots.
template <class K>
ZeroDimParam<K> canonical_expansion(const HyperEntry<K>& e, uint32_t n, Rng& rng) {
  const Partition& lambda = e.type.lambda;
  const K& field = e.param.field();
  ZeroDimParam<K> p = e.param;
  size_t k = lambda.length();
  if (p.degree() == 0) return ZeroDimParam<K>::empty(field, n);
  // Adjoin the block values group by group.
  size_t off = 0;
  for (auto [m, ki] : lambda.groups()) {
    for (uint32_t j = 0; j < ki; ++j) {
      QuotientField<K> ring(p.v);
      std::vector<QElem<K>> pt;
      for (const auto& x : point_values(p)) pt.push_back(ring.from_poly(x));
      std::vector<QElem<K>> eps(pt.begin() + off, pt.begin() + off + ki);
      Partition single = Partition::from_groups({{m, ki}});
      UniPoly<QuotientField<K>> h = group_polynomials(ring, single, eps)[0];
      for (uint32_t l = 0; l < j; ++l) {
        std::vector<QElem<K>> lin{-pt[k + off + l], ring.one()};
        h = h / UniPoly<QuotientField<K>>(ring, lin);
      }
      p = adjoin_root(p, residues_of(h), rng);
    }
    off += ki;
  }
  // Square roots of each block value, once per coordinate of the block.
  size_t blk = 0;
  for (auto [m, ki] : lambda.groups())
    for (uint32_t j = 0; j < ki; ++j, ++blk)
      for (uint32_t l = 0; l < m; ++l) {
        std::vector<UniPoly<K>> vals = point_values(p);
        p = adjoin_root(p, {-vals[k + blk], UniPoly<K>(field), UniPoly<K>::constant(field, field.one())}, rng);
      }
  size_t total = p.dimension();
  std::vector<MultiPoly<K>> proj;
  for (size_t i = 2 * k; i < total; ++i) proj.push_back(MultiPoly<K>::variable(field, total, i));
  while (proj.size() < n) proj.push_back(MultiPoly<K>(field, total));
  return pushforward(p, proj, rng);
}

template <class K>
ZeroDimParam<K> entry_expansion(const HyperEntry<K>& e, uint32_t n, Rng& rng) {
  ZeroDimParam<K> c = canonical_expansion(e, n, rng);
  std::vector<ZeroDimParam<K>> parts;
  for (const auto& perm : block_placements(e.type.lambda, n)) parts.push_back(permute_coords(c, perm));
  return union_params(parts, e.param.field(), n, rng);
}

// The full critical set in K-bar^n as one parametrization.
template <class K>
ZeroDimParam<K> expansion_param(const HyperRep<K>& rep, const K& field, Rng& rng) {
  std::vector<ZeroDimParam<K>> parts;
  for (const auto& e : rep.entries) parts.push_back(entry_expansion(e, rep.n, rng));
  return union_params(parts, field, rep.n, rng);
}

}  // namespace hyperoct
