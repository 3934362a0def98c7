#pragma once

// Buchberger's algorithm (grevlex, normal selection strategy, Gebauer-Moller
// pair criteria) returning the reduced Groebner basis.

#include <algorithm>
#include <vector>

#include "hyperoct/multipoly.hpp"

namespace hyperoct {

// Full reduction of p by the polynomials in g (any order).
template <class F>
MultiPoly<F> normal_form(const MultiPoly<F>& p, const std::vector<MultiPoly<F>>& g) {
  using Term = typename MultiPoly<F>::Term;
  const F& field = p.field();
  size_t n = p.nvars();
  std::vector<Term> rem;
  std::vector<Term> cur = p.terms();
  size_t pos = 0;
  while (pos < cur.size()) {
    const Monomial lm = cur[pos].first;
    const MultiPoly<F>* div = nullptr;
    for (const auto& q : g)
      if (!q.is_zero() && q.lead_monomial().divides(lm)) {
        div = &q;
        break;
      }
    if (!div) {
      rem.push_back(cur[pos++]);
      continue;
    }
    auto c = -(cur[pos].second / div->lead_coeff());
    MultiPoly<F> tail = MultiPoly<F>::from_sorted(field, n, std::vector<Term>(cur.begin() + pos, cur.end()));
    cur = tail.combine(*div, c, lm / div->lead_monomial()).terms();
    pos = 0;
  }
  return MultiPoly<F>::from_sorted(field, n, std::move(rem));
}

namespace detail {

struct Pair {
  size_t i, j;
  Monomial lcm;
};

}  // namespace detail

template <class F>
std::vector<MultiPoly<F>> groebner_basis(const std::vector<MultiPoly<F>>& gens) {
  using detail::Pair;
  std::vector<MultiPoly<F>> store;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::vector<MultiPoly<F>> current;  // active basis elements
  auto reducers = [&]() -> const std::vector<MultiPoly<F>>& { return current; };

  auto lm = [&](size_t i) -> const Monomial& { return store[i].lead_monomial(); };

  auto update = [&](MultiPoly<F> h) {
    size_t hi = store.size();
    store.push_back(std::move(h));
    active.push_back(true);
    const Monomial& lh = lm(hi);
    // Gebauer-Moller: among new pairs keep one per minimal lcm, then drop
    // those with coprime leading monomials (they reduce to zero).
    std::vector<Pair> cand;
    for (size_t g = 0; g < hi; ++g)
      if (active[g]) cand.push_back({g, hi, lm(g).lcm(lh)});
    std::vector<Pair> accepted;
    for (size_t a = 0; a < cand.size(); ++a) {
      bool keep = lm(cand[a].i).coprime(lh);
      if (!keep) {
        keep = true;
        for (size_t b = a + 1; b < cand.size() && keep; ++b)
          if (cand[b].lcm.divides(cand[a].lcm)) keep = false;
        for (size_t b = 0; b < accepted.size() && keep; ++b)
          if (accepted[b].lcm.divides(cand[a].lcm)) keep = false;
      }
      if (keep) accepted.push_back(cand[a]);
    }
    std::vector<Pair> fresh;
    for (const auto& p : accepted)
      if (!lm(p.i).coprime(lh)) fresh.push_back(p);
    // Old pairs made redundant by h.
    std::vector<Pair> old;
    for (const auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && !(lm(p.i).lcm(lh) == p.lcm) && !(lm(p.j).lcm(lh) == p.lcm);
      if (!drop) old.push_back(p);
    }
    pairs = std::move(old);
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
    for (size_t g = 0; g < hi; ++g)
      if (active[g] && lh.divides(lm(g))) active[g] = false;
    current.clear();
    for (size_t i = 0; i < store.size(); ++i)
      if (active[i]) current.push_back(store[i]);
  };


  std::vector<MultiPoly<F>> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(g.monic());
  if (input.empty()) return {};
  for (auto& g : input) {
    if (g.is_constant()) return {MultiPoly<F>::constant(g.field(), g.nvars(), g.field().one())};
  }
  std::sort(input.begin(), input.end(),
            [](const MultiPoly<F>& a, const MultiPoly<F>& b) { return grevlex_less(a.lead_monomial(), b.lead_monomial()); });
  for (auto& g : input) {
    MultiPoly<F> h = normal_form(g, reducers());
    if (h.is_zero()) continue;
    if (h.is_constant()) return {MultiPoly<F>::constant(h.field(), h.nvars(), h.field().one())};
    update(h.monic());
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first.
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [](const Pair& a, const Pair& b) { return grevlex_less(a.lcm, b.lcm); });
    Pair p = *it;
    pairs.erase(it);
    const MultiPoly<F>& a = store[p.i];
    const MultiPoly<F>& b = store[p.j];
    MultiPoly<F> s = a.mul_term(p.lcm / a.lead_monomial(), b.lead_coeff())
                         .combine(b, -a.lead_coeff(), p.lcm / b.lead_monomial());
    MultiPoly<F> h = normal_form(s, reducers());
    if (h.is_zero()) continue;
    if (h.is_constant()) return {MultiPoly<F>::constant(h.field(), h.nvars(), h.field().one())};
    update(h.monic());
  }

  // Interreduce to the reduced basis.
  std::vector<MultiPoly<F>> basis = current;
  std::vector<MultiPoly<F>> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].lead_monomial();
      const Monomial& mj = basis[j].lead_monomial();
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const MultiPoly<F>& a, const MultiPoly<F>& b) { return grevlex_less(a.lead_monomial(), b.lead_monomial()); });
  std::vector<MultiPoly<F>> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly<F>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const MultiPoly<F>& g = minimal[i];
    MultiPoly<F> lead = MultiPoly<F>::term(g.field(), g.nvars(), g.lead_monomial(), g.lead_coeff());
    MultiPoly<F> tail = normal_form(g - lead, others);
    reduced.push_back((lead + tail).monic());
  }
  return reduced;
}

}  // namespace hyperoct
