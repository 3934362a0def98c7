#pragma once

// Extension fields GF(p^e) = GF(p)[a]/(h), distinct-degree factorization and
// root finding over finite fields.

#include <vector>

#include "hyperoct/quotient.hpp"

namespace hyperoct {

using ExtField = QuotientField<PrimeField>;

inline mpz_class field_order(const PrimeField& f) { return mpz_class(f.modulus()); }

inline mpz_class field_order(const ExtField& f) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), f.base().modulus(), f.degree());
  return q;
}

// Ben-Or irreducibility test.
inline bool is_irreducible(const UniPoly<PrimeField>& h) {
  if (h.len() < 2) return false;
  const PrimeField& f = h.field();
  UniPoly<PrimeField> m = h.monic();
  UniPoly<PrimeField> x = UniPoly<PrimeField>::variable(f);
  UniPoly<PrimeField> xp = x;
  mpz_class p(f.modulus());
  size_t deg = m.len() - 1;
  for (size_t i = 1; 2 * i <= deg; ++i) {
    xp = powmod(xp, p, m);
    if (gcd(m, xp - x).len() != 1) return false;
  }
  return true;
}

inline UniPoly<PrimeField> random_irreducible(const PrimeField& f, size_t e, Rng& rng) {
  if (e == 0) throw std::invalid_argument("extension degree must be positive");
  for (;;) {
    std::vector<Fp> c;
    for (size_t i = 0; i < e; ++i) c.push_back(f.random(rng));
    c.push_back(f.one());
    UniPoly<PrimeField> h(f, std::move(c));
    if (is_irreducible(h)) return h;
  }
}

inline ExtField extension_field(const PrimeField& f, size_t e, Rng& rng) {
  if (e == 1) return ExtField(UniPoly<PrimeField>::variable(f), true);
  return ExtField(random_irreducible(f, e, rng), true);
}

// Distinct-degree factorization of a monic squarefree g: pairs (e, g_e) where
// g_e is the product of the irreducible factors of degree e.
inline std::vector<std::pair<size_t, UniPoly<PrimeField>>> distinct_degree_factorization(UniPoly<PrimeField> g) {
  const PrimeField& f = g.field();
  std::vector<std::pair<size_t, UniPoly<PrimeField>>> out;
  g = g.monic();
  UniPoly<PrimeField> x = UniPoly<PrimeField>::variable(f);
  UniPoly<PrimeField> h = x;
  mpz_class p(f.modulus());
  for (size_t e = 1; 2 * e <= g.len() - 1; ++e) {
    h = powmod(h, p, g);
    UniPoly<PrimeField> d = gcd(g, h - x);
    if (d.len() > 1) {
      out.emplace_back(e, d);
      g = g / d;
      h = h % g;
    }
  }
  if (g.len() > 1) out.emplace_back(g.len() - 1, g);
  return out;
}

namespace detail {

template <class L>
void equal_degree_roots(const UniPoly<L>& g, const mpz_class& half, Rng& rng, std::vector<typename L::Elem>& roots) {
  const L& field = g.field();
  if (g.len() < 2) return;
  if (g.len() == 2) {
    roots.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  UniPoly<L> one = UniPoly<L>::constant(field, field.one());
  for (;;) {
    UniPoly<L> base(field, {field.random(rng), field.one()});
    UniPoly<L> w = powmod(base, half, g) - one;
    UniPoly<L> d = gcd(g, w);
    if (d.len() > 1 && d.len() < g.len()) {
      equal_degree_roots(d, half, rng, roots);
      equal_degree_roots(g / d, half, rng, roots);
      return;
    }
  }
}

// T^q mod g for a field of order q = p^e, by e successive p-th powerings.
template <class L>
UniPoly<L> frobenius_x(const UniPoly<L>& g, uint32_t p, size_t e) {
  UniPoly<L> h = UniPoly<L>::variable(g.field()) % g;
  for (size_t i = 0; i < e; ++i) h = powmod(h, mpz_class(p), g);
  return h;
}

inline size_t ext_degree(const PrimeField&) { return 1; }
inline size_t ext_degree(const ExtField& f) { return f.degree(); }
inline uint32_t char_of(const PrimeField& f) { return f.modulus(); }
inline uint32_t char_of(const ExtField& f) { return f.base().modulus(); }

}  // namespace detail

// Distinct roots in L of a nonzero polynomial over a finite field L.
template <class L>
std::vector<typename L::Elem> roots_in_field(const UniPoly<L>& h, Rng& rng) {
  if (h.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const L& field = h.field();
  std::vector<typename L::Elem> roots;
  if (h.len() < 2) return roots;
  UniPoly<L> g = h.monic();
  UniPoly<L> xq = detail::frobenius_x(g, detail::char_of(field), detail::ext_degree(field));
  UniPoly<L> lin = gcd(g, xq - UniPoly<L>::variable(field));
  mpz_class half = (field_order(field) - 1) / 2;
  detail::equal_degree_roots(lin, half, rng, roots);
  return roots;
}

}  // namespace hyperoct
