#pragma once

// Systems of B_n-invariant polynomials and the substitutions that move them
// between x-space and squared coordinates.

#include <functional>
#include <string>
#include <vector>

#include "hyperoct/multipoly.hpp"

namespace hyperoct {

class InvarianceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The three generators of B_n used for invariance checks.
enum class BnGenerator { kSwap12, kCycle, kNegate1 };

// Image of p under the coordinate action of the generator.
template <class K>
MultiPoly<K> apply_generator(const MultiPoly<K>& p, BnGenerator g) {
  size_t n = p.nvars();
  const K& f = p.field();
  std::vector<MultiPoly<K>> img;
  for (size_t i = 0; i < n; ++i) img.push_back(MultiPoly<K>::variable(f, n, i));
  switch (g) {
    case BnGenerator::kSwap12:
      if (n >= 2) std::swap(img[0], img[1]);
      break;
    case BnGenerator::kCycle:
      for (size_t i = 0; i < n; ++i) img[i] = MultiPoly<K>::variable(f, n, (i + 1) % n);
      break;
    case BnGenerator::kNegate1:
      img[0] = -img[0];
      break;
  }
  return p.substitute(img, n);
}

template <class K>
bool is_bn_invariant(const MultiPoly<K>& p) {
  for (auto g : {BnGenerator::kSwap12, BnGenerator::kCycle, BnGenerator::kNegate1})
    if (!(apply_generator(p, g) == p)) return false;
  return true;
}

// p(x) = q(x_1^2, ..., x_n^2); returns q. Throws on an odd exponent.
template <class K>
MultiPoly<K> rewrite_squares(const MultiPoly<K>& p) {
  std::vector<typename MultiPoly<K>::Term> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial h;
    for (size_t i = 0; i < p.nvars(); ++i) {
      if (m[i] % 2) throw InvarianceError("odd exponent; polynomial is not a function of the squares");
      h.set(i, m[i] / 2);
    }
    out.emplace_back(h, c);
  }
  return MultiPoly<K>(p.field(), p.nvars(), std::move(out));
}

// Inverse of rewrite_squares: z_i -> x_i^2.
template <class K>
MultiPoly<K> substitute_squares(const MultiPoly<K>& q) {
  std::vector<typename MultiPoly<K>::Term> out;
  for (const auto& [m, c] : q.terms()) {
    Monomial h;
    for (size_t i = 0; i < q.nvars(); ++i) h.set(i, 2 * m[i]);
    out.emplace_back(h, c);
  }
  return MultiPoly<K>(q.field(), q.nvars(), std::move(out));
}

// Sets x_{m+1} = ... = x_n = 0; the result lives in m variables.
template <class K>
MultiPoly<K> truncate(const MultiPoly<K>& p, size_t m) {
  if (m > p.nvars()) throw std::invalid_argument("truncate: m exceeds the number of variables");
  std::vector<typename MultiPoly<K>::Term> out;
  for (const auto& [mono, c] : p.terms()) {
    bool keep = true;
    for (size_t i = m; i < p.nvars(); ++i) keep = keep && mono[i] == 0;
    if (keep) out.emplace_back(mono, c);
  }
  return MultiPoly<K>::from_sorted(p.field(), m, std::move(out));
}

template <class K>
struct InvariantSystem {
  K field;
  uint32_t n = 0;
  uint32_t s = 0;
  std::vector<MultiPoly<K>> f;
  MultiPoly<K> phi;

  InvariantSystem(K field_, uint32_t n_, uint32_t s_, std::vector<MultiPoly<K>> f_, MultiPoly<K> phi_)
      : field(std::move(field_)), n(n_), s(s_), f(std::move(f_)), phi(std::move(phi_)) {}

  // max degree over f and phi
  uint32_t degree() const {
    uint32_t d = phi.total_degree();
    for (const auto& g : f) d = std::max(d, g.total_degree());
    return d;
  }

  // Throws InvarianceError unless 0 < s < n, every polynomial lives in n
  // variables and is B_n-invariant, and (for GF(p)) p > 2 n d.
  void validate() const {
    if (n == 0 || n > kMaxVars - 1) throw InvarianceError("n out of range");
    if (s == 0 || s >= n) throw InvarianceError("need 0 < s < n");
    if (f.size() != s) throw InvarianceError("expected s constraint polynomials");
    auto check = [&](const MultiPoly<K>& p, const std::string& name) {
      if (p.nvars() != n) throw InvarianceError(name + " has the wrong number of variables");
      if (!is_bn_invariant(p)) throw InvarianceError(name + " is not B_n-invariant");
    };
    for (size_t i = 0; i < f.size(); ++i) check(f[i], "f" + std::to_string(i + 1));
    check(phi, "phi");
    uint64_t p = field.characteristic();
    if (p != 0 && p <= uint64_t{2} * n * degree())
      throw InvarianceError("characteristic must exceed 2*n*d");
  }
};

// Random B_n-invariant polynomial of degree <= d: a random combination of
// products of the elementary symmetric polynomials in x_1^2, ..., x_n^2.
template <class K>
MultiPoly<K> random_invariant(const K& field, uint32_t n, uint32_t d, Rng& rng) {
  std::vector<MultiPoly<K>> eta;  // eta_i(x^2), degree 2i
  {
    std::vector<MultiPoly<K>> e{MultiPoly<K>::constant(field, n, field.one())};
    for (uint32_t i = 1; i <= n; ++i) e.push_back(MultiPoly<K>(field, n));
    for (uint32_t j = 0; j < n; ++j) {
      MultiPoly<K> sq = MultiPoly<K>::term(field, n, Monomial::var(j, 2), field.one());
      for (uint32_t i = j + 1; i >= 1; --i) e[i] = e[i] + e[i - 1] * sq;
    }
    eta.assign(e.begin() + 1, e.end());
  }
  MultiPoly<K> out(field, n);
  std::vector<uint32_t> a(n, 0);
  // Enumerate exponent vectors with sum 2 i a_i <= d.
  std::function<void(uint32_t, uint32_t, MultiPoly<K>)> rec = [&](uint32_t i, uint32_t used, MultiPoly<K> prod) {
    if (i == n) {
      out += prod.scale(field.random(rng));
      return;
    }
    MultiPoly<K> cur = prod;
    for (uint32_t e = 0; used + 2 * (i + 1) * e <= d; ++e) {
      rec(i + 1, used + 2 * (i + 1) * e, cur);
      cur = cur * eta[i];
    }
  };
  rec(0, 0, MultiPoly<K>::constant(field, n, field.one()));
  return out;
}

template <class K>
InvariantSystem<K> random_invariant_system(const K& field, uint32_t n, uint32_t s, uint32_t d, uint64_t seed) {
  if (d % 2) throw std::invalid_argument("d must be even");
  Rng rng(seed);
  std::vector<MultiPoly<K>> f;
  for (uint32_t i = 0; i < s; ++i) f.push_back(random_invariant(field, n, d, rng));
  MultiPoly<K> phi = random_invariant(field, n, d, rng);
  return InvariantSystem<K>(field, n, s, std::move(f), std::move(phi));
}

}  // namespace hyperoct
