#pragma once

// Modular images of rational data and rational reconstruction.

#include <optional>
#include <vector>

#include "hyperoct/field.hpp"

namespace hyperoct {

inline std::optional<Fp> reduce_mod(const Rational& a, const PrimeField& f) {
  const mpq_class& q = a.value();
  Fp den = f.from_mpz(q.get_den());
  if (den.is_zero()) return std::nullopt;
  return f.from_mpz(q.get_num()) / den;
}

// n/d with n = a d mod m, |n|, |d| <= sqrt(m/2), if it exists.
inline std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

// Primes just below 2^31, in decreasing order.
class PrimeSequence {
 public:
  uint32_t next() {
    while (!is_prime_u32(cur_)) --cur_;
    return cur_--;
  }

 private:
  uint32_t cur_ = 2147483647u;
};

// Chinese remaindering of residue vectors over growing moduli.
class ModularLifter {
 public:
  void add(uint32_t p, const std::vector<Fp>& residues) {
    if (values_.empty()) {
      for (const auto& r : residues) values_.push_back(r.value());
      modulus_ = p;
      return;
    }
    mpz_class minv;
    mpz_class pp(p);
    mpz_class mm = modulus_ % pp;
    mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pp.get_mpz_t());
    for (size_t i = 0; i < values_.size(); ++i) {
      mpz_class diff = (mpz_class(residues[i].value()) - values_[i] % pp) % pp;
      if (diff < 0) diff += pp;
      mpz_class h = (diff * minv) % pp;
      values_[i] += modulus_ * h;
    }
    modulus_ *= pp;
  }

  std::optional<std::vector<mpq_class>> reconstruct() const {
    std::vector<mpq_class> out;
    for (const auto& v : values_) {
      auto q = rational_reconstruct(v, modulus_);
      if (!q) return std::nullopt;
      out.push_back(*q);
    }
    return out;
  }

 private:
  std::vector<mpz_class> values_;
  mpz_class modulus_ = 1;
};

}  // namespace hyperoct
