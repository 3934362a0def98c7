#pragma once

// Residue rings K[t]/(v) for squarefree v, used as fields by dynamic
// evaluation: a zero test or inversion that meets a proper zero divisor c
// throws Split{gcd(c, v)}, and split_evaluate reruns the computation on both
// factors. When v is known irreducible the ring is a genuine field
// (GF(p^e) for K = GF(p)) and no splitting can happen.

#include <algorithm>
#include <memory>
#include <vector>

#include "hyperoct/unipoly.hpp"

namespace hyperoct {

template <class K>
struct Split {
  UniPoly<K> factor;  // monic proper divisor of the modulus
};

namespace detail {
template <class K>
struct QuotientData {
  K base;
  UniPoly<K> modulus;
  bool irreducible;
};
}  // namespace detail

template <class K>
class QElem {
 public:
  using Data = detail::QuotientData<K>;

  QElem() = default;
  QElem(std::shared_ptr<const Data> d, UniPoly<K> r) : d_(std::move(d)), r_(std::move(r)) {}

  const UniPoly<K>& residue() const { return r_; }

  bool is_zero() const {
    if (r_.is_zero()) return true;
    if (d_->irreducible) return false;
    UniPoly<K> g = gcd(r_, d_->modulus);
    if (g.len() == 1) return false;
    throw Split<K>{std::move(g)};
  }
  QElem inv() const {
    if (r_.is_zero()) throw DivisionByZero();
    auto x = xgcd(r_, d_->modulus);
    if (x.g.len() != 1) throw Split<K>{std::move(x.g)};
    return {d_, x.s % d_->modulus};
  }

  QElem operator+(const QElem& b) const { return {d_, r_ + b.r_}; }
  QElem operator-(const QElem& b) const { return {d_, r_ - b.r_}; }
  QElem operator-() const { return {d_, -r_}; }
  QElem operator*(const QElem& b) const { return {d_, mulmod(r_, b.r_, d_->modulus)}; }
  QElem operator/(const QElem& b) const { return *this * b.inv(); }
  QElem& operator+=(const QElem& b) { return *this = *this + b; }
  QElem& operator-=(const QElem& b) { return *this = *this - b; }
  QElem& operator*=(const QElem& b) { return *this = *this * b; }
  // Residue equality; no zero-divisor test.
  bool operator==(const QElem& b) const { return r_ == b.r_; }

  std::string to_string() const { return "[" + r_.to_string("a") + "]"; }

 private:
  std::shared_ptr<const Data> d_;
  UniPoly<K> r_{K{}};
};

template <class K>
class QuotientField {
 public:
  using Elem = QElem<K>;
  using Base = K;

  QuotientField(UniPoly<K> modulus, bool known_irreducible = false) {
    if (modulus.len() < 2) throw std::invalid_argument("quotient modulus must have positive degree");
    K base = modulus.field();
    d_ = std::make_shared<const detail::QuotientData<K>>(
        detail::QuotientData<K>{base, modulus.monic(), known_irreducible});
  }

  const K& base() const { return d_->base; }
  const UniPoly<K>& modulus() const { return d_->modulus; }
  size_t degree() const { return d_->modulus.len() - 1; }
  bool is_field() const { return d_->irreducible; }
  uint64_t characteristic() const { return d_->base.characteristic(); }

  Elem zero() const { return {d_, UniPoly<K>(d_->base)}; }
  Elem one() const { return from_base(d_->base.one()); }
  Elem from_int(int64_t a) const { return from_base(d_->base.from_int(a)); }
  Elem from_string(std::string_view s) const { return from_base(d_->base.from_string(s)); }
  Elem from_base(typename K::Elem a) const { return {d_, UniPoly<K>::constant(d_->base, std::move(a))}; }
  Elem from_poly(const UniPoly<K>& r) const { return {d_, r % d_->modulus}; }
  Elem generator() const { return from_poly(UniPoly<K>::variable(d_->base)); }
  Elem random(Rng& rng) const {
    std::vector<typename K::Elem> c;
    for (size_t i = 0; i < degree(); ++i) c.push_back(d_->base.random(rng));
    return {d_, UniPoly<K>(d_->base, std::move(c))};
  }
  std::string name() const { return d_->base.name() + "[a]/(" + d_->modulus.to_string("a") + ")"; }
  bool operator==(const QuotientField& o) const { return d_ == o.d_ || d_->modulus == o.d_->modulus; }

 private:
  std::shared_ptr<const detail::QuotientData<K>> d_;
};

// Runs fn(QuotientField(w)) for w ranging over a splitting of v into
// coprime factors, splitting further whenever fn throws Split. Returns the
// (factor, result) pairs; the factors multiply to monic(v).
template <class K, class Fn>
auto split_evaluate(const UniPoly<K>& v, Fn&& fn) {
  using R = decltype(fn(std::declval<const QuotientField<K>&>()));
  std::vector<std::pair<UniPoly<K>, R>> out;
  std::vector<UniPoly<K>> work{v.monic()};
  while (!work.empty()) {
    UniPoly<K> w = std::move(work.back());
    work.pop_back();
    if (w.len() < 2) continue;
    QuotientField<K> field(w);
    try {
      out.emplace_back(w, fn(field));
    } catch (Split<K>& s) {
      UniPoly<K> g = s.factor.monic();
      work.push_back(w / g);
      work.push_back(std::move(g));
    }
  }
  return out;
}

// Lifts a polynomial over K[t]/(v) to coefficient residues.
template <class K>
std::vector<UniPoly<K>> residues_of(const UniPoly<QuotientField<K>>& g) {
  std::vector<UniPoly<K>> out;
  for (const auto& c : g.coeffs()) out.push_back(c.residue());
  return out;
}

template <class K>
struct D5Branch {
  UniPoly<K> modulus;
  UniPoly<QuotientField<K>> gcd;  // monic, over K[t]/(modulus)
};

// gcd of a and b over K[t]/(v) (v squarefree) by dynamic evaluation.
// Branches whose gcds have equal degree are recombined by Chinese
// remaindering, so the moduli are pairwise coprime, multiply to v, and the
// gcd degrees are distinct. Branches are ordered by decreasing gcd degree.
template <class K>
std::vector<D5Branch<K>> quotient_gcd_d5(const UniPoly<K>& v,
                                         const std::vector<UniPoly<K>>& a_residues,
                                         const std::vector<UniPoly<K>>& b_residues) {
  auto lift = [](const QuotientField<K>& f, const std::vector<UniPoly<K>>& rs) {
    std::vector<QElem<K>> c;
    for (const auto& r : rs) c.push_back(f.from_poly(r));
    return UniPoly<QuotientField<K>>(f, std::move(c));
  };
  auto raw = split_evaluate(v, [&](const QuotientField<K>& f) {
    return residues_of(gcd(lift(f, a_residues), lift(f, b_residues)));
  });
  // Group by degree and recombine.
  std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.second.size() > y.second.size(); });
  std::vector<D5Branch<K>> out;
  for (size_t i = 0; i < raw.size();) {
    UniPoly<K> m = raw[i].first;
    std::vector<UniPoly<K>> c = raw[i].second;
    size_t j = i + 1;
    for (; j < raw.size() && raw[j].second.size() == c.size(); ++j) {
      for (size_t l = 0; l < c.size(); ++l) c[l] = crt(c[l], m, raw[j].second[l], raw[j].first);
      m = m * raw[j].first;
    }
    QuotientField<K> f(m);
    out.push_back({m, lift(f, c)});
    i = j;
  }
  return out;
}

}  // namespace hyperoct
