#pragma once

// Incremental Gaussian elimination that remembers how every stored row was
// obtained from the inserted vectors, and Krylov sequences built on it.

#include <optional>
#include <vector>

#include "hyperoct/unipoly.hpp"

namespace hyperoct {

template <class F>
class Echelon {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  Echelon(F field, size_t dim) : field_(std::move(field)), dim_(dim) {}

  size_t rank() const { return rows_.size(); }
  size_t dim() const { return dim_; }

  // Coefficients c with v = sum c_i * (i-th inserted vector), if v lies in
  // the span.
  std::optional<Vec> express(Vec v) const {
    Vec combo(rows_.size(), field_.zero());
    reduce(v, combo);
    for (const auto& x : v)
      if (!x.is_zero()) return std::nullopt;
    return combo;
  }

  // Inserts v. When v depends on the stored vectors nothing is stored, the
  // function returns false and *dep (if given) receives the coefficients.
  bool insert(Vec v, Vec* dep = nullptr) {
    Vec combo(rows_.size() + 1, field_.zero());
    reduce(v, combo);
    size_t piv = 0;
    while (piv < v.size() && v[piv].is_zero()) ++piv;
    if (piv == v.size()) {
      if (dep) {
        combo.pop_back();
        *dep = std::move(combo);
      }
      return false;
    }
    Elem inv = v[piv].inv();
    for (auto& x : v) x = x * inv;
    Elem minus_inv = -inv;
    for (auto& x : combo) x = x * minus_inv;
    combo.back() = inv;
    rows_.push_back({std::move(v), piv, std::move(combo)});
    return true;
  }

 private:
  struct Row {
    Vec vec;  // vec[pivot] == 1, zero at the pivots of earlier rows
    size_t pivot;
    Vec combo;  // vec = sum combo_i * inserted_i
  };

  // v <- v - sum c_r row_r and combo += sum c_r combo_r, so that afterwards
  // (original v) = v + sum combo_i inserted_i.
  void reduce(Vec& v, Vec& combo) const {
    for (const auto& r : rows_) {
      Elem c = v[r.pivot];
      if (c.is_zero()) continue;
      for (size_t i = r.pivot; i < dim_; ++i) v[i] = v[i] - c * r.vec[i];
      for (size_t i = 0; i < r.combo.size(); ++i) combo[i] = combo[i] + c * r.combo[i];
    }
  }

  F field_;
  size_t dim_;
  std::vector<Row> rows_;
};

// Krylov sequence w, A w, A^2 w, ... until the first linear dependency.
// The result holds the minimal polynomial of A restricted to the cyclic
// subspace (monic) and the elimination state with w, ..., A^{deg-1} w
// inserted, so other vectors can be written as polynomials in A applied to w.
template <class F>
struct KrylovResult {
  UniPoly<F> minpoly;
  Echelon<F> basis;
};

template <class F, class Apply>
KrylovResult<F> krylov(const F& field, std::vector<typename F::Elem> w, Apply apply) {
  size_t dim = w.size();
  Echelon<F> ech(field, dim);
  std::vector<typename F::Elem> dep;
  for (;;) {
    std::vector<typename F::Elem> next = apply(w);
    if (!ech.insert(std::move(w), &dep)) break;
    w = std::move(next);
  }
  // A^k w = sum_{i<k} dep_i A^i w.
  std::vector<typename F::Elem> mp;
  for (auto& c : dep) mp.push_back(-c);
  mp.push_back(field.one());
  return {UniPoly<F>(field, std::move(mp)), std::move(ech)};
}

}  // namespace hyperoct
