#pragma once

// Sparse multivariate polynomials in grevlex order with x_1 > x_2 > ... .
// Terms are kept sorted by decreasing monomial with nonzero coefficients.

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hyperoct/field.hpp"

namespace hyperoct {

inline constexpr size_t kMaxVars = 16;

class Monomial {
 public:
  Monomial() { e_.fill(0); }
  static Monomial from_exponents(const std::vector<uint32_t>& ex) {
    if (ex.size() > kMaxVars) throw std::invalid_argument("too many variables");
    Monomial m;
    for (size_t i = 0; i < ex.size(); ++i) m.set(i, ex[i]);
    return m;
  }
  static Monomial var(size_t i, uint32_t power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  uint32_t operator[](size_t i) const { return e_[i]; }
  uint32_t degree() const { return deg_; }
  uint32_t mask() const { return mask_; }
  void set(size_t i, uint32_t value) {
    if (value > 0xFFFF) throw std::overflow_error("exponent overflow");
    deg_ = deg_ - e_[i] + value;
    e_[i] = static_cast<uint16_t>(value);
    if (value) mask_ |= 1u << i;
    else mask_ &= ~(1u << i);
  }

  bool divides(const Monomial& b) const {
    if ((mask_ & ~b.mask_) != 0 || deg_ > b.deg_) return false;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > b.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& b) const { return (mask_ & b.mask_) == 0; }
  Monomial operator*(const Monomial& b) const {
    Monomial r;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] || b.e_[i]) r.set(i, e_[i] + b.e_[i]);
    return r;
  }
  // Exact quotient; b must divide *this.
  Monomial operator/(const Monomial& b) const {
    Monomial r;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (e_[i]) r.set(i, e_[i] - b.e_[i]);
    return r;
  }
  Monomial lcm(const Monomial& b) const {
    Monomial r;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] || b.e_[i]) r.set(i, std::max(e_[i], b.e_[i]));
    return r;
  }
  bool operator==(const Monomial& b) const { return e_ == b.e_; }

  // Graded reverse lexicographic comparison.
  friend bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    for (size_t i = kMaxVars; i-- > 0;)
      if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i];
    return false;
  }

 private:
  std::array<uint16_t, kMaxVars> e_;
  uint32_t deg_ = 0;
  uint32_t mask_ = 0;
};

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

template <class F>
class MultiPoly {
 public:
  using Elem = typename F::Elem;
  using Term = std::pair<Monomial, Elem>;

  MultiPoly(F field, size_t nvars) : field_(std::move(field)), n_(nvars) {
    if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
  }
  // Terms in any order; like monomials are combined.
  MultiPoly(F field, size_t nvars, std::vector<Term> terms) : MultiPoly(std::move(field), nvars) {
    std::map<Monomial, Elem, GrevlexGreater> acc;
    for (auto& [m, c] : terms) {
      auto it = acc.find(m);
      if (it == acc.end()) acc.emplace(m, c);
      else it->second = it->second + c;
    }
    for (auto& [m, c] : acc)
      if (!c.is_zero()) t_.emplace_back(m, c);
  }

  static MultiPoly constant(const F& field, size_t nvars, Elem c) {
    return MultiPoly(field, nvars, {{Monomial(), std::move(c)}});
  }
  static MultiPoly variable(const F& field, size_t nvars, size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index");
    return MultiPoly(field, nvars, {{Monomial::var(i), field.one()}});
  }
  static MultiPoly term(const F& field, size_t nvars, Monomial m, Elem c) {
    return MultiPoly(field, nvars, {{m, std::move(c)}});
  }
  // Terms already sorted by decreasing monomial, distinct, nonzero.
  static MultiPoly from_sorted(const F& field, size_t nvars, std::vector<Term> terms) {
    MultiPoly r(field, nvars);
    r.t_ = std::move(terms);
    return r;
  }

  const F& field() const { return field_; }
  size_t nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.degree() == 0); }
  const Monomial& lead_monomial() const { return t_.front().first; }
  const Elem& lead_coeff() const { return t_.front().second; }
  uint32_t total_degree() const {
    uint32_t d = 0;
    for (auto& t : t_) d = std::max(d, t.first.degree());
    return d;
  }
  Elem constant_term() const {
    if (!t_.empty() && t_.back().first.degree() == 0) return t_.back().second;
    return field_.zero();
  }

  MultiPoly operator+(const MultiPoly& b) const { return combine(b, field_.one(), Monomial()); }
  MultiPoly operator-(const MultiPoly& b) const { return combine(b, -field_.one(), Monomial()); }
  MultiPoly operator-() const { return scale(-field_.one()); }
  MultiPoly operator*(const MultiPoly& b) const {
    std::map<Monomial, Elem, GrevlexGreater> acc;
    for (auto& [ma, ca] : t_)
      for (auto& [mb, cb] : b.t_) {
        Monomial m = ma * mb;
        Elem c = ca * cb;
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(m, c);
        else it->second = it->second + c;
      }
    MultiPoly r(field_, n_);
    for (auto& [m, c] : acc)
      if (!c.is_zero()) r.t_.emplace_back(m, c);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly scale(const Elem& a) const {
    MultiPoly r(field_, n_);
    if (a.is_zero()) return r;
    for (auto& [m, c] : t_) r.t_.emplace_back(m, c * a);
    return r;
  }
  MultiPoly mul_term(const Monomial& mono, const Elem& a) const {
    MultiPoly r(field_, n_);
    if (a.is_zero()) return r;
    for (auto& [m, c] : t_) r.t_.emplace_back(m * mono, c * a);
    return r;
  }
  // *this + a * mono * b in one merge pass.
  MultiPoly combine(const MultiPoly& b, const Elem& a, const Monomial& mono) const {
    MultiPoly r(field_, n_);
    r.t_.reserve(t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    bool shift = mono.degree() > 0;
    while (i < t_.size() || j < b.t_.size()) {
      if (j == b.t_.size()) {
        r.t_.push_back(t_[i++]);
        continue;
      }
      Monomial mb = shift ? b.t_[j].first * mono : b.t_[j].first;
      if (i == t_.size() || grevlex_less(t_[i].first, mb)) {
        r.t_.emplace_back(mb, b.t_[j].second * a);
        ++j;
      } else if (t_[i].first == mb) {
        Elem c = t_[i].second + b.t_[j].second * a;
        if (!c.is_zero()) r.t_.emplace_back(mb, c);
        ++i;
        ++j;
      } else {
        r.t_.push_back(t_[i++]);
      }
    }
    return r;
  }

  MultiPoly monic() const { return t_.empty() ? *this : scale(lead_coeff().inv()); }

  MultiPoly derivative(size_t var) const {
    std::vector<Term> out;
    for (auto& [m, c] : t_) {
      uint32_t e = m[var];
      if (e == 0) continue;
      Monomial d = m;
      d.set(var, e - 1);
      out.emplace_back(d, c * field_.from_int(e));
    }
    return MultiPoly(field_, n_, std::move(out));
  }

  // Evaluation at a point whose coordinates live in a ring G; embed maps
  // coefficients into G. Uses only ring operations.
  template <class G, class Embed>
  typename G::Elem evaluate(const G& ring, const std::vector<typename G::Elem>& pt, Embed embed) const {
    if (pt.size() < n_) throw std::invalid_argument("point has too few coordinates");
    std::vector<std::vector<typename G::Elem>> powers(n_);
    auto power = [&](size_t i, uint32_t e) -> const typename G::Elem& {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(ring.one());
      while (pw.size() <= e) pw.push_back(pw.back() * pt[i]);
      return pw[e];
    };
    typename G::Elem acc = ring.zero();
    for (auto& [m, c] : t_) {
      typename G::Elem term = embed(c);
      for (size_t i = 0; i < n_; ++i)
        if (m[i]) term = term * power(i, m[i]);
      acc = acc + term;
    }
    return acc;
  }
  Elem evaluate(const std::vector<Elem>& pt) const {
    return evaluate(field_, pt, [](const Elem& c) { return c; });
  }

  // Substitutes images[i] for x_i; the images share a ring of nvars_out variables.
  MultiPoly substitute(const std::vector<MultiPoly>& images, size_t nvars_out) const {
    if (images.size() < n_) throw std::invalid_argument("substitution needs an image per variable");
    std::vector<std::vector<MultiPoly>> powers(n_);
    MultiPoly acc(field_, nvars_out);
    for (auto& [m, c] : t_) {
      MultiPoly term = constant(field_, nvars_out, c);
      for (size_t i = 0; i < n_; ++i) {
        if (!m[i]) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(field_, nvars_out, field_.one()));
        while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
        term = term * pw[m[i]];
      }
      acc += term;
    }
    return acc;
  }

  // Same polynomial viewed in a ring with more (or equally many) variables.
  MultiPoly extend(size_t nvars_out) const {
    if (nvars_out < n_) throw std::invalid_argument("extend cannot drop variables");
    MultiPoly r(field_, nvars_out);
    r.t_ = t_;
    return r;
  }

  template <class G, class Fn>
  MultiPoly<G> map_coeffs(const G& target, Fn fn) const {
    std::vector<typename MultiPoly<G>::Term> out;
    for (auto& [m, c] : t_) out.emplace_back(m, fn(c));
    return MultiPoly<G>(target, n_, std::move(out));
  }

  bool operator==(const MultiPoly& b) const { return n_ == b.n_ && t_ == b.t_; }

  std::string to_string(const std::string& var = "x") const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    for (size_t k = 0; k < t_.size(); ++k) {
      if (k) os << " + ";
      os << "(" << t_[k].second.to_string() << ")";
      for (size_t i = 0; i < n_; ++i) {
        uint32_t e = t_[k].first[i];
        if (e) os << "*" << var << (i + 1) << (e > 1 ? "^" + std::to_string(e) : "");
      }
    }
    return os.str();
  }

 private:
  template <class>
  friend class MultiPoly;

  F field_;
  size_t n_;
  std::vector<Term> t_;
};

// Determinant of a square polynomial matrix by cofactor expansion.
template <class F>
MultiPoly<F> determinant(const std::vector<std::vector<MultiPoly<F>>>& a) {
  size_t k = a.size();
  if (k == 0) throw std::invalid_argument("empty matrix");
  if (k == 1) return a[0][0];
  if (k == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  MultiPoly<F> acc(a[0][0].field(), a[0][0].nvars());
  for (size_t j = 0; j < k; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly<F>>> minor;
    for (size_t i = 1; i < k; ++i) {
      std::vector<MultiPoly<F>> row;
      for (size_t l = 0; l < k; ++l)
        if (l != j) row.push_back(a[i][l]);
      minor.push_back(std::move(row));
    }
    MultiPoly<F> term = a[0][j] * determinant(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// All r x r minors of a (rows x cols) polynomial matrix with r = rows,
// in lexicographic order of the column subsets.
template <class F>
std::vector<MultiPoly<F>> maximal_minors(const std::vector<std::vector<MultiPoly<F>>>& a) {
  size_t r = a.size();
  size_t c = r ? a[0].size() : 0;
  std::vector<MultiPoly<F>> out;
  if (r == 0 || r > c) return out;
  std::vector<size_t> cols(r);
  for (size_t i = 0; i < r; ++i) cols[i] = i;
  for (;;) {
    std::vector<std::vector<MultiPoly<F>>> sub;
    for (size_t i = 0; i < r; ++i) {
      std::vector<MultiPoly<F>> row;
      for (size_t j : cols) row.push_back(a[i][j]);
      sub.push_back(std::move(row));
    }
    out.push_back(determinant(sub));
    size_t i = r;
    while (i-- > 0 && cols[i] == c - r + i) {
    }
    if (i == static_cast<size_t>(-1)) break;
    ++cols[i];
    for (size_t j = i + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
  }
  return out;
}

// Jacobian rows of polys with respect to the first nvars variables.
template <class F>
std::vector<std::vector<MultiPoly<F>>> jacobian(const std::vector<MultiPoly<F>>& polys, size_t nvars) {
  std::vector<std::vector<MultiPoly<F>>> j;
  for (auto& p : polys) {
    std::vector<MultiPoly<F>> row;
    for (size_t v = 0; v < nvars; ++v) row.push_back(p.derivative(v));
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace hyperoct
