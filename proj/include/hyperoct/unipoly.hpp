#pragma once

// Dense univariate polynomials over a field type F (see field.hpp).
// Coefficients are stored low degree first with no trailing zeros, so the
// zero polynomial has an empty coefficient vector.

#include <compare>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperoct/field.hpp"

namespace hyperoct {

// Polynomial degree; the zero polynomial has degree minus infinity.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  explicit Degree(size_t d) : finite_(true), d_(d) {}

  bool is_minus_infinity() const { return !finite_; }
  size_t value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial");
    return d_;
  }
  std::strong_ordering operator<=>(const Degree& o) const {
    if (finite_ != o.finite_) return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return d_ <=> o.d_;
  }
  bool operator==(const Degree& o) const = default;
  bool operator==(size_t d) const { return finite_ && d_ == d; }

 private:
  Degree() = default;
  bool finite_ = false;
  size_t d_ = 0;
};

template <class F>
class UniPoly {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  explicit UniPoly(F field) : field_(std::move(field)) {}
  UniPoly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const F& field, Elem c) { return UniPoly(field, {std::move(c)}); }
  static UniPoly monomial(const F& field, Elem c, size_t k) {
    std::vector<Elem> v(k + 1, field.zero());
    v[k] = std::move(c);
    return UniPoly(field, std::move(v));
  }
  static UniPoly variable(const F& field) { return monomial(field, field.one(), 1); }
  // Parses small integer coefficient lists, low degree first.
  static UniPoly from_ints(const F& field, std::initializer_list<int64_t> cs) {
    std::vector<Elem> v;
    for (int64_t c : cs) v.push_back(field.from_int(c));
    return UniPoly(field, std::move(v));
  }

  const F& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1); }
  // Number of stored coefficients: degree + 1, or 0 for the zero polynomial.
  size_t len() const { return c_.size(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Elem lead() const { return c_.empty() ? field_.zero() : c_.back(); }

  UniPoly operator+(const UniPoly& b) const {
    std::vector<Elem> r(std::max(c_.size(), b.c_.size()), field_.zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UniPoly(field_, std::move(r));
  }
  UniPoly operator-(const UniPoly& b) const {
    std::vector<Elem> r(std::max(c_.size(), b.c_.size()), field_.zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return UniPoly(field_, std::move(r));
  }
  UniPoly operator-() const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(-a);
    return UniPoly(field_, std::move(r));
  }
  UniPoly operator*(const UniPoly& b) const {
    if (c_.empty() || b.c_.empty()) return UniPoly(field_);
    std::vector<Elem> r(c_.size() + b.c_.size() - 1, field_.zero());
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * b.c_[j];
    return UniPoly(field_, std::move(r));
  }
  UniPoly scale(const Elem& a) const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * a);
    return UniPoly(field_, std::move(r));
  }
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

  // Multiplication by t^k.
  UniPoly shift_up(size_t k) const {
    if (c_.empty()) return *this;
    std::vector<Elem> r(k, field_.zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(field_, std::move(r));
  }
  // Exact division by t^k; the caller guarantees the low coefficients vanish.
  UniPoly shift_down(size_t k) const {
    if (k >= c_.size()) return UniPoly(field_);
    return UniPoly(field_, std::vector<Elem>(c_.begin() + k, c_.end()));
  }

  Elem eval(const Elem& x) const {
    Elem r = field_.zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(field_);
    std::vector<Elem> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_.from_int(static_cast<int64_t>(i)));
    return UniPoly(field_, std::move(r));
  }

  UniPoly monic() const {
    if (c_.empty()) return *this;
    return scale(c_.back().inv());
  }

  bool operator==(const UniPoly& b) const { return c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i].to_string() << ")";
      if (i > 0) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F field_;
  std::vector<Elem> c_;
};

template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divrem(const UniPoly<F>& a, const UniPoly<F>& b) {
  using E = typename F::Elem;
  if (b.is_zero()) throw DivisionByZero();
  const F& field = a.field();
  if (a.len() < b.len()) return {UniPoly<F>(field), a};
  std::vector<E> r = a.coeffs();
  std::vector<E> q(a.len() - b.len() + 1, field.zero());
  E inv_lead = b.lead().inv();
  const auto& bc = b.coeffs();
  size_t db = bc.size() - 1;
  for (size_t i = r.size(); i-- > db;) {
    E c = r[i] * inv_lead;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - c * bc[j];
  }
  r.resize(db);
  return {UniPoly<F>(field, std::move(q)), UniPoly<F>(field, std::move(r))};
}

template <class F>
UniPoly<F> operator%(const UniPoly<F>& a, const UniPoly<F>& b) {
  return divrem(a, b).second;
}

// Quotient; callers use it for exact divisions.
template <class F>
UniPoly<F> operator/(const UniPoly<F>& a, const UniPoly<F>& b) {
  return divrem(a, b).first;
}

template <class F>
UniPoly<F> mulmod(const UniPoly<F>& a, const UniPoly<F>& b, const UniPoly<F>& m) {
  return (a * b) % m;
}

template <class F>
UniPoly<F> powmod(UniPoly<F> base, const mpz_class& e, const UniPoly<F>& m) {
  UniPoly<F> r = UniPoly<F>::constant(base.field(), base.field().one()) % m;
  base = base % m;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m);
  }
  return r;
}

// Monic gcd; gcd(0, 0) = 0.
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    UniPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
struct XgcdResult {
  UniPoly<F> g, s, t;  // s*a + t*b = g, g monic
};

template <class F>
XgcdResult<F> xgcd(const UniPoly<F>& a, const UniPoly<F>& b) {
  const F& field = a.field();
  UniPoly<F> r0 = a, r1 = b;
  UniPoly<F> s0 = UniPoly<F>::constant(field, field.one()), s1(field);
  UniPoly<F> t0(field), t1 = UniPoly<F>::constant(field, field.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = r0.lead().inv();
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

// Inverse of a modulo m; throws DivisionByZero when gcd(a, m) != 1.
template <class F>
UniPoly<F> invmod(const UniPoly<F>& a, const UniPoly<F>& m) {
  auto r = xgcd(a % m, m);
  if (r.g.len() != 1) throw DivisionByZero();
  return r.s % m;
}

// Chinese remaindering for coprime moduli: the unique c mod m1*m2 with
// c = a1 mod m1 and c = a2 mod m2.
template <class F>
UniPoly<F> crt(const UniPoly<F>& a1, const UniPoly<F>& m1, const UniPoly<F>& a2, const UniPoly<F>& m2) {
  UniPoly<F> e = invmod(m1, m2);
  UniPoly<F> h = mulmod(a2 - a1, e, m2);
  return (a1 + m1 * h) % (m1 * m2);
}

template <class F>
void require_char_exceeds(const F& field, size_t deg, const char* what) {
  uint64_t p = field.characteristic();
  if (p != 0 && p <= deg) throw std::invalid_argument(std::string(what) + ": characteristic must exceed the degree");
}

template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& f) {
  if (f.is_constant()) return f.is_zero() ? f : UniPoly<F>::constant(f.field(), f.field().one());
  require_char_exceeds(f.field(), f.len() - 1, "squarefree_part");
  return (f / gcd(f, f.derivative())).monic();
}

template <class F>
bool is_squarefree(const UniPoly<F>& f) {
  if (f.is_constant()) return !f.is_zero();
  return gcd(f, f.derivative()).len() == 1;
}

template <class F>
struct MultiplicityDecomposition {
  size_t t_valuation = 0;
  // (p_i, multiplicity) with monic squarefree p_i, pairwise coprime,
  // none divisible by t, multiplicities strictly increasing.
  std::vector<std::pair<UniPoly<F>, size_t>> parts;
};

// Writes q = lead * t^d * prod p_i^{mult_i} using Yun's algorithm.
template <class F>
MultiplicityDecomposition<F> multiplicity_decomposition(const UniPoly<F>& q) {
  if (q.is_zero()) throw std::invalid_argument("multiplicity_decomposition of the zero polynomial");
  require_char_exceeds(q.field(), q.len() - 1, "multiplicity_decomposition");
  MultiplicityDecomposition<F> out;
  while (q.coeff(out.t_valuation).is_zero()) ++out.t_valuation;
  UniPoly<F> f = q.shift_down(out.t_valuation).monic();
  if (f.is_constant()) return out;
  UniPoly<F> df = f.derivative();
  UniPoly<F> a0 = gcd(f, df);
  UniPoly<F> b = f / a0;
  UniPoly<F> c = df / a0;
  UniPoly<F> d = c - b.derivative();
  for (size_t i = 1; !b.is_constant(); ++i) {
    UniPoly<F> a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (!a.is_constant()) out.parts.emplace_back(std::move(a), i);
  }
  return out;
}

}  // namespace hyperoct
