#pragma once

// Rational univariate parametrizations of finite point sets and the set
// operations used across the solver. A parametrization (v, coords, beta)
// over K describes the points
//     { (coords_1(tau) / v'(tau), ..., coords_k(tau) / v'(tau)) : v(tau) = 0 }
// where v is monic squarefree, deg coords_j < deg v, and the linear form
// beta takes the value tau at the point attached to tau.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperoct/linalg.hpp"
#include "hyperoct/multipoly.hpp"
#include "hyperoct/quotient.hpp"

namespace hyperoct {

class SeparatingFormFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFiberConstant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormRetries = 5;

template <class K>
struct ZeroDimParam {
  using Elem = typename K::Elem;

  UniPoly<K> v;
  std::vector<UniPoly<K>> coords;
  std::vector<Elem> beta;
  uint64_t seed = 0;

  // Empty set in K^k.
  static ZeroDimParam empty(const K& field, size_t k) {
    ZeroDimParam r{UniPoly<K>::constant(field, field.one()), std::vector<UniPoly<K>>(k, UniPoly<K>(field)),
                   std::vector<Elem>(k, field.zero())};
    return r;
  }

  const K& field() const { return v.field(); }
  size_t degree() const { return v.len() - 1; }
  size_t dimension() const { return coords.size(); }
  bool is_empty() const { return degree() == 0; }
};

struct Validation {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

template <class K>
Validation validate_param(const ZeroDimParam<K>& r) {
  auto fail = [](std::string why) { return Validation{false, std::move(why)}; };
  if (r.v.is_zero()) return fail("v is zero");
  if (!(r.v.lead() == r.field().one())) return fail("v is not monic");
  if (r.beta.size() != r.coords.size()) return fail("beta and coordinates differ in length");
  for (const auto& c : r.coords)
    if (c.len() >= r.v.len() && !c.is_zero()) return fail("coordinate degree not below deg v");
  if (r.degree() == 0) return {};
  if (!is_squarefree(r.v)) return fail("v is not squarefree");
  UniPoly<K> lhs(r.field());
  for (size_t j = 0; j < r.coords.size(); ++j) lhs += r.coords[j].scale(r.beta[j]);
  UniPoly<K> rhs = (UniPoly<K>::variable(r.field()) * r.v.derivative()) % r.v;
  if (!(lhs % r.v == rhs)) return fail("linear form does not recover t");
  return {};
}

namespace detail {

template <class K>
std::vector<typename K::Elem> to_vec(const UniPoly<K>& p, size_t dim) {
  std::vector<typename K::Elem> v(dim, p.field().zero());
  for (size_t i = 0; i < p.len() && i < dim; ++i) v[i] = p.coeff(i);
  return v;
}

// w * t modulo the monic polynomial m of degree dim, on coefficient vectors.
template <class K>
void mul_by_t(std::vector<typename K::Elem>& w, const UniPoly<K>& m) {
  size_t dim = w.size();
  if (dim == 0) return;
  typename K::Elem top = w[dim - 1];
  for (size_t i = dim - 1; i > 0; --i) w[i] = w[i - 1];
  w[0] = m.field().zero();
  if (top.is_zero()) return;
  for (size_t i = 0; i < dim; ++i) w[i] = w[i] - top * m.coeff(i);
}

}  // namespace detail

inline Fp form_coefficient(const PrimeField& f, Rng& rng, int) {
  for (;;) {
    Fp c = f.random(rng);
    if (!c.is_zero()) return c;
  }
}

// Small nonzero integers; the range widens with each retry.
inline Rational form_coefficient(const RationalField& f, Rng& rng, int attempt) {
  int64_t bound = int64_t{8} << (2 * attempt);
  int64_t a = static_cast<int64_t>(draw_below(rng, 2 * bound)) - bound;
  return f.from_int(a >= 0 ? a + 1 : a);
}

template <class K>
std::vector<typename K::Elem> random_form(const K& f, size_t k, Rng& rng, int attempt) {
  std::vector<typename K::Elem> b;
  for (size_t i = 0; i < k; ++i) b.push_back(form_coefficient(f, rng, attempt));
  return b;
}

// Builds the parametrization of the image of the points of K[t]/(v) under
// the map whose coordinate functions are vals (residues mod v), using the
// form beta. Returns nullopt when beta does not separate the image points.
template <class K>
std::optional<ZeroDimParam<K>> param_from_values(const UniPoly<K>& v, const std::vector<UniPoly<K>>& vals,
                                                 const std::vector<typename K::Elem>& beta) {
  const K& field = v.field();
  size_t dim = v.len() - 1;
  if (dim == 0) {
    auto r = ZeroDimParam<K>::empty(field, vals.size());
    r.beta = beta;
    return r;
  }
  UniPoly<K> s(field);
  for (size_t j = 0; j < vals.size(); ++j) s += vals[j].scale(beta[j]);
  s = s % v;
  auto kr = krylov(field, detail::to_vec(UniPoly<K>::constant(field, field.one()), dim),
                   [&](const std::vector<typename K::Elem>& w) {
                     return detail::to_vec(mulmod(UniPoly<K>(field, w), s, v), dim);
                   });
  UniPoly<K> mu = kr.minpoly;
  UniPoly<K> dmu = mu.derivative();
  ZeroDimParam<K> out{mu, {}, beta};
  for (const auto& x : vals) {
    auto c = kr.basis.express(detail::to_vec(x % v, dim));
    if (!c) return std::nullopt;
    out.coords.push_back((UniPoly<K>(field, *c) * dmu) % mu);
  }
  return out;
}

// Coordinate functions x_j = coords_j / v' as residues mod v.
template <class K>
std::vector<UniPoly<K>> point_values(const ZeroDimParam<K>& r) {
  std::vector<UniPoly<K>> out;
  if (r.degree() == 0) {
    out.assign(r.dimension(), UniPoly<K>(r.field()));
    return out;
  }
  UniPoly<K> inv = invmod(r.v.derivative(), r.v);
  for (const auto& c : r.coords) out.push_back(mulmod(c, inv, r.v));
  return out;
}

// Parametrization of the image points with a fresh random separating form.
template <class K>
ZeroDimParam<K> image_param(const UniPoly<K>& v, const std::vector<UniPoly<K>>& vals, Rng& rng) {
  for (int attempt = 0; attempt < kFormRetries; ++attempt) {
    auto r = param_from_values(v.monic(), vals, random_form(v.field(), vals.size(), rng, attempt));
    if (r) return *r;
  }
  throw NotFiberConstant("no separating form found for the image points");
}

template <class K>
std::optional<ZeroDimParam<K>> reparametrize(const ZeroDimParam<K>& r, const std::vector<typename K::Elem>& beta) {
  return param_from_values(r.v, point_values(r), beta);
}

// Image of the point set under the polynomial map F (polynomials in the k
// coordinates).
template <class K>
ZeroDimParam<K> pushforward(const ZeroDimParam<K>& r, const std::vector<MultiPoly<K>>& map, Rng& rng) {
  if (r.degree() == 0) return ZeroDimParam<K>::empty(r.field(), map.size());
  QuotientField<K> ring(r.v);
  std::vector<QElem<K>> pt;
  for (const auto& x : point_values(r)) pt.push_back(ring.from_poly(x));
  std::vector<UniPoly<K>> vals;
  for (const auto& f : map)
    vals.push_back(f.evaluate(ring, pt, [&](const typename K::Elem& c) { return ring.from_base(c); }).residue());
  return image_param(r.v, vals, rng);
}

// Subset of the points whose t-values are the roots of w (w | v).
template <class K>
ZeroDimParam<K> restrict_param(const ZeroDimParam<K>& r, const UniPoly<K>& w) {
  UniPoly<K> wm = w.monic();
  if (wm.len() < 2) {
    auto e = ZeroDimParam<K>::empty(r.field(), r.dimension());
    e.beta = r.beta;
    return e;
  }
  UniPoly<K> g = r.v / wm;
  UniPoly<K> ginv = invmod(g, wm);
  ZeroDimParam<K> out{wm, {}, r.beta, r.seed};
  for (const auto& c : r.coords) out.coords.push_back(mulmod(c, ginv, wm));
  return out;
}

// Same point sets (as subsets of K-bar^k).
template <class K>
bool same_point_set(const ZeroDimParam<K>& a, const ZeroDimParam<K>& b) {
  if (a.dimension() != b.dimension() || a.degree() != b.degree()) return false;
  if (a.degree() == 0) return true;
  auto rb = reparametrize(b, a.beta);
  if (!rb) return false;
  return rb->v == a.v && rb->coords == a.coords;
}

// Every point of small is a point of big.
template <class K>
bool contains_point_set(const ZeroDimParam<K>& big, const ZeroDimParam<K>& small) {
  if (big.dimension() != small.dimension()) return false;
  if (small.degree() == 0) return true;
  if (small.degree() > big.degree()) return false;
  auto rs = reparametrize(small, big.beta);
  if (!rs) return false;
  if (!(big.v % rs->v).is_zero()) return false;
  UniPoly<K> db = big.v.derivative(), ds = rs->v.derivative();
  for (size_t j = 0; j < big.dimension(); ++j)
    if (!((rs->coords[j] * db - big.coords[j] * ds) % rs->v).is_zero()) return false;
  return true;
}

namespace detail {

// Union of two parametrizations sharing beta whose t-values are disjoint.
template <class K>
ZeroDimParam<K> merge_disjoint(const ZeroDimParam<K>& a, const ZeroDimParam<K>& b) {
  if (a.degree() == 0) return b;
  if (b.degree() == 0) return a;
  ZeroDimParam<K> out{a.v * b.v, {}, a.beta, a.seed};
  for (size_t j = 0; j < a.dimension(); ++j)
    out.coords.push_back(crt(mulmod(a.coords[j], b.v, a.v), a.v, mulmod(b.coords[j], a.v, b.v), b.v));
  return out;
}

}  // namespace detail

// Union of point sets in K^k (duplicates merged).
template <class K>
ZeroDimParam<K> union_params(const std::vector<ZeroDimParam<K>>& parts, const K& field, size_t k, Rng& rng) {
  std::vector<const ZeroDimParam<K>*> nonempty;
  for (const auto& p : parts)
    if (p.degree() > 0) nonempty.push_back(&p);
  if (nonempty.empty()) return ZeroDimParam<K>::empty(field, k);
  if (nonempty.size() == 1) return *nonempty[0];
  for (int attempt = 0; attempt < kFormRetries; ++attempt) {
    auto beta = random_form(field, k, rng, attempt);
    std::optional<ZeroDimParam<K>> acc;
    bool ok = true;
    for (const auto* p : nonempty) {
      auto r = reparametrize(*p, beta);
      if (!r) {
        ok = false;
        break;
      }
      if (!acc) {
        acc = std::move(r);
        continue;
      }
      UniPoly<K> g = gcd(acc->v, r->v);
      if (g.len() > 1) {
        UniPoly<K> da = acc->v.derivative(), db = r->v.derivative();
        UniPoly<K> same = g;
        for (size_t j = 0; j < k; ++j) same = gcd(same, (acc->coords[j] * db - r->coords[j] * da) % g);
        if (!(same == g)) {
          ok = false;  // two distinct points share a t-value
          break;
        }
        r = restrict_param(*r, r->v / g);
      }
      acc = detail::merge_disjoint(*acc, *r);
    }
    if (ok) return *acc;
  }
  throw SeparatingFormFailure("no form separates the union");
}

// Coordinates permuted: output coordinate perm[j] is input coordinate j.
template <class K>
ZeroDimParam<K> permute_coords(const ZeroDimParam<K>& r, const std::vector<size_t>& perm) {
  ZeroDimParam<K> out = r;
  for (size_t j = 0; j < perm.size(); ++j) {
    out.coords[perm[j]] = r.coords[j];
    out.beta[perm[j]] = r.beta[j];
  }
  return out;
}

// Coordinates scaled by the given factors (nonzero), e.g. sign changes.
template <class K>
ZeroDimParam<K> scale_coords(const ZeroDimParam<K>& r, const std::vector<typename K::Elem>& factors) {
  ZeroDimParam<K> out = r;
  for (size_t j = 0; j < factors.size(); ++j) {
    out.coords[j] = r.coords[j].scale(factors[j]);
    out.beta[j] = r.beta[j] / factors[j];
  }
  return out;
}

// Points (x, y) with x a point of r and y a root of the monic polynomial
// h(y) = sum_l h_l(x) y^l, whose coefficients are residues mod v (the top
// one equal to 1). Every fiber must consist of distinct roots. The new
// coordinate is appended last.
template <class K>
ZeroDimParam<K> adjoin_root(const ZeroDimParam<K>& r, const std::vector<UniPoly<K>>& h, Rng& rng) {
  const K& field = r.field();
  size_t e = h.size() - 1;
  if (e == 0) throw std::invalid_argument("adjoin_root needs a polynomial of positive degree");
  size_t k = r.dimension();
  if (r.degree() == 0) {
    auto out = ZeroDimParam<K>::empty(field, k + 1);
    return out;
  }
  const UniPoly<K>& v = r.v;
  size_t dim = r.degree();
  size_t big = dim * e;
  using Vec = std::vector<typename K::Elem>;
  std::vector<Vec> coord_vecs;
  for (const auto& x : point_values(r)) {
    Vec w(big, field.zero());
    for (size_t i = 0; i < x.len(); ++i) w[i] = x.coeff(i);
    coord_vecs.push_back(std::move(w));
  }
  {
    Vec w(big, field.zero());
    if (e >= 2) {
      w[dim] = field.one();
    } else {
      UniPoly<K> y0 = (-h[0]) % v;
      for (size_t i = 0; i < y0.len(); ++i) w[i] = y0.coeff(i);
    }
    coord_vecs.push_back(std::move(w));
  }
  for (int attempt = 0; attempt < kFormRetries; ++attempt) {
    auto c = form_coefficient(field, rng, attempt);
    // s = t + c*y acting on vectors indexed by (power of y) * dim + (power of t).
    auto apply = [&](const Vec& w) {
      Vec tw = w;
      for (size_t j = 0; j < e; ++j) {
        Vec blk(tw.begin() + j * dim, tw.begin() + (j + 1) * dim);
        detail::mul_by_t(blk, v);
        std::copy(blk.begin(), blk.end(), tw.begin() + j * dim);
      }
      Vec yw(big, field.zero());
      for (size_t j = 0; j + 1 < e; ++j)
        for (size_t i = 0; i < dim; ++i) yw[(j + 1) * dim + i] = w[j * dim + i];
      UniPoly<K> over(field, Vec(w.begin() + (e - 1) * dim, w.end()));
      if (!over.is_zero())
        for (size_t l = 0; l < e; ++l) {
          if (h[l].is_zero()) continue;
          UniPoly<K> prod = mulmod(over, h[l], v);
          for (size_t i = 0; i < prod.len(); ++i) yw[l * dim + i] = yw[l * dim + i] - prod.coeff(i);
        }
      for (size_t i = 0; i < big; ++i) tw[i] = tw[i] + c * yw[i];
      return tw;
    };
    Vec one(big, field.zero());
    one[0] = field.one();
    auto kr = krylov(field, std::move(one), apply);
    if (kr.minpoly.len() - 1 != big) continue;
    UniPoly<K> dmu = kr.minpoly.derivative();
    ZeroDimParam<K> out{kr.minpoly, {}, r.beta, r.seed};
    out.beta.push_back(c);
    for (const auto& w : coord_vecs) {
      auto comb = kr.basis.express(w);
      out.coords.push_back((UniPoly<K>(field, *comb) * dmu) % kr.minpoly);
    }
    return out;
  }
  throw SeparatingFormFailure("adjoin_root: no separating element found");
}

}  // namespace hyperoct
