#pragma once

// Zero-dimensional solving: Groebner basis, quotient algebra with
// multiplication matrices, radical, and a rational parametrization of the
// solution set, optionally away from a hypersurface g = 0.

#include <map>
#include <optional>
#include <queue>
#include <set>

#include "hyperoct/groebner.hpp"
#include "hyperoct/modular.hpp"
#include "hyperoct/param.hpp"

namespace hyperoct {

class PositiveDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// K[x]/I for a zero-dimensional ideal given by its reduced Groebner basis.
template <class K>
class QuotientAlgebra {
 public:
  using Elem = typename K::Elem;
  using Vec = std::vector<Elem>;

  QuotientAlgebra(const K& field, size_t nvars, std::vector<MultiPoly<K>> gb)
      : field_(field), n_(nvars), gb_(std::move(gb)) {
    for (size_t i = 0; i < n_; ++i) {
      bool pure = false;
      for (const auto& g : gb_) {
        const Monomial& m = g.lead_monomial();
        if (m[i] > 0 && m.degree() == m[i]) pure = true;
      }
      if (!pure) throw PositiveDimensional("the system has a positive-dimensional solution set");
    }
    build_staircase();
    build_multiplication();
  }

  size_t dim() const { return stairs_.size(); }
  size_t nvars() const { return n_; }
  const std::vector<MultiPoly<K>>& basis() const { return gb_; }
  const std::vector<Monomial>& staircase() const { return stairs_; }

  Vec unit() const {
    Vec v(dim(), field_.zero());
    v[index_.at(Monomial())] = field_.one();
    return v;
  }

  // x_i * w.
  Vec mul_var(size_t i, const Vec& w) const {
    Vec out(dim(), field_.zero());
    const auto& cols = mult_[i];
    for (size_t j = 0; j < w.size(); ++j) {
      if (w[j].is_zero()) continue;
      const Column& c = cols[j];
      if (c.unit >= 0) {
        out[c.unit] = out[c.unit] + w[j];
      } else {
        for (const auto& [idx, val] : c.sparse) out[idx] = out[idx] + w[j] * val;
      }
    }
    return out;
  }

  // (sum_i beta_i x_i) * w.
  Vec mul_linear(const std::vector<Elem>& beta, const Vec& w) const {
    Vec out(dim(), field_.zero());
    for (size_t i = 0; i < beta.size(); ++i) {
      if (beta[i].is_zero()) continue;
      Vec xi = mul_var(i, w);
      for (size_t j = 0; j < out.size(); ++j) out[j] = out[j] + beta[i] * xi[j];
    }
    return out;
  }

  // Coordinates of the normal form of p on the staircase.
  Vec coordinates(const MultiPoly<K>& p) const {
    Vec out(dim(), field_.zero());
    for (const auto& [m, c] : normal_form(p, gb_).terms()) out[index_.at(m)] = c;
    return out;
  }

  Vec variable(size_t i) const { return mul_var(i, unit()); }

  // The same algebra with coefficients sent through map (which returns
  // nullopt when a coefficient has no image); the basis is not carried over.
  template <class G, class Map>
  std::optional<QuotientAlgebra<G>> map_to(const G& target, Map map) const {
    QuotientAlgebra<G> out(target, n_);
    out.stairs_ = stairs_;
    for (const auto& [m, i] : index_) out.index_.emplace(m, i);
    out.mult_.assign(n_, std::vector<typename QuotientAlgebra<G>::Column>(dim()));
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < dim(); ++j) {
        const Column& c = mult_[i][j];
        auto& oc = out.mult_[i][j];
        oc.unit = c.unit;
        for (const auto& [r, val] : c.sparse) {
          auto img = map(val);
          if (!img) return std::nullopt;
          oc.sparse.emplace_back(r, *img);
        }
      }
    return out;
  }

 private:
  template <class>
  friend class QuotientAlgebra;

  QuotientAlgebra(const K& field, size_t nvars) : field_(field), n_(nvars) {}

  struct Column {
    int unit = -1;
    std::vector<std::pair<size_t, Elem>> sparse;
  };

  bool in_ideal_lead(const Monomial& m) const {
    for (const auto& g : gb_)
      if (g.lead_monomial().divides(m)) return true;
    return false;
  }

  void build_staircase() {
    std::set<Monomial, GrevlexGreater> seen;
    std::queue<Monomial> q;
    if (in_ideal_lead(Monomial())) return;
    q.push(Monomial());
    seen.insert(Monomial());
    while (!q.empty()) {
      Monomial m = q.front();
      q.pop();
      for (size_t i = 0; i < n_; ++i) {
        Monomial x = m * Monomial::var(i);
        if (seen.count(x) || in_ideal_lead(x)) continue;
        seen.insert(x);
        q.push(x);
      }
    }
    stairs_.assign(seen.begin(), seen.end());
    std::reverse(stairs_.begin(), stairs_.end());  // increasing
    for (size_t i = 0; i < stairs_.size(); ++i) index_.emplace(stairs_[i], i);
  }

  // Normal forms of border monomials in increasing order: a leading monomial
  // of the basis reduces to minus its tail; any other border monomial b is
  // x_j * b' for a smaller border monomial b'.
  void build_multiplication() {
    size_t d = dim();
    std::map<Monomial, Vec, GrevlexGreater> border;
    std::set<Monomial, GrevlexGreater> todo;
    for (const auto& m : stairs_)
      for (size_t i = 0; i < n_; ++i) {
        Monomial x = m * Monomial::var(i);
        if (!index_.count(x)) todo.insert(x);
      }
    std::map<Monomial, const MultiPoly<K>*, GrevlexGreater> leads;
    for (const auto& g : gb_) leads.emplace(g.lead_monomial(), &g);
    for (auto it = todo.rbegin(); it != todo.rend(); ++it) {
      const Monomial& b = *it;
      Vec nf(d, field_.zero());
      auto lt = leads.find(b);
      if (lt != leads.end()) {
        const auto& terms = lt->second->terms();
        for (size_t t = 1; t < terms.size(); ++t) nf[index_.at(terms[t].first)] = -terms[t].second;
      } else {
        bool done = false;
        for (size_t j = 0; j < n_ && !done; ++j) {
          if (b[j] == 0) continue;
          Monomial bp = b / Monomial::var(j);
          auto bit = border.find(bp);
          if (bit == border.end()) continue;
          for (size_t l = 0; l < d; ++l) {
            const Elem& c = bit->second[l];
            if (c.is_zero()) continue;
            Monomial xs = stairs_[l] * Monomial::var(j);
            auto si = index_.find(xs);
            if (si != index_.end()) {
              nf[si->second] = nf[si->second] + c;
            } else {
              const Vec& sub = border.at(xs);
              for (size_t r = 0; r < d; ++r)
                if (!sub[r].is_zero()) nf[r] = nf[r] + c * sub[r];
            }
          }
          done = true;
        }
        if (!done) nf = coordinates(MultiPoly<K>::term(field_, n_, b, field_.one()));
      }
      border.emplace(b, std::move(nf));
    }
    mult_.assign(n_, std::vector<Column>(d));
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < d; ++j) {
        Monomial x = stairs_[j] * Monomial::var(i);
        auto si = index_.find(x);
        Column& col = mult_[i][j];
        if (si != index_.end()) {
          col.unit = static_cast<int>(si->second);
        } else {
          const Vec& nf = border.at(x);
          for (size_t r = 0; r < d; ++r)
            if (!nf[r].is_zero()) col.sparse.emplace_back(r, nf[r]);
        }
      }
  }

  K field_;
  size_t n_;
  std::vector<MultiPoly<K>> gb_;
  std::vector<Monomial> stairs_;
  std::map<Monomial, size_t, GrevlexGreater> index_;
  std::vector<std::vector<Column>> mult_;
};

// Minimal polynomial of x_i acting on K[x]/I.
template <class K>
UniPoly<K> variable_minpoly(const QuotientAlgebra<K>& a, const K& field, size_t i) {
  return krylov(field, a.unit(), [&](const auto& w) { return a.mul_var(i, w); }).minpoly;
}

// Groebner basis of the radical of a zero-dimensional ideal (Seidenberg:
// adjoin the squarefree parts of the univariate minimal polynomials).
template <class K>
std::vector<MultiPoly<K>> radical_basis(const K& field, size_t nvars, std::vector<MultiPoly<K>> gb) {
  QuotientAlgebra<K> a(field, nvars, gb);
  if (a.dim() == 0) return gb;
  std::vector<MultiPoly<K>> extra;
  for (size_t i = 0; i < nvars; ++i) {
    UniPoly<K> mu = variable_minpoly(a, field, i);
    UniPoly<K> r = squarefree_part(mu);
    if (r.len() == mu.len()) continue;
    std::vector<typename MultiPoly<K>::Term> terms;
    for (size_t e = 0; e < r.len(); ++e)
      if (!r.coeff(e).is_zero()) terms.emplace_back(Monomial::var(i, static_cast<uint32_t>(e)), r.coeff(e));
    extra.push_back(MultiPoly<K>(field, nvars, std::move(terms)));
  }
  if (extra.empty()) return gb;
  gb.insert(gb.end(), extra.begin(), extra.end());
  return groebner_basis(gb);
}

// Rank of the trace bilinear form (x, y) -> Tr(m_{xy}) on K[x]/I; it equals
// the number of distinct solutions in characteristic zero or large
// characteristic. Quartic in dim(); meant for small checks.
template <class K>
size_t trace_form_rank(const QuotientAlgebra<K>& a, const K& field) {
  size_t d = a.dim();
  const auto& st = a.staircase();
  // Multiplication matrix of each staircase monomial, via products of variables.
  std::vector<std::vector<std::vector<typename K::Elem>>> mats;
  auto mul_mono = [&](const Monomial& m, std::vector<typename K::Elem> w) {
    for (size_t i = 0; i < a.nvars(); ++i)
      for (uint32_t e = 0; e < m[i]; ++e) w = a.mul_var(i, w);
    return w;
  };
  // trace of multiplication by monomial m
  auto trace_of = [&](const Monomial& m) {
    typename K::Elem tr = field.zero();
    for (size_t j = 0; j < d; ++j) {
      std::vector<typename K::Elem> e(d, field.zero());
      e[j] = field.one();
      tr = tr + mul_mono(m, e)[j];
    }
    return tr;
  };
  std::map<Monomial, typename K::Elem, GrevlexGreater> traces;
  Echelon<K> ech(field, d);
  for (size_t i = 0; i < d; ++i) {
    std::vector<typename K::Elem> row;
    for (size_t j = 0; j < d; ++j) {
      Monomial m = st[i] * st[j];
      auto it = traces.find(m);
      if (it == traces.end()) it = traces.emplace(m, trace_of(m)).first;
      row.push_back(it->second);
    }
    ech.insert(std::move(row));
  }
  return ech.rank();
}

// Parametrization over Q with the form beta, computed from images modulo
// word-size primes, lifted by Chinese remaindering and rational
// reconstruction, and accepted once the lift is stable and agrees with an
// independent prime. Returns nullopt if beta does not separate.
inline std::optional<ZeroDimParam<RationalField>> modular_parametrization(
    const QuotientAlgebra<RationalField>& a, const std::vector<Rational>& beta,
    const std::vector<std::vector<Rational>>& coord_vecs) {
  RationalField q;
  size_t d = a.dim();
  PrimeSequence primes;
  ModularLifter lifter;
  std::optional<std::vector<mpq_class>> prev;
  int good = 0, bad = 0;
  // Flattened image modulo p: minpoly coefficients 0..d-1, then each coordinate.
  auto image = [&](uint32_t p) -> std::optional<std::vector<Fp>> {
    PrimeField fp(p);
    auto red = [&](const Rational& x) { return reduce_mod(x, fp); };
    auto ap = a.map_to(fp, red);
    if (!ap) return std::nullopt;
    std::vector<Fp> bp;
    for (const auto& b : beta) {
      auto r = red(b);
      if (!r) return std::nullopt;
      bp.push_back(*r);
    }
    auto kr = krylov(fp, ap->unit(), [&](const auto& w) { return ap->mul_linear(bp, w); });
    if (kr.minpoly.len() - 1 != d) {
      ++bad;
      return std::nullopt;
    }
    std::vector<Fp> out;
    for (size_t i = 0; i < d; ++i) out.push_back(kr.minpoly.coeff(i));
    UniPoly<PrimeField> dmu = kr.minpoly.derivative();
    for (const auto& w : coord_vecs) {
      std::vector<Fp> wp;
      for (const auto& x : w) {
        auto r = red(x);
        if (!r) return std::nullopt;
        wp.push_back(*r);
      }
      auto c = kr.basis.express(wp);
      UniPoly<PrimeField> cp = (UniPoly<PrimeField>(fp, *c) * dmu) % kr.minpoly;
      for (size_t i = 0; i < d; ++i) out.push_back(cp.coeff(i));
    }
    return out;
  };
  auto build = [&](const std::vector<mpq_class>& flat) {
    std::vector<Rational> mu;
    for (size_t i = 0; i < d; ++i) mu.push_back(Rational(flat[i]));
    mu.push_back(q.one());
    ZeroDimParam<RationalField> r{UniPoly<RationalField>(q, std::move(mu)), {}, beta};
    for (size_t j = 0; j < coord_vecs.size(); ++j) {
      std::vector<Rational> c;
      for (size_t i = 0; i < d; ++i) c.push_back(Rational(flat[(j + 1) * d + i]));
      r.coords.emplace_back(q, std::move(c));
    }
    return r;
  };
  for (;;) {
    uint32_t p = primes.next();
    auto img = image(p);
    if (!img) {
      if (good == 0 && bad >= 3) return std::nullopt;
      continue;
    }
    lifter.add(p, *img);
    ++good;
    if (good % 4 != 0) continue;
    auto rec = lifter.reconstruct();
    if (rec && prev && *rec == *prev) {
      // Independent check on a fresh prime.
      uint32_t p2 = primes.next();
      auto img2 = image(p2);
      if (img2) {
        PrimeField f2(p2);
        bool agree = true;
        for (size_t i = 0; i < rec->size() && agree; ++i) {
          auto r = reduce_mod(Rational((*rec)[i]), f2);
          agree = r && *r == (*img2)[i];
        }
        if (agree) return build(*rec);
        lifter.add(p2, *img2);
        ++good;
      }
    }
    prev = rec;
  }
}

template <class K>
struct SolveOptions {
  // Saturate by this polynomial (solutions with g != 0 only).
  std::optional<MultiPoly<K>> open;
};

// Solutions of eqs (polynomials in n variables) as a parametrization over
// all n coordinates, using a random separating form drawn from rng.
template <class K>
ZeroDimParam<K> solve_zero_dim(const std::vector<MultiPoly<K>>& eqs, const K& field, size_t n, Rng& rng,
                               const SolveOptions<K>& opts = {}) {
  std::vector<MultiPoly<K>> sys;
  size_t nv = n;
  if (opts.open && !opts.open->is_constant()) {
    nv = n + 1;
    for (const auto& e : eqs) sys.push_back(e.extend(nv));
    MultiPoly<K> u = MultiPoly<K>::variable(field, nv, n);
    sys.push_back(u * opts.open->extend(nv) - MultiPoly<K>::constant(field, nv, field.one()));
  } else if (opts.open && opts.open->is_zero()) {
    return ZeroDimParam<K>::empty(field, n);
  } else {
    sys = eqs;
  }
  auto gb = groebner_basis(sys);
  if (gb.size() == 1 && gb[0].is_constant()) return ZeroDimParam<K>::empty(field, n);
  if (gb.empty()) throw PositiveDimensional("the system has a positive-dimensional solution set");
  gb = radical_basis(field, nv, std::move(gb));
  QuotientAlgebra<K> a(field, nv, gb);
  size_t d = a.dim();
  if (d == 0) return ZeroDimParam<K>::empty(field, n);
  std::vector<std::vector<typename K::Elem>> coord_vecs;
  for (size_t i = 0; i < n; ++i) coord_vecs.push_back(a.variable(i));
  for (int attempt = 0; attempt < kFormRetries; ++attempt) {
    auto beta = random_form(field, n, rng, attempt);
    if constexpr (std::is_same_v<K, RationalField>) {
      auto r = modular_parametrization(a, beta, coord_vecs);
      if (r) return *r;
      continue;
    }
    auto kr = krylov(field, a.unit(), [&](const auto& w) { return a.mul_linear(beta, w); });
    if (kr.minpoly.len() - 1 != d) continue;
    UniPoly<K> dmu = kr.minpoly.derivative();
    ZeroDimParam<K> out{kr.minpoly, {}, beta};
    for (const auto& w : coord_vecs) {
      auto c = kr.basis.express(w);
      out.coords.push_back((UniPoly<K>(field, *c) * dmu) % kr.minpoly);
    }
    return out;
  }
  throw SeparatingFormFailure("no separating linear form found");
}

}  // namespace hyperoct
