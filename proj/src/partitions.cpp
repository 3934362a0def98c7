#include "hyperoct/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

namespace hyperoct {

namespace {

uint64_t to_u64(const mpz_class& z) {
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64) throw std::overflow_error("count exceeds 64 bits");
  return static_cast<uint64_t>(mpz_get_ui(z.get_mpz_t()));
}

mpz_class mfact(uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class mbinom(uint64_t n, uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void check_n(const Partition& lambda, uint32_t n) {
  if (lambda.size() > n) throw std::invalid_argument("partition size exceeds n");
}

mpz_class zeta_z(const Partition& lambda, uint32_t n) {
  check_n(lambda, n);
  mpz_class den = mfact(n - lambda.size());
  for (auto [m, k] : lambda.groups()) {
    mpz_class f = mfact(m);
    for (uint32_t i = 0; i < k; ++i) den *= f;
  }
  return mfact(n) / den;
}

}  // namespace

Partition Partition::from_parts(std::vector<uint32_t> parts) {
  std::map<uint32_t, uint32_t> count;
  for (uint32_t p : parts) {
    if (p == 0) throw std::invalid_argument("partition parts must be positive");
    ++count[p];
  }
  Partition out;
  for (auto [m, k] : count) out.groups_.emplace_back(m, k);
  return out;
}

Partition Partition::from_groups(std::vector<Group> groups) {
  std::vector<uint32_t> parts;
  for (auto [m, k] : groups)
    for (uint32_t i = 0; i < k; ++i) parts.push_back(m);
  return from_parts(std::move(parts));
}

std::vector<uint32_t> Partition::parts() const {
  std::vector<uint32_t> out;
  for (auto [m, k] : groups_)
    for (uint32_t i = 0; i < k; ++i) out.push_back(m);
  return out;
}

uint32_t Partition::size() const {
  uint32_t s = 0;
  for (auto [m, k] : groups_) s += m * k;
  return s;
}

uint32_t Partition::length() const {
  uint32_t s = 0;
  for (auto [m, k] : groups_) s += k;
  return s;
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) return false;
  std::vector<uint32_t> fine = parts();
  std::sort(fine.rbegin(), fine.rend());
  std::vector<uint32_t> room = coarser.parts();
  // Assign each fine part (largest first) to a coarse block; blocks must end full.
  std::function<bool(size_t)> place = [&](size_t i) {
    if (i == fine.size()) return std::all_of(room.begin(), room.end(), [](uint32_t r) { return r == 0; });
    for (size_t j = 0; j < room.size(); ++j) {
      if (room[j] < fine[i]) continue;
      bool seen = false;
      for (size_t l = 0; l < j; ++l) seen = seen || room[l] == room[j];
      if (seen) continue;
      room[j] -= fine[i];
      bool ok = place(i + 1);
      room[j] += fine[i];
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < groups_.size(); ++i) os << (i ? " " : "") << groups_[i].first << "^" << groups_[i].second;
  os << ")";
  return os.str();
}

std::string OrbitType::to_string() const { return lambda.to_string() + "[" + std::to_string(zero_pad) + "]"; }

std::vector<Partition> partitions_of(uint32_t m) {
  std::vector<std::vector<uint32_t>> lists;
  std::vector<uint32_t> cur;
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t rest, uint32_t min_part) {
    if (rest == 0) {
      lists.push_back(cur);
      return;
    }
    for (uint32_t p = min_part; p <= rest; ++p) {
      if (rest - p != 0 && rest - p < p) continue;
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(m, 1);
  std::sort(lists.begin(), lists.end());
  std::vector<Partition> out;
  for (auto& l : lists) out.push_back(Partition::from_parts(l));
  return out;
}

bool is_extended_refinement(const OrbitType& finer, const OrbitType& coarser) {
  uint32_t mf = finer.lambda.size(), mc = coarser.lambda.size();
  if (mf < mc) return true;
  return mf == mc && finer.lambda.refines(coarser.lambda);
}

uint64_t set_partition_count(const Partition& lambda) {
  mpz_class den = 1;
  for (auto [m, k] : lambda.groups()) {
    mpz_class f = mfact(m);
    for (uint32_t i = 0; i < k; ++i) den *= f;
    den *= mfact(k);
  }
  return to_u64(mfact(lambda.size()) / den);
}

uint64_t zeta(const Partition& lambda, uint32_t n) { return to_u64(zeta_z(lambda, n)); }

uint64_t orbit_size_x(const Partition& lambda, uint32_t n) {
  mpz_class two_m;
  mpz_ui_pow_ui(two_m.get_mpz_t(), 2, lambda.size());
  return to_u64(zeta_z(lambda, n) * two_m);
}

uint64_t placement_count(const Partition& lambda, uint32_t n) {
  mpz_class z = zeta_z(lambda, n);
  for (auto [m, k] : lambda.groups()) z /= mfact(k);
  return to_u64(z);
}

uint64_t gamma_count(const Partition& lambda, uint32_t n) {
  mpz_class z = zeta_z(lambda, n) * mfact(n - lambda.size());
  for (auto [m, k] : lambda.groups()) z *= mfact(k);
  return to_u64(z);
}

uint64_t gamma_small(const Partition& lambda) { return uint64_t{1} << lambda.length(); }

BoundSet bounds(uint32_t n, uint32_t s, uint32_t d) {
  if (d % 2 != 0) throw std::invalid_argument("degree bound d must be even");
  if (n == 0 || s >= n) throw std::invalid_argument("bounds need 0 <= s < n");
  uint32_t h = d / 2;
  mpz_class hs;
  mpz_ui_pow_ui(hs.get_mpz_t(), h, s);
  BoundSet b;
  b.delta = h;
  mpz_class C = (h == 0) ? mpz_class(0) : mpz_class(hs * mbinom(n + h - 1, n));
  b.C = to_u64(C);
  b.nC = to_u64(C * n);
  b.E = to_u64(mpz_class(n) * (h + 1) * mbinom(n + h, n));
  b.Gamma = to_u64(mpz_class(n) * n * mbinom(n + h, h) + mpz_class(n) * n * n * n * mbinom(n, s + 1));
  return b;
}

uint64_t binomial(uint64_t n, uint64_t k) { return k > n ? 0 : to_u64(mbinom(n, k)); }
uint64_t factorial(uint64_t n) { return to_u64(mfact(n)); }

}  // namespace hyperoct
