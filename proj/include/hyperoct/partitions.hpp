#pragma once

// Integer partitions, hyperoctahedral orbit types and the combinatorial
// counts attached to them.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

// A partition stored as groups (m_i, k_i): k_i parts equal to m_i, with
// m_1 < m_2 < ... and every k_i > 0. The empty partition has size 0.
class Partition {
 public:
  using Group = std::pair<uint32_t, uint32_t>;

  Partition() = default;
  static Partition from_parts(std::vector<uint32_t> parts);
  static Partition from_groups(std::vector<Group> groups);

  const std::vector<Group>& groups() const { return groups_; }
  // Parts in increasing order.
  std::vector<uint32_t> parts() const;
  uint32_t size() const;    // m = sum k_i m_i
  uint32_t length() const;  // k = sum k_i
  // True when the parts of *this can be grouped into blocks whose sums are
  // the parts of coarser.
  bool refines(const Partition& coarser) const;

  auto operator<=>(const Partition& o) const { return parts() <=> o.parts(); }
  bool operator==(const Partition& o) const { return groups_ == o.groups_; }

  // Exponent notation, e.g. "(1^1 2^1)"; "()" for the empty partition.
  std::string to_string() const;

 private:
  std::vector<Group> groups_;
};

// Orbit type (lambda, [n - m]) of a point of R^n with m nonzero coordinates.
struct OrbitType {
  Partition lambda;
  uint32_t zero_pad = 0;

  uint32_t n() const { return lambda.size() + zero_pad; }
  auto operator<=>(const OrbitType& o) const {
    if (auto c = zero_pad <=> o.zero_pad; c != 0) return c;
    return lambda <=> o.lambda;
  }
  bool operator==(const OrbitType& o) const = default;
  std::string to_string() const;
};

// All partitions of m, lexicographic in their increasing part lists.
std::vector<Partition> partitions_of(uint32_t m);

// Order used when a fiber degenerates: fewer nonzero coordinates, or the
// same number and a refinement.
bool is_extended_refinement(const OrbitType& finer, const OrbitType& coarser);

// Number of ways to split {1..m} into blocks of the sizes in lambda.
uint64_t set_partition_count(const Partition& lambda);
// n! / (prod m_i!^{k_i} (n-m)!): the S_n-orbit size of a point of R^n whose
// nonzero values are distinct per block.
uint64_t zeta(const Partition& lambda, uint32_t n);
// Size of the B_n-orbit of a point of type (lambda, [n-m]): zeta * 2^m.
uint64_t orbit_size_x(const Partition& lambda, uint32_t n);
// Ways to place unlabeled blocks of lambda among n coordinates: zeta / prod k_i!.
uint64_t placement_count(const Partition& lambda, uint32_t n);
// zeta * prod k_i! * (n-m)!.
uint64_t gamma_count(const Partition& lambda, uint32_t n);
// 2^k.
uint64_t gamma_small(const Partition& lambda);

struct BoundSet {
  uint64_t C = 0;
  uint64_t nC = 0;
  uint64_t E = 0;
  uint64_t Gamma = 0;
  uint32_t delta = 0;
};

// Throws std::invalid_argument if d is odd.
BoundSet bounds(uint32_t n, uint32_t s, uint32_t d);
inline uint64_t bound_nC(uint32_t n, uint32_t s, uint32_t d) { return bounds(n, s, d).nC; }

uint64_t binomial(uint64_t n, uint64_t k);
uint64_t factorial(uint64_t n);

}  // namespace hyperoct
