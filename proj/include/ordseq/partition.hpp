#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordseq/order_sequence.hpp"

namespace ordseq {

inline constexpr unsigned kMaxPartitionSize = 60;

// Non-increasing positive parts. The empty partition has n = 0.
class Partition {
 public:
  Partition() = default;
  // Throws PreconditionError("NotPartition") unless parts are positive and non-increasing.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  // Part i (0-based), or 0 beyond the last part.
  unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

// "4+2+1"; parts may be given in any order.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& a);

Partition conjugate(const Partition& a);
// Prefix sums of a dominate those of c; throws PreconditionError("SizeMismatch").
bool majorizes(const Partition& a, const Partition& c);
// Reverse lexicographic order, starting with (n). Throws SizeLimitError above kMaxPartitionSize.
std::vector<Partition> partitions_of(unsigned n);

// Order sequence of Z_{p^r1} x ... computed from the conjugate partition.
// Throws SizeLimitError when p^n exceeds 1e9.
OrderSequence abelian_order_sequence(std::uint64_t p, const Partition& a);

struct CyclicSubgroupCounts {
  struct Level {
    std::uint64_t order = 0;
    std::uint64_t elements = 0;
    std::uint64_t cyclic_subgroups = 0;
  };
  std::vector<Level> levels;           // orders p, p^2, ..., p^m
  std::uint64_t total = 0;             // all cyclic subgroups, the trivial one included
  std::uint64_t divisor_product = 0;   // product of (r_i + 1)
};

CyclicSubgroupCounts cyclic_subgroup_counts(std::uint64_t p, const Partition& a);

// Chain a = b0, b1, ..., c where each step moves one box to a lower row and
// every intermediate is a partition. Empty when a == c. Throws
// PreconditionError("NotMajorized") unless majorizes(a, c).
std::vector<Partition> box_move_chain(const Partition& a, const Partition& c);

// Inverse of abelian_order_sequence; throws PreconditionError("NotAbelianPGroupSequence").
Partition defining_partition(const OrderSequence& s, std::uint64_t p);

// Invariants p^r1, p^r2, ... for building the group.
std::vector<std::uint64_t> prime_power_invariants(std::uint64_t p, const Partition& a);

}  // namespace ordseq
