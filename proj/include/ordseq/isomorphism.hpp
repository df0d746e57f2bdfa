#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordseq/group.hpp"

namespace ordseq {

inline constexpr std::size_t kIsomorphismSearchLimit = 2500;

// Cheap isomorphism invariants compared before any search.
struct GroupInvariants {
  std::vector<std::pair<std::uint32_t, std::size_t>> order_counts;
  std::size_t center_size = 0;
  std::size_t abelianization_size = 0;
  std::vector<std::size_t> class_sizes;

  bool operator==(const GroupInvariants&) const = default;
};

GroupInvariants group_invariants(const FiniteGroup& g);

// Isomorphism G -> H as an image array, or nullopt. Invariant mismatches are
// decided at any size; the backtracking branch throws SizeLimitError above
// kIsomorphismSearchLimit.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace ordseq
