#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ordseq/group.hpp"

namespace ordseq {

std::uint32_t element_order(const FiniteGroup& g, Element x);
// lcm of all element orders.
std::uint64_t exponent(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

// Subgroup generated by `gens`, identity first, in breadth-first order.
std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens);
bool is_subgroup(const FiniteGroup& g, std::span<const Element> elements);
bool is_normal(const FiniteGroup& g, std::span<const Element> subgroup);
// Greedy small generating set, preferring elements of large order.
std::vector<Element> generating_set(const FiniteGroup& g);

std::vector<Element> center(const FiniteGroup& g);
std::vector<Element> derived_subgroup(const FiniteGroup& g);
// Sorted multiset of conjugacy class sizes.
std::vector<std::size_t> class_sizes(const FiniteGroup& g);

// Elements of a Sylow p-subgroup, found by greedily closing p-elements in a
// seeded random order. Throws PreconditionError when p does not divide |G|.
std::vector<Element> sylow_subgroup_elements(const FiniteGroup& g, std::uint64_t p,
                                             std::uint64_t seed = 0x5eed);
FiniteGroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p, std::uint64_t seed = 0x5eed);

// Every Sylow subgroup normal (checked by conjugation).
bool is_nilpotent(const FiniteGroup& g);
// For every p | n, the number of p-power-order elements equals the p-part of n.
bool nilpotent_by_element_counts(const FiniteGroup& g);

}  // namespace ordseq
