#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ordseq/group.hpp"
#include "ordseq/permutation.hpp"

namespace ordseq {

// maps[h][x] is the image of x in N under the automorphism assigned to h in H.
struct GroupAction {
  std::vector<std::vector<Element>> maps;
};

FiniteGroup trivial_group();
FiniteGroup cyclic(std::uint64_t n);
// Direct product of cyclic groups of the given orders; an empty list gives the trivial group.
FiniteGroup abelian(std::span<const std::uint64_t> invariants);
FiniteGroup abelian(std::initializer_list<std::uint64_t> invariants);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
// Pairs (n, h) with (n1,h1)(n2,h2) = (n1 * act(h1)(n2), h1 h2); index n*|H| + h.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const GroupAction& act,
                               std::string name = {});
// Group on the cosets of a normal subgroup.
FiniteGroup quotient(const FiniteGroup& g, std::span<const Element> normal_subgroup,
                     std::string name = {});
FiniteGroup permutation_group(std::span<const Permutation> gens, std::string name = {});
FiniteGroup permutation_group(std::initializer_list<Permutation> gens, std::string name = {});
// Group on a subset closed under multiplication; the identity becomes index 0.
FiniteGroup subgroup(const FiniteGroup& g, std::span<const Element> elements, std::string name = {});
// Lazy group from a multiplication formula. `mul` must define a group with identity 0.
FiniteGroup formula_group(std::string name, std::size_t n, std::function<Element(Element, Element)> mul);

// Validates the action and throws ActionNotAutomorphism / ActionNotHomomorphism
// naming the first violating element.
void validate_action(const FiniteGroup& n, const FiniteGroup& h, const GroupAction& act);
// x -> x^k on any group; an automorphism when gcd(k, exponent) = 1 and the group is abelian.
std::vector<Element> power_map(const FiniteGroup& g, std::uint64_t k);
// Action of a cyclic group H: generator^k acts as automorphism^k.
GroupAction cyclic_action(const FiniteGroup& n, const FiniteGroup& h, Element generator,
                          std::span<const Element> automorphism);
GroupAction trivial_action(const FiniteGroup& n, const FiniteGroup& h);

enum class Family {
  kDihedral,       // param: order 2m
  kDicyclic,       // param: order 4m
  kSymmetric,      // param: degree m
  kAlternating,    // param: degree m
  kHeisenberg,     // param: prime p, order p^3
  kModular16,
  kSemidihedral16,
  kFrobenius20,
  kFrobenius21,
};

FiniteGroup standard_family(Family family, std::span<const std::uint64_t> params = {});
// Accepts "dihedral", "dicyclic", "symmetric", "alternating", "heisenberg",
// "modular16", "semidihedral16", "F20", "F21".
FiniteGroup standard_family(const std::string& family, std::span<const std::uint64_t> params = {});

FiniteGroup dihedral(std::uint64_t order);
FiniteGroup dicyclic(std::uint64_t order);
FiniteGroup symmetric(std::uint32_t degree);
FiniteGroup alternating(std::uint32_t degree);
FiniteGroup heisenberg(std::uint64_t p);

}  // namespace ordseq
