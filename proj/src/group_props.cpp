#include "ordseq/group_props.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ordseq/constructors.hpp"
#include "ordseq/errors.hpp"
#include "ordseq/numtheory.hpp"

namespace ordseq {

std::uint32_t element_order(const FiniteGroup& g, Element x) { return g.order(x); }

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (std::uint32_t o : g.orders()) e = std::lcm(e, std::uint64_t{o});
  return e;
}

bool is_abelian(const FiniteGroup& g) {
  auto gens = generating_set(g);
  for (Element a : gens)
    for (Element b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& g) {
  for (std::uint32_t o : g.orders())
    if (o == g.size()) return true;
  return false;
}

std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> member(g.size(), 0);
  std::vector<Element> out{kIdentity};
  member[kIdentity] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(out[i], s);
      if (!member[y]) {
        member[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> elements) {
  std::vector<char> member(g.size(), 0);
  for (Element x : elements) {
    if (x >= g.size()) return false;
    member[x] = 1;
  }
  if (!member[kIdentity]) return false;
  for (Element a : elements)
    for (Element b : elements)
      if (!member[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, std::span<const Element> subgroup) {
  std::vector<char> member(g.size(), 0);
  for (Element x : subgroup) member[x] = 1;
  for (Element s : generating_set(g))
    for (Element x : subgroup)
      if (!member[g.conjugate(x, s)]) return false;
  return true;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<char> member(g.size(), 0);
  member[kIdentity] = 1;
  std::size_t covered = 1;
  while (covered < g.size()) {
    Element best = kIdentity;
    std::uint32_t best_order = 0;
    for (Element x = 0; x < g.size(); ++x)
      if (!member[x] && g.order(x) > best_order) {
        best = x;
        best_order = g.order(x);
      }
    gens.push_back(best);
    auto sub = closure(g, gens);
    std::fill(member.begin(), member.end(), 0);
    for (Element x : sub) member[x] = 1;
    covered = sub.size();
  }
  return gens;
}

std::vector<Element> center(const FiniteGroup& g) {
  auto gens = generating_set(g);
  std::vector<Element> out;
  for (Element z = 0; z < g.size(); ++z) {
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](Element s) { return g.mul(z, s) == g.mul(s, z); });
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<Element> derived_subgroup(const FiniteGroup& g) {
  auto gens = generating_set(g);
  std::vector<Element> seeds;
  for (Element a : gens)
    for (Element b : gens) {
      Element c = g.commutator(a, b);
      if (c != kIdentity) seeds.push_back(c);
    }
  // Normal closure of the generator commutators.
  auto sub = closure(g, seeds);
  for (bool grown = true; grown;) {
    grown = false;
    std::vector<char> member(g.size(), 0);
    for (Element x : sub) member[x] = 1;
    for (Element x : sub) {
      for (Element s : gens) {
        Element y = g.conjugate(x, s);
        if (!member[y]) {
          seeds.push_back(y);
          grown = true;
          break;
        }
      }
      if (grown) break;
    }
    if (grown) sub = closure(g, seeds);
  }
  return sub;
}

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  auto gens = generating_set(g);
  std::vector<char> seen(g.size(), 0);
  std::vector<std::size_t> sizes;
  for (Element start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Element> orbit{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Element s : gens) {
        Element y = g.conjugate(orbit[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<Element> sylow_subgroup_elements(const FiniteGroup& g, std::uint64_t p,
                                             std::uint64_t seed) {
  if (!is_prime(p) || g.size() % p != 0)
    throw PreconditionError("NotDivisor", std::to_string(p) + " is not a prime dividing |G| = " +
                                              std::to_string(g.size()));
  const std::uint64_t target = prime_power_part(g.size(), p);
  std::vector<Element> candidates;
  for (Element x = 1; x < g.size(); ++x)
    if (is_power_of(g.order(x), p)) candidates.push_back(x);
  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);

  // A single pass suffices: an element rejected against S is rejected against
  // every larger p-subgroup, and the result is a maximal p-subgroup, hence Sylow.
  std::vector<Element> gens;
  std::vector<Element> current{kIdentity};
  std::vector<char> member(g.size(), 0);
  member[kIdentity] = 1;
  for (Element x : candidates) {
    if (current.size() == target) break;
    if (member[x]) continue;
    gens.push_back(x);
    auto next = closure(g, gens);
    if (!is_power_of(next.size(), p)) {
      gens.pop_back();
      continue;
    }
    current = std::move(next);
    for (Element y : current) member[y] = 1;
  }
  if (current.size() != target)
    throw std::logic_error("Sylow search failed in group '" + g.name() + "'");
  return current;
}

FiniteGroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p, std::uint64_t seed) {
  auto elems = sylow_subgroup_elements(g, p, seed);
  return subgroup(g, elems, "Syl" + std::to_string(p) + "(" + g.name() + ")");
}

bool is_nilpotent(const FiniteGroup& g) {
  for (std::uint64_t p : prime_divisors(g.size()))
    if (!is_normal(g, sylow_subgroup_elements(g, p))) return false;
  return true;
}

bool nilpotent_by_element_counts(const FiniteGroup& g) {
  for (std::uint64_t p : prime_divisors(g.size())) {
    std::uint64_t count = 0;
    for (std::uint32_t o : g.orders())
      if (is_power_of(o, p)) ++count;
    if (count != prime_power_part(g.size(), p)) return false;
  }
  return true;
}

}  // namespace ordseq
