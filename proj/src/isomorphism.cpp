#include "ordseq/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "ordseq/errors.hpp"
#include "ordseq/group_props.hpp"

namespace ordseq {
namespace {

std::vector<std::pair<std::uint32_t, std::size_t>> order_counts(const FiniteGroup& g) {
  std::map<std::uint32_t, std::size_t> counts;
  for (auto o : g.orders()) ++counts[o];
  return {counts.begin(), counts.end()};
}

// Extends a partial homomorphism to <gens[0..k]> by walking the Cayley graph.
// Returns false on an inconsistency or a collision in the image.
bool extend_map(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& gens,
                const std::vector<Element>& images, std::vector<Element>& phi, std::vector<char>& used) {
  std::fill(phi.begin(), phi.end(), UINT32_MAX);
  std::fill(used.begin(), used.end(), 0);
  std::vector<Element> queue{kIdentity};
  phi[kIdentity] = kIdentity;
  used[kIdentity] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t j = 0; j < images.size(); ++j) {
      Element y = g.mul(x, gens[j]);
      Element img = h.mul(phi[x], images[j]);
      if (phi[y] == UINT32_MAX) {
        if (used[img]) return false;
        phi[y] = img;
        used[img] = 1;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return false;
      }
    }
  }
  return true;
}

bool search(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& gens,
            const std::vector<std::vector<Element>>& candidates, std::vector<Element>& images,
            std::vector<Element>& phi, std::vector<char>& used) {
  const std::size_t depth = images.size();
  if (depth == gens.size()) return true;
  for (Element c : candidates[depth]) {
    images.push_back(c);
    if (extend_map(g, h, gens, images, phi, used) && search(g, h, gens, candidates, images, phi, used))
      return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

GroupInvariants group_invariants(const FiniteGroup& g) {
  GroupInvariants inv;
  inv.order_counts = order_counts(g);
  inv.center_size = center(g).size();
  inv.abelianization_size = g.size() / derived_subgroup(g).size();
  inv.class_sizes = class_sizes(g);
  return inv;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.size() != h.size()) return std::nullopt;
  if (order_counts(g) != order_counts(h)) return std::nullopt;
  if (g.size() > kIsomorphismSearchLimit)
    throw SizeLimitError("isomorphism search above order " + std::to_string(kIsomorphismSearchLimit));
  if (group_invariants(g) != group_invariants(h)) return std::nullopt;

  const auto gens = generating_set(g);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element y = 0; y < h.size(); ++y)
      if (h.order(y) == g.order(gens[i])) candidates[i].push_back(y);

  std::vector<Element> images;
  std::vector<Element> phi(g.size());
  std::vector<char> used(h.size());
  if (!search(g, h, gens, candidates, images, phi, used)) return std::nullopt;
  // The walk covers <gens> = G, so phi is a bijective homomorphism.
  extend_map(g, h, gens, images, phi, used);
  return phi;
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace ordseq
