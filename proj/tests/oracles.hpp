#pragma once

// Brute-force reference implementations used to cross-check the library.
// Nothing here calls into the code under test except to read group tables.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ordseq/group.hpp"

namespace oracle {

inline std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Orders by repeated multiplication, ignoring the cached orders.
inline std::vector<std::uint64_t> element_orders(const ordseq::FiniteGroup& g) {
  std::vector<std::uint64_t> out;
  for (ordseq::Element x = 0; x < g.size(); ++x) {
    std::uint64_t k = 1;
    for (ordseq::Element y = x; y != ordseq::kIdentity; y = g.mul(y, x)) ++k;
    out.push_back(k);
  }
  return sorted(out);
}

// Permutations as plain arrays; composition applies b first.
using Perm = std::vector<int>;
inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}
inline std::vector<Perm> perm_closure(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> frontier{id};
  seen.insert(id);
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      auto y = compose(g, x);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}
inline std::uint64_t perm_order(const Perm& p) {
  Perm id(p.size());
  std::iota(id.begin(), id.end(), 0);
  std::uint64_t k = 1;
  for (Perm q = p; q != id; q = compose(p, q)) ++k;
  return k;
}

// Element orders of Z_{m1} x ... x Z_{mk} by enumerating tuples.
inline std::vector<std::uint64_t> abelian_orders(const std::vector<std::uint64_t>& ms) {
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> x(ms.size(), 0);
  while (true) {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < ms.size(); ++i) o = std::lcm(o, ms[i] / std::gcd(x[i], ms[i]));
    out.push_back(o);
    std::size_t i = 0;
    while (i < ms.size() && ++x[i] == ms[i]) x[i++] = 0;
    if (i == ms.size()) break;
  }
  return sorted(out);
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

inline bool prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Each cyclic subgroup of order d has phi(d) generators.
inline std::uint64_t cyclic_subgroups(const std::vector<std::uint64_t>& orders) {
  std::map<std::uint64_t, std::uint64_t> count;
  for (auto o : orders) ++count[o];
  std::uint64_t total = 0;
  for (auto [o, c] : count) total += c / phi(o);
  return total;
}

// a dominates b: sorted entrywise a_i >= b_i.
inline bool dominates(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  a = sorted(a);
  b = sorted(b);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

// Perfect matching of b-entries into a-entries with b | a (Kuhn's algorithm).
inline bool strongly_dominates(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> match(a.size(), -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t u, std::vector<char>& used) {
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (used[v] || a[v] % b[u] != 0) continue;
      used[v] = 1;
      if (match[v] < 0 || augment(static_cast<std::size_t>(match[v]), used)) {
        match[v] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < b.size(); ++u) {
    std::vector<char> used(a.size(), 0);
    if (!augment(u, used)) return false;
  }
  return true;
}

// Lemma-style witnesses (p, d, q) by scanning every candidate triple.
inline std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t>> witnesses(std::uint64_t n) {
  std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t>> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (!prime(p)) continue;
    std::uint64_t pd = 1;
    for (unsigned d = 1; pd * p <= n; ++d) {
      pd *= p;
      for (std::uint64_t q = 2; q <= n; ++q)
        if (prime(q) && n % (pd * q) == 0 && (pd - 1) % q == 0) out.emplace_back(p, d, q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Partitions of n, generated independently, as non-increasing vectors.
inline void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}
inline std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  partitions(n, n, cur, out);
  return out;
}

// Conjugate via the Young diagram as a boolean grid.
inline std::vector<unsigned> conjugate(const std::vector<unsigned>& a) {
  if (a.empty()) return {};
  std::vector<std::vector<bool>> grid(a.size(), std::vector<bool>(a.front(), false));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (unsigned j = 0; j < a[i]; ++j) grid[i][j] = true;
  std::vector<unsigned> out;
  for (unsigned j = 0; j < a.front(); ++j) {
    unsigned col = 0;
    for (std::size_t i = 0; i < a.size(); ++i) col += grid[i][j];
    out.push_back(col);
  }
  return out;
}

inline bool majorizes(const std::vector<unsigned>& a, const std::vector<unsigned>& c) {
  unsigned sa = 0, sc = 0;
  for (std::size_t i = 0; i < std::max(a.size(), c.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sc += i < c.size() ? c[i] : 0;
    if (sa < sc) return false;
  }
  return sa == sc;
}

}  // namespace oracle
