#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "ordseq/catalog.hpp"
#include "ordseq/constructors.hpp"
#include "ordseq/errors.hpp"
#include "ordseq/graphs.hpp"
#include "ordseq/order_sequence.hpp"

using namespace ordseq;

namespace {

// x lies in the cyclic subgroup generated by g.
bool in_cyclic(const FiniteGroup& G, Element x, Element g) {
  Element y = kIdentity;
  do {
    if (y == x) return true;
    y = G.mul(y, g);
  } while (y != kIdentity);
  return false;
}

// Isomorphism by trying every vertex permutation.
bool iso_bruteforce(const LabeledGraph& a, const LabeledGraph& b, bool labels) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < a.size() && ok; ++u) {
      if (labels && a.labels()[u] != b.labels()[perm[u]]) ok = false;
      for (std::size_t v = 0; v < a.size() && ok; ++v)
        if (u != v && a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

LabeledGraph random_graph(std::mt19937_64& rng, std::size_t n, bool directed, int labels) {
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < n; ++i) ls.push_back(labels ? std::to_string(rng() % labels) : "");
  LabeledGraph g(directed, ls);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = directed ? 0 : u + 1; v < n; ++v)
      if (u != v && rng() % 3 == 0) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("power graphs") {
  auto c4 = power_graph(cyclic(4));
  CHECK(c4.edge_count() == 6);
  auto v4 = power_graph(abelian({2, 2}));
  CHECK(v4.edge_count() == 3);
  CHECK(v4.out_degree(0) == 3);
  CHECK(power_graph(cyclic(7)).edge_count() == 21);
  for (const auto& name : {"D8", "Q8", "C2xC4"}) {
    const auto& g = catalog_group(8, name).group;
    auto pg = power_graph(g);
    for (Element x = 0; x < g.size(); ++x)
      for (Element y = 0; y < g.size(); ++y)
        if (x != y) CHECK(pg.has_edge(x, y) == (in_cyclic(g, x, y) || in_cyclic(g, y, x)));
  }
  CHECK_THROWS_AS(power_graph(cyclic(2100)), SizeLimitError);
}

TEST_CASE("directed power graphs") {
  auto c6 = cyclic(6);
  auto d = directed_power_graph(c6);
  CHECK(d.out_degree(1) == 5);
  CHECK(d.out_degree(0) == 0);
  auto q8 = dicyclic(8);
  auto dq = directed_power_graph(q8);
  for (Element x = 0; x < 8; ++x)
    if (q8.order(x) == 4) CHECK(dq.out_degree(x) == 3);
  for (auto n : supported_orders()) {
    if (n == 60) continue;
    for (const auto& g : catalog(n)) {
      auto dg = directed_power_graph(g.group);
      for (Element x = 0; x < g.group.size(); ++x) CHECK(dg.out_degree(x) + 1 == g.group.order(x));
    }
  }
}

TEST_CASE("Gruenberg-Kegel graphs") {
  auto g6 = gk_graph(cyclic(6));
  CHECK(g6.labels() == std::vector<std::string>{"2", "3"});
  CHECK(g6.edge_count() == 1);
  auto a5 = gk_graph(alternating(5));
  CHECK(a5.size() == 3);
  CHECK(a5.edge_count() == 0);
  auto s3 = gk_graph(symmetric(3));
  CHECK(s3.size() == 2);
  CHECK(s3.edge_count() == 0);
}

TEST_CASE("canonical forms agree with brute-force isomorphism") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const bool directed = trial % 3 == 0;
    const int labels = trial % 4 == 0 ? 2 : 0;
    const std::size_t n = 3 + rng() % 5;
    auto a = random_graph(rng, n, directed, labels);
    auto b = trial % 2 ? random_graph(rng, n, directed, labels) : [&] {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      return a.relabeled(perm);
    }();
    CHECK(graphs_isomorphic(a, b, true) == iso_bruteforce(a, b, true));
    CHECK(graphs_isomorphic(a, b, false) == iso_bruteforce(a, b, false));
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(9);
  for (const auto& g : catalog(16)) {
    auto pg = power_graph(g.group);
    const auto form = canonical_form(pg, false);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::size_t> perm(pg.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(pg.relabeled(perm), false) == form);
    }
  }
}

TEST_CASE("power graph classification") {
  CHECK_FALSE(graphs_isomorphic(power_graph(cyclic(6)), power_graph(symmetric(3)), false));
  auto pg = power_graph(dihedral(8));
  CHECK(graphs_isomorphic(pg, pg, false));
  std::set<CanonicalForm> forms;
  for (const auto& g : catalog(16)) forms.insert(canonical_form(power_graph(g.group), false));
  CHECK(forms.size() == 12);
  const auto& cat = catalog(16);
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      const auto si = order_sequence(cat[i].group), sj = order_sequence(cat[j].group);
      if (graphs_isomorphic(power_graph(cat[i].group), power_graph(cat[j].group), false)) CHECK(si == sj);
      if (si == sj) CHECK(graphs_isomorphic(gk_graph(cat[i].group), gk_graph(cat[j].group), true));
    }
}

TEST_CASE("export formats") {
  auto g = gk_graph(cyclic(6));
  const auto dot = graph_to_dot(g, "gk");
  CHECK(dot.find("graph gk {") == 0);
  CHECK(dot.find("label=\"2\"") != std::string::npos);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  CHECK(graph_to_dot(directed_power_graph(cyclic(2))).find("->") != std::string::npos);
  CHECK(graph_to_json(g) == R"({"directed":false,"edges":[[0,1]],"labels":["2","3"]})");
  CHECK_THROWS_AS(LabeledGraph(false, {"a"}).add_edge(0, 0), PreconditionError);
}
