#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ordseq/group.hpp"

namespace ordseq {

inline constexpr std::size_t kMaxPowerGraphSize = 2048;
inline constexpr std::size_t kMaxCanonicalVertices = 64;

// Simple graph without loops. Undirected graphs store each edge in both
// adjacency lists.
class LabeledGraph {
 public:
  LabeledGraph(bool directed, std::vector<std::string> labels);
  // adjacency[u][v] != 0 means an arc u -> v; undirected input must be symmetric.
  static LabeledGraph from_adjacency(bool directed, std::vector<std::string> labels,
                                     const std::vector<std::vector<std::uint8_t>>& adjacency);
  void add_edge(std::size_t u, std::size_t v);  // arc u -> v when directed

  bool directed() const { return directed_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_edge(std::size_t u, std::size_t v) const;
  const std::vector<std::uint32_t>& out_neighbours(std::size_t u) const { return out_[u]; }
  std::size_t out_degree(std::size_t u) const { return out_[u].size(); }
  // Undirected edges are counted once.
  std::size_t edge_count() const;
  // Edges (u, v); for undirected graphs only u < v.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  // Same graph with vertex v renamed perm[v].
  LabeledGraph relabeled(const std::vector<std::size_t>& perm) const;

 private:
  bool directed_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint32_t>> out_;
};

// Edge {g, h} when one of g, h is a power of the other. Vertices are element indices.
LabeledGraph power_graph(const FiniteGroup& g);
// Arc g -> h when h is a power of g and h != g.
LabeledGraph directed_power_graph(const FiniteGroup& g);
// Prime divisors of |G| (ascending, labelled by the prime); edge {p, q} when
// some element has order pq.
LabeledGraph gk_graph(const FiniteGroup& g);

// Isomorphism-invariant form. Interchangeable vertices (same label, and
// swapping them is an automorphism) are first merged into single labelled
// vertices until none remain, then the reduced graph is labelled by
// individualization and refinement, keeping the least adjacency string.
// Throws SizeLimitError when the reduced graph has more than kMaxCanonicalVertices.
struct CanonicalForm {
  bool directed = false;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> adjacency;  // row-major over the canonical order
  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const LabeledGraph& g, bool respect_labels = true);
bool graphs_isomorphic(const LabeledGraph& a, const LabeledGraph& b, bool respect_labels = true);

std::string graph_to_dot(const LabeledGraph& g, const std::string& name = "G");
std::string graph_to_json(const LabeledGraph& g);

}  // namespace ordseq
