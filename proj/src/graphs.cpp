#include "ordseq/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ordseq/errors.hpp"
#include "ordseq/numtheory.hpp"

namespace ordseq {

LabeledGraph::LabeledGraph(bool directed, std::vector<std::string> labels)
    : directed_(directed), labels_(std::move(labels)), out_(labels_.size()) {}

LabeledGraph LabeledGraph::from_adjacency(bool directed, std::vector<std::string> labels,
                                          const std::vector<std::vector<std::uint8_t>>& adjacency) {
  LabeledGraph g(directed, std::move(labels));
  if (adjacency.size() != g.size()) throw PreconditionError("BadGraph", "adjacency size does not match labels");
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (adjacency[u].size() != g.size()) throw PreconditionError("BadGraph", "adjacency matrix is not square");
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!adjacency[u][v]) continue;
      if (u == v) throw PreconditionError("BadGraph", "self-loop at vertex " + std::to_string(u));
      if (!directed && !adjacency[v][u]) throw PreconditionError("BadGraph", "undirected adjacency is not symmetric");
      g.out_[u].push_back(static_cast<std::uint32_t>(v));
    }
  }
  return g;
}

void LabeledGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw PreconditionError("BadGraph", "edge endpoint out of range");
  if (u == v) throw PreconditionError("BadGraph", "self-loop at vertex " + std::to_string(u));
  auto insert = [](std::vector<std::uint32_t>& list, std::size_t x) {
    auto it = std::lower_bound(list.begin(), list.end(), static_cast<std::uint32_t>(x));
    if (it == list.end() || *it != x) list.insert(it, static_cast<std::uint32_t>(x));
  };
  insert(out_[u], v);
  if (!directed_) insert(out_[v], u);
}

bool LabeledGraph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(out_[u].begin(), out_[u].end(), static_cast<std::uint32_t>(v));
}

std::size_t LabeledGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : out_) total += list.size();
  return directed_ ? total : total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> LabeledGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (auto v : out_[u])
      if (directed_ || u < v) out.emplace_back(u, v);
  return out;
}

LabeledGraph LabeledGraph::relabeled(const std::vector<std::size_t>& perm) const {
  std::vector<std::string> labels(size());
  for (std::size_t v = 0; v < size(); ++v) labels[perm[v]] = labels_[v];
  LabeledGraph g(directed_, std::move(labels));
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

namespace {

// ⟨x⟩ membership rows: member[g][h] != 0 when h is a power of g.
std::vector<std::vector<std::uint8_t>> power_rows(const FiniteGroup& g) {
  if (g.size() > kMaxPowerGraphSize)
    throw SizeLimitError("power graphs are limited to " + std::to_string(kMaxPowerGraphSize) + " vertices");
  const std::size_t n = g.size();
  std::vector<std::vector<std::uint8_t>> member(n, std::vector<std::uint8_t>(n, 0));
  for (Element x = 0; x < n; ++x) {
    Element y = kIdentity;
    do {
      member[x][y] = 1;
      y = g.mul(y, x);
    } while (y != kIdentity);
  }
  return member;
}

std::vector<std::string> element_labels(std::size_t n) { return std::vector<std::string>(n); }

}  // namespace

LabeledGraph power_graph(const FiniteGroup& g) {
  auto member = power_rows(g);
  const std::size_t n = g.size();
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && (member[u][v] || member[v][u])) adj[u][v] = 1;
  return LabeledGraph::from_adjacency(false, element_labels(n), adj);
}

LabeledGraph directed_power_graph(const FiniteGroup& g) {
  auto member = power_rows(g);
  for (std::size_t u = 0; u < g.size(); ++u) member[u][u] = 0;
  return LabeledGraph::from_adjacency(true, element_labels(g.size()), member);
}

LabeledGraph gk_graph(const FiniteGroup& g) {
  const auto primes = prime_divisors(g.size());
  std::vector<std::string> labels;
  for (auto p : primes) labels.push_back(std::to_string(p));
  LabeledGraph out(false, labels);
  std::vector<bool> seen(g.size() + 1, false);
  for (auto o : g.orders()) seen[o] = true;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const auto pq = primes[i] * primes[j];
      for (std::size_t o = pq; o <= g.size(); o += pq)
        if (seen[o]) {
          out.add_edge(i, j);
          break;
        }
    }
  return out;
}

namespace {

struct Dense {
  bool directed = false;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint8_t>> adj;
  std::size_t size() const { return labels.size(); }
};

Dense to_dense(const LabeledGraph& g, bool respect_labels) {
  Dense d;
  d.directed = g.directed();
  d.labels = respect_labels ? g.labels() : std::vector<std::string>(g.size());
  d.adj.assign(g.size(), std::vector<std::uint8_t>(g.size(), 0));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (auto v : g.out_neighbours(u)) d.adj[u][v] = 1;
  return d;
}

// Merges every class of interchangeable vertices once; returns false when none exist.
bool merge_twins(Dense& d) {
  const std::size_t n = d.size();
  // Key: label, out-row, in-column, with the vertex's own bit set for the closed variant.
  auto key = [&](std::size_t u, bool closed) {
    std::string k = d.labels[u];
    k += '\0';
    for (std::size_t v = 0; v < n; ++v) k += static_cast<char>('0' + (d.adj[u][v] || (closed && u == v)));
    if (d.directed)
      for (std::size_t v = 0; v < n; ++v) k += static_cast<char>('0' + (d.adj[v][u] || (closed && u == v)));
    return k;
  };
  std::vector<std::size_t> class_of(n);
  std::iota(class_of.begin(), class_of.end(), 0);
  std::vector<char> kind(n, 0);
  bool merged = false;
  for (bool closed : {true, false}) {
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t u = 0; u < n; ++u) groups[key(u, closed)].push_back(u);
    for (const auto& [k, members] : groups) {
      if (members.size() < 2) continue;
      merged = true;
      for (auto u : members) {
        class_of[u] = members.front();
        kind[members.front()] = closed ? 'C' : 'O';
      }
    }
  }
  if (!merged) return false;
  std::vector<std::size_t> reps, index(n);
  std::vector<std::size_t> count(n, 0);
  for (std::size_t u = 0; u < n; ++u) ++count[class_of[u]];
  for (std::size_t u = 0; u < n; ++u)
    if (class_of[u] == u) {
      index[u] = reps.size();
      reps.push_back(u);
    }
  Dense out;
  out.directed = d.directed;
  for (auto r : reps)
    out.labels.push_back(count[r] > 1 ? std::string(1, kind[r]) + "(" + std::to_string(count[r]) + ":" + d.labels[r] + ")"
                                      : d.labels[r]);
  out.adj.assign(reps.size(), std::vector<std::uint8_t>(reps.size(), 0));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      if (a != b) out.adj[a][b] = d.adj[reps[a]][reps[b]];
  d = std::move(out);
  return true;
}

class Canonizer {
 public:
  explicit Canonizer(const Dense& d) : d_(d) {}

  CanonicalForm run() {
    const std::size_t n = d_.size();
    std::vector<std::string> sorted = d_.labels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> color(n);
    for (std::size_t v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), d_.labels[v]) - sorted.begin());
    search(color);
    return best_;
  }

 private:
  static constexpr std::size_t kLeafLimit = 500000;

  // Colour refinement to an equitable ordered partition; colours are ranks of
  // invariant signatures, so the ordering is isomorphism-invariant.
  void refine(std::vector<int>& color) const {
    const std::size_t n = d_.size();
    std::size_t classes = std::set<int>(color.begin(), color.end()).size();
    while (true) {
      std::vector<std::vector<int>> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> out, in;
        for (std::size_t w = 0; w < n; ++w) {
          if (d_.adj[v][w]) out.push_back(color[w]);
          if (d_.directed && d_.adj[w][v]) in.push_back(color[w]);
        }
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        sig[v].push_back(color[v]);
        sig[v].insert(sig[v].end(), out.begin(), out.end());
        sig[v].push_back(-1);
        sig[v].insert(sig[v].end(), in.begin(), in.end());
      }
      auto uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      for (std::size_t v = 0; v < n; ++v)
        color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
      if (uniq.size() == classes) return;
      classes = uniq.size();
    }
  }

  void search(std::vector<int> color) {
    refine(color);
    const std::size_t n = d_.size();
    std::vector<std::size_t> count(n, 0);
    for (auto c : color) ++count[c];
    int target = -1;
    for (std::size_t c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target < 0) {
      leaf(color);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> next(n);
      for (std::size_t u = 0; u < n; ++u) next[u] = 2 * color[u] + 1;
      next[v] = 2 * color[v];
      search(std::move(next));
    }
  }

  void leaf(const std::vector<int>& color) {
    if (++leaves_ > kLeafLimit) throw SizeLimitError("canonical labelling search exceeded its leaf limit");
    const std::size_t n = d_.size();
    std::vector<std::size_t> at(n);
    for (std::size_t v = 0; v < n; ++v) at[color[v]] = v;
    CanonicalForm f;
    f.directed = d_.directed;
    for (std::size_t i = 0; i < n; ++i) f.labels.push_back(d_.labels[at[i]]);
    f.adjacency.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f.adjacency.push_back(d_.adj[at[i]][at[j]]);
    if (!have_best_ || f < best_) {
      best_ = std::move(f);
      have_best_ = true;
    }
  }

  const Dense& d_;
  CanonicalForm best_;
  bool have_best_ = false;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const LabeledGraph& g, bool respect_labels) {
  Dense d = to_dense(g, respect_labels);
  while (merge_twins(d)) {
  }
  if (d.size() > kMaxCanonicalVertices)
    throw SizeLimitError("reduced graph has " + std::to_string(d.size()) + " vertices; the limit is " +
                         std::to_string(kMaxCanonicalVertices));
  return Canonizer(d).run();
}

bool graphs_isomorphic(const LabeledGraph& a, const LabeledGraph& b, bool respect_labels) {
  if (a.directed() != b.directed() || a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, respect_labels) == canonical_form(b, respect_labels);
}

std::string graph_to_dot(const LabeledGraph& g, const std::string& name) {
  std::ostringstream out;
  const char* arrow = g.directed() ? " -> " : " -- ";
  out << (g.directed() ? "digraph " : "graph ") << name << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    out << "  v" << v << " [label=\"" << (g.labels()[v].empty() ? std::to_string(v) : g.labels()[v]) << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  v" << u << arrow << "v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["directed"] = g.directed();
  j["labels"] = g.labels();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

}  // namespace ordseq
