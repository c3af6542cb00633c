#pragma once

// Test-only brute force: BFS transitive closure and all-arc rechecks. Kept
// separate from the library's linear-time paths on purpose.

#include <set>
#include <string>
#include <vector>

#include "twinless/blocks.hpp"
#include "twinless/connectivity.hpp"
#include "twinless/graph.hpp"
#include "twinless/testkit.hpp"

namespace twinless::test {

using LabelSets = std::vector<std::vector<std::string>>;

inline std::vector<std::vector<bool>> closure(const Digraph& g, const std::vector<bool>& active) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (VertexId s = 0; s < n; ++s) {
    std::vector<VertexId> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (ArcId a : g.out_arcs(v)) {
        if (!active[a]) continue;
        const VertexId w = g.arc(a).target;
        if (!reach[s][w]) {
          reach[s][w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

inline std::vector<bool> all_but(const Digraph& g, ArcId excluded) {
  std::vector<bool> active(g.arc_count(), true);
  if (excluded != kNoArc) active[excluded] = false;
  return active;
}

inline bool mutually_reachable_everywhere(const Digraph& g, ArcId excluded) {
  const auto reach = closure(g, all_but(g, excluded));
  for (const auto& row : reach) {
    for (bool r : row) {
      if (!r) return false;
    }
  }
  return true;
}

// SCC partition from the closure: u ~ v iff each reaches the other.
inline Partition closure_scc(const Digraph& g, ArcId excluded = kNoArc) {
  const auto reach = closure(g, all_but(g, excluded));
  std::vector<std::uint32_t> label(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexId u = 0;
    while (!(reach[u][v] && reach[v][u])) ++u;
    label[v] = u;
  }
  return Partition(label);
}

inline std::vector<ArcId> exhaustive_strong_bridges(const Digraph& g) {
  std::vector<ArcId> out;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (!mutually_reachable_everywhere(g, a)) out.push_back(a);
  }
  return out;
}

// Every arc rechecked, no candidate pruning.
inline std::vector<ArcId> exhaustive_twinless_bridges(const Digraph& g) {
  std::vector<ArcId> out;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (!is_twinless_strongly_connected(g, a)) out.push_back(a);
  }
  return out;
}

// Count of components after deleting one undirected edge, by BFS.
inline std::size_t components_without(const UndirectedGraph& u, std::size_t skip) {
  const std::size_t n = u.vertex_count();
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t i = 0; i < u.edge_count(); ++i) {
    if (i == skip) continue;
    adj[u.edges()[i].first].push_back(u.edges()[i].second);
    adj[u.edges()[i].second].push_back(u.edges()[i].first);
  }
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<VertexId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

inline std::vector<UndirectedGraph::Edge> exhaustive_bridges(const UndirectedGraph& u) {
  const std::size_t base = components_without(u, u.edge_count());
  std::vector<UndirectedGraph::Edge> out;
  for (std::size_t i = 0; i < u.edge_count(); ++i) {
    if (components_without(u, i) > base) out.push_back(u.edges()[i]);
  }
  return out;
}

inline LabelSets class_labels(const Digraph& g, const Partition& p) {
  std::vector<std::vector<VertexId>> classes = p.classes();
  LabelSets out;
  for (const auto& cls : classes) {
    auto& labels = out.emplace_back();
    for (VertexId v : cls) labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end(), label_less);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return label_less(a.front(), b.front()); });
  return out;
}

inline std::set<std::pair<std::string, std::string>> arc_label_set(const Digraph& g, const std::vector<ArcId>& arcs) {
  std::set<std::pair<std::string, std::string>> out;
  for (ArcId a : arcs) out.emplace(g.label(g.arc(a).source), g.label(g.arc(a).target));
  return out;
}

inline testkit::GeneratorConfig small_config(std::uint64_t seed, testkit::Shape shape) {
  testkit::GeneratorConfig cfg;
  cfg.min_n = 3;
  cfg.max_n = 8;
  cfg.min_m = 0;
  cfg.max_m = 18;
  cfg.twin_density = 0.35;
  cfg.max_twin_pairs = 8;
  cfg.seed = seed;
  cfg.shape = shape;
  return cfg;
}

}  // namespace twinless::test
