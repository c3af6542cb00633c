#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "twinless/graph.hpp"

namespace twinless {

// Disjoint nonempty vertex classes covering 0..n-1, stored canonically:
// classes are numbered by their smallest vertex and list vertices ascending.
// Two partitions are equal iff they group vertices identically.
class Partition {
 public:
  Partition() = default;
  // `class_of[v]` may be any labelling; it is renumbered canonically.
  explicit Partition(std::span<const std::uint32_t> class_of);

  static Partition single_class(std::size_t n);
  static Partition discrete(std::size_t n);
  static Partition from_classes(std::size_t n, const std::vector<std::vector<VertexId>>& classes);

  std::size_t universe_size() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::uint32_t class_of(VertexId v) const { return class_of_[v]; }
  bool same_class(VertexId u, VertexId v) const { return class_of_[u] == class_of_[v]; }
  const std::vector<VertexId>& members(std::uint32_t c) const { return classes_[c]; }
  const std::vector<std::vector<VertexId>>& classes() const noexcept { return classes_; }

  // True iff every class of *this lies inside a class of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.class_of_ == b.class_of_; }

 private:
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<VertexId>> classes_;
};

// Contracted TSCC structure of a strongly connected digraph.
struct CondensationTree {
  struct Edge {
    std::uint32_t a;  // a < b, indices into `nodes.classes()`
    std::uint32_t b;
    std::vector<TwinPair> twin_pairs;  // twin pairs of g joining the two classes
  };

  Partition nodes;
  std::vector<Edge> edges;
  bool is_tree = false;
  bool every_edge_twinned = false;
};

// Iterative Tarjan, O(n + m). `excluded` names an arc treated as absent,
// which lets per-arc sweeps avoid copying the graph.
Partition strongly_connected_components(const Digraph& g, ArcId excluded = kNoArc);
bool is_strongly_connected(const Digraph& g, ArcId excluded = kNoArc);

Partition connected_components(const UndirectedGraph& u);
std::vector<UndirectedGraph::Edge> bridges_undirected(const UndirectedGraph& u);
Partition two_edge_connected_components(const UndirectedGraph& u);

// Inside every SCC, the TSCCs are the 2-edge-connected components of the
// SCC's underlying undirected graph. Linear time.
Partition twinless_strongly_connected_components(const Digraph& g, ArcId excluded = kNoArc);
bool is_twinless_strongly_connected(const Digraph& g, ArcId excluded = kNoArc);

// Requires g strongly connected; throws PreconditionError otherwise.
CondensationTree condensation_tscc(const Digraph& g);

}  // namespace twinless
