#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace twinless {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;

inline constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();

struct Arc {
  VertexId source;
  VertexId target;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// An antiparallel arc pair. `forward` is the pair member with the smaller id.
struct TwinPair {
  ArcId forward;
  ArcId backward;

  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

// Orders vertex labels the way reports print them: integer labels
// numerically, integers before other tokens, other tokens bytewise.
bool label_less(std::string_view a, std::string_view b);

// Simple directed graph over dense ids 0..n-1. Immutable once built; every
// edit returns a new value. Arc ids are dense 0..m-1 in construction order.
class Digraph {
 public:
  Digraph() = default;

  // Validates the arc list (ids in range, no self-loops, no duplicate arcs)
  // and labels (unique). Throws InvalidArgument on violation.
  Digraph(std::vector<std::string> labels, std::vector<Arc> arcs);

  // Unlabelled convenience: vertex i is labelled std::to_string(i + 1).
  static Digraph with_numbered_vertices(std::size_t n, std::vector<Arc> arcs);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  const Arc& arc(ArcId a) const { return arcs_[a]; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const ArcId> out_arcs(VertexId v) const {
    return {out_ids_.data() + out_offsets_[v], out_ids_.data() + out_offsets_[v + 1]};
  }
  std::span<const ArcId> in_arcs(VertexId v) const {
    return {in_ids_.data() + in_offsets_[v], in_ids_.data() + in_offsets_[v + 1]};
  }

  // The antiparallel partner of `a`, or kNoArc.
  ArcId twin(ArcId a) const { return twin_[a]; }

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::span<const std::string> labels() const noexcept { return labels_; }

  std::optional<VertexId> find_vertex(std::string_view label) const;
  std::optional<ArcId> find_arc(VertexId source, VertexId target) const;

  // Arc lookup by endpoint labels; throws InvalidArgument if absent.
  ArcId arc_between(std::string_view source, std::string_view target) const;
  VertexId vertex(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<ArcId> out_ids_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<ArcId> in_ids_;
  std::vector<ArcId> twin_;
};

// Undirected simple graph; edges are stored with first < second, sorted.
class UndirectedGraph {
 public:
  using Edge = std::pair<VertexId, VertexId>;

  UndirectedGraph() = default;
  // Normalizes endpoint order and drops repeated pairs. Self-edges and
  // out-of-range endpoints throw InvalidArgument.
  UndirectedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(VertexId u, VertexId v) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

enum class ParseMode { strict, lenient };

struct ParseResult {
  Digraph graph;
  std::size_t dropped_duplicates = 0;
};

// Edge-list text: one `SOURCE TARGET` per line, `#` comments, blank lines
// ignored. Labels are interned in order of first appearance.
ParseResult parse_edge_list(std::string_view text, ParseMode mode = ParseMode::strict);

// Canonical text: one arc per line sorted by (source label, target label),
// lines separated by '\n' with no trailing newline. Isolated vertices are
// not representable and are lost.
std::string serialize(const Digraph& g);

std::vector<TwinPair> twin_pairs(const Digraph& g);

// Same vertex set, arcs in `drop` removed. Surviving arcs keep their
// relative order and are renumbered densely.
Digraph remove_arcs(const Digraph& g, std::span<const ArcId> drop);

// One edge per unordered vertex pair joined by at least one arc.
UndirectedGraph underlying_graph(const Digraph& g);

// Subgraph on `keep`. Vertex i of the result is the i-th smallest id in
// `keep`; labels carry over.
Digraph induced_subgraph(const Digraph& g, std::span<const VertexId> keep);

// Same vertex set and arc set, compared by label.
bool same_labelled_graph(const Digraph& a, const Digraph& b);

}  // namespace twinless
