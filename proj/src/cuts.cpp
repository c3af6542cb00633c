#include "twinless/cuts.hpp"

#include <algorithm>
#include <numeric>

#include "twinless/connectivity.hpp"
#include "twinless/errors.hpp"

namespace twinless {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), VertexId{0}); }

  VertexId find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<VertexId> parent_;
};

// Marks the arcs of a BFS tree from vertex 0, forward or over reversed arcs.
void mark_bfs_tree(const Digraph& g, bool reverse, std::vector<bool>& mark) {
  if (g.vertex_count() == 0) return;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> frontier{0};
  seen[0] = true;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const VertexId v = frontier[head];
    for (ArcId a : reverse ? g.in_arcs(v) : g.out_arcs(v)) {
      const VertexId w = reverse ? g.arc(a).source : g.arc(a).target;
      if (seen[w]) continue;
      seen[w] = true;
      mark[a] = true;
      frontier.push_back(w);
    }
  }
}

std::vector<bool> strong_bridge_candidates(const Digraph& g) {
  std::vector<bool> candidate(g.arc_count(), false);
  mark_bfs_tree(g, false, candidate);
  mark_bfs_tree(g, true, candidate);
  return candidate;
}

// Scan-first forests of the underlying graph, one edge per vertex pair:
// forest[i] is the 0-based index of the forest that took edge i, or
// `count` when it fell outside the first `count` forests. Every cut of size
// below `count` is kept whole by the union of the forests.
struct Certificate {
  std::vector<ArcId> representative;  // arc standing for each underlying edge
  std::vector<std::size_t> forest;
};

Certificate forest_certificate(const Digraph& g, std::size_t count) {
  Certificate c;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const ArcId t = g.twin(a);
    if (t == kNoArc || a < t) c.representative.push_back(a);
  }
  std::vector<DisjointSets> forests(count, DisjointSets(g.vertex_count()));
  c.forest.assign(c.representative.size(), count);
  for (std::size_t i = 0; i < c.representative.size(); ++i) {
    const Arc& arc = g.arc(c.representative[i]);
    for (std::size_t f = 0; f < count; ++f) {
      if (forests[f].unite(arc.source, arc.target)) {
        c.forest[i] = f;
        break;
      }
    }
  }
  return c;
}

// Fixed simple undirected edge list with a reusable test for
// "still 2-edge-connected after deleting edge `skip`".
class EdgeCutTester {
 public:
  EdgeCutTester(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges)
      : n_(n), edges_(std::move(edges)), offsets_(n + 1, 0) {
    for (const auto& [u, v] : edges_) {
      ++offsets_[u + 1];
      ++offsets_[v + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    incident_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
      incident_[fill[edges_[i].first]++] = i;
      incident_[fill[edges_[i].second]++] = i;
    }
  }

  // Iterative low-link DFS from vertex 0.
  bool two_edge_connected_without(std::uint32_t skip) const {
    if (n_ <= 1) return true;
    constexpr std::uint32_t kUnseen = 0xffffffffu;
    std::vector<std::uint32_t> order(n_, kUnseen);
    std::vector<std::uint32_t> low(n_);
    struct Frame {
      VertexId v;
      std::uint32_t via;
      std::size_t next;
    };
    std::vector<Frame> stack{{0, kUnseen, offsets_[0]}};
    std::uint32_t clock = 0;
    order[0] = low[0] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < offsets_[f.v + 1]) {
        const std::uint32_t e = incident_[f.next++];
        if (e == skip || e == f.via) continue;
        const VertexId w = edges_[e].first == f.v ? edges_[e].second : edges_[e].first;
        if (order[w] == kUnseen) {
          order[w] = low[w] = clock++;
          stack.push_back({w, e, offsets_[w]});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      if (low[done.v] == order[done.v]) return false;
      low[stack.back().v] = std::min(low[stack.back().v], low[done.v]);
    }
    return clock == n_;
  }

 private:
  std::size_t n_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> incident_;
};

// In a twinless strongly connected graph, an arc that is not a strong
// bridge is a twinless bridge iff it has no twin and the underlying graph
// without it has a bridge. Only edges of the first two forests can be such
// arcs, and the first three forests keep every cut of size <= 2, so the
// test runs on O(n) edges.
std::vector<ArcId> twinless_bridges_given(const Digraph& g, const std::vector<ArcId>& strong,
                                          const ExecutionPolicy& policy) {
  const Certificate c = forest_certificate(g, 3);
  std::vector<std::pair<VertexId, VertexId>> kept;
  std::vector<std::uint32_t> candidates;  // indices into `kept`
  std::vector<ArcId> candidate_arcs;
  for (std::size_t i = 0; i < c.representative.size(); ++i) {
    if (c.forest[i] == 3) continue;
    const ArcId a = c.representative[i];
    if (c.forest[i] < 2 && g.twin(a) == kNoArc && !std::binary_search(strong.begin(), strong.end(), a)) {
      candidates.push_back(static_cast<std::uint32_t>(kept.size()));
      candidate_arcs.push_back(a);
    }
    kept.emplace_back(g.arc(a).source, g.arc(a).target);
  }
  const EdgeCutTester tester(g.vertex_count(), std::move(kept));
  std::vector<char> is_bridge(candidates.size(), 0);
  parallel_for(candidates.size(), policy,
               [&](std::size_t i) { is_bridge[i] = !tester.two_edge_connected_without(candidates[i]); });

  std::vector<ArcId> bridges = strong;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (is_bridge[i]) bridges.push_back(candidate_arcs[i]);
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::vector<ArcId> recheck(const Digraph& g, const std::vector<bool>& candidate, const ExecutionPolicy& policy,
                           bool (*still_connected)(const Digraph&, ArcId)) {
  std::vector<ArcId> arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (candidate[a]) arcs.push_back(a);
  }
  std::vector<char> is_bridge(arcs.size(), 0);
  parallel_for(arcs.size(), policy, [&](std::size_t i) { is_bridge[i] = !still_connected(g, arcs[i]); });

  std::vector<ArcId> bridges;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (is_bridge[i]) bridges.push_back(arcs[i]);
  }
  return bridges;
}

}  // namespace

std::vector<ArcId> strong_bridges(const Digraph& g, const ExecutionPolicy& policy) {
  if (!is_strongly_connected(g)) throw PreconditionError("input is not strongly connected");
  return recheck(g, strong_bridge_candidates(g), policy,
                 [](const Digraph& h, ArcId a) { return is_strongly_connected(h, a); });
}

std::vector<ArcId> twinless_bridges(const Digraph& g, const ExecutionPolicy& policy) {
  if (!is_twinless_strongly_connected(g)) throw PreconditionError("input is not twinless strongly connected");
  return twinless_bridges_given(g, strong_bridges(g, policy), policy);
}

BridgeReport bridge_report(const Digraph& g, const ExecutionPolicy& policy) {
  BridgeReport report;
  if (!is_twinless_strongly_connected(g)) throw PreconditionError("input is not twinless strongly connected");
  report.strong_bridges = strong_bridges(g, policy);
  report.twinless_bridges = twinless_bridges_given(g, report.strong_bridges, policy);
  return report;
}

}  // namespace twinless
