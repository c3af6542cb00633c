#include "twinless/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "twinless/errors.hpp"

namespace twinless {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

using Edge = UndirectedGraph::Edge;

struct AdjacencyEntry {
  VertexId neighbor;
  std::uint32_t edge;
};

// CSR adjacency for an undirected edge list.
struct UndirectedAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<AdjacencyEntry> entries;

  UndirectedAdjacency(std::size_t n, std::span<const Edge> edges) : offsets(n + 1, 0) {
    for (const Edge& e : edges) {
      ++offsets[e.first + 1];
      ++offsets[e.second + 1];
    }
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    entries.resize(2 * edges.size());
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::uint32_t id = 0; id < edges.size(); ++id) {
      entries[fill[edges[id].first]++] = {edges[id].second, id};
      entries[fill[edges[id].second]++] = {edges[id].first, id};
    }
  }

  std::span<const AdjacencyEntry> around(VertexId v) const {
    return {entries.data() + offsets[v], entries.data() + offsets[v + 1]};
  }
};

// Iterative low-link DFS. Returns one flag per edge.
std::vector<bool> bridge_flags(std::size_t n, std::span<const Edge> edges) {
  const UndirectedAdjacency adj(n, edges);
  std::vector<bool> is_bridge(edges.size(), false);
  std::vector<std::uint32_t> order(n, kUnset);
  std::vector<std::uint32_t> low(n, 0);

  struct Frame {
    VertexId v;
    std::uint32_t via_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t counter = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (order[root] != kUnset) continue;
    order[root] = low[root] = counter++;
    stack.push_back({root, kUnset, adj.offsets[root]});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj.offsets[f.v + 1]) {
        const AdjacencyEntry e = adj.entries[f.next++];
        if (e.edge == f.via_edge) continue;
        if (order[e.neighbor] == kUnset) {
          order[e.neighbor] = low[e.neighbor] = counter++;
          stack.push_back({e.neighbor, e.edge, adj.offsets[e.neighbor]});
        } else {
          low[f.v] = std::min(low[f.v], order[e.neighbor]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const VertexId parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > order[parent]) is_bridge[done.via_edge] = true;
      }
    }
  }
  return is_bridge;
}

// Connected-component labels, skipping edges flagged in `drop` when given.
std::vector<std::uint32_t> component_labels(std::size_t n, std::span<const Edge> edges,
                                            const std::vector<bool>* drop) {
  const UndirectedAdjacency adj(n, edges);
  std::vector<std::uint32_t> label(n, kUnset);
  std::vector<VertexId> queue;
  std::uint32_t next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    queue.assign(1, s);
    while (!queue.empty()) {
      const VertexId v = queue.back();
      queue.pop_back();
      for (const AdjacencyEntry& e : adj.around(v)) {
        if (drop && (*drop)[e.edge]) continue;
        if (label[e.neighbor] == kUnset) {
          label[e.neighbor] = next;
          queue.push_back(e.neighbor);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::uint32_t> two_edge_labels(std::size_t n, std::span<const Edge> edges) {
  const std::vector<bool> bridges = bridge_flags(n, edges);
  return component_labels(n, edges, &bridges);
}

}  // namespace

Partition::Partition(std::span<const std::uint32_t> class_of) : class_of_(class_of.size()) {
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  for (VertexId v = 0; v < class_of.size(); ++v) {
    auto [it, inserted] = renumber.try_emplace(class_of[v], static_cast<std::uint32_t>(classes_.size()));
    if (inserted) classes_.emplace_back();
    class_of_[v] = it->second;
    classes_[it->second].push_back(v);
  }
}

Partition Partition::single_class(std::size_t n) {
  const std::vector<std::uint32_t> labels(n, 0);
  return Partition(labels);
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0u);
  return Partition(labels);
}

Partition Partition::from_classes(std::size_t n, const std::vector<std::vector<VertexId>>& classes) {
  std::vector<std::uint32_t> labels(n, kUnset);
  for (std::uint32_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw InvalidArgument("empty partition class");
    for (VertexId v : classes[c]) {
      if (v >= n) throw InvalidArgument("partition vertex out of range");
      if (labels[v] != kUnset) throw InvalidArgument("partition classes overlap");
      labels[v] = c;
    }
  }
  if (std::find(labels.begin(), labels.end(), kUnset) != labels.end()) {
    throw InvalidArgument("partition classes do not cover the universe");
  }
  return Partition(labels);
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.universe_size() != universe_size()) return false;
  for (const auto& cls : classes_) {
    for (VertexId v : cls) {
      if (!coarser.same_class(v, cls.front())) return false;
    }
  }
  return true;
}

Partition strongly_connected_components(const Digraph& g, ArcId excluded) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> order(n, kUnset);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> component(n, kUnset);
  std::vector<VertexId> pending;  // Tarjan's vertex stack

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t counter = 0;
  std::uint32_t components = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (order[root] != kUnset) continue;
    order[root] = low[root] = counter++;
    pending.push_back(root);
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto out = g.out_arcs(f.v);
      if (f.next < out.size()) {
        const ArcId a = out[f.next++];
        if (a == excluded) continue;
        const VertexId w = g.arc(a).target;
        if (order[w] == kUnset) {
          order[w] = low[w] = counter++;
          pending.push_back(w);
          stack.push_back({w, 0});
        } else if (component[w] == kUnset) {
          low[f.v] = std::min(low[f.v], order[w]);
        }
        continue;
      }
      const VertexId v = f.v;
      stack.pop_back();
      if (!stack.empty()) {
        const VertexId parent = stack.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] == order[v]) {
        VertexId w;
        do {
          w = pending.back();
          pending.pop_back();
          component[w] = components;
        } while (w != v);
        ++components;
      }
    }
  }
  return Partition(component);
}

bool is_strongly_connected(const Digraph& g, ArcId excluded) {
  return strongly_connected_components(g, excluded).class_count() <= 1;
}

Partition connected_components(const UndirectedGraph& u) {
  return Partition(component_labels(u.vertex_count(), u.edges(), nullptr));
}

std::vector<UndirectedGraph::Edge> bridges_undirected(const UndirectedGraph& u) {
  const std::vector<bool> flags = bridge_flags(u.vertex_count(), u.edges());
  std::vector<Edge> result;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) result.push_back(u.edges()[i]);
  }
  return result;
}

Partition two_edge_connected_components(const UndirectedGraph& u) {
  return Partition(two_edge_labels(u.vertex_count(), u.edges()));
}

Partition twinless_strongly_connected_components(const Digraph& g, ArcId excluded) {
  const Partition scc = strongly_connected_components(g, excluded);
  // Underlying edges inside SCCs, one per adjacent pair: an arc stands for
  // its pair unless its twin is present and is the one with u < v.
  std::vector<Edge> edges;
  edges.reserve(g.arc_count());
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (a == excluded) continue;
    const Arc& arc = g.arc(a);
    if (!scc.same_class(arc.source, arc.target)) continue;
    const ArcId t = g.twin(a);
    const bool twin_present = t != kNoArc && t != excluded;
    if (twin_present && arc.source > arc.target) continue;
    edges.emplace_back(std::min(arc.source, arc.target), std::max(arc.source, arc.target));
  }
  return Partition(two_edge_labels(g.vertex_count(), edges));
}

bool is_twinless_strongly_connected(const Digraph& g, ArcId excluded) {
  if (!is_strongly_connected(g, excluded)) return false;
  return twinless_strongly_connected_components(g, excluded).class_count() <= 1;
}

CondensationTree condensation_tscc(const Digraph& g) {
  if (!is_strongly_connected(g)) throw PreconditionError("input is not strongly connected");

  CondensationTree tree;
  tree.nodes = twinless_strongly_connected_components(g);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<TwinPair>> joined;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    std::uint32_t ca = tree.nodes.class_of(g.arc(a).source);
    std::uint32_t cb = tree.nodes.class_of(g.arc(a).target);
    if (ca == cb) continue;
    if (ca > cb) std::swap(ca, cb);
    auto& pairs = joined[{ca, cb}];
    const ArcId t = g.twin(a);
    if (t != kNoArc && a < t) pairs.push_back({a, t});
  }
  for (auto& [key, pairs] : joined) tree.edges.push_back({key.first, key.second, std::move(pairs)});

  const std::size_t k = tree.nodes.class_count();
  std::vector<Edge> contracted;
  for (const auto& e : tree.edges) contracted.emplace_back(e.a, e.b);
  const auto labels = component_labels(k, contracted, nullptr);
  const bool connected = std::all_of(labels.begin(), labels.end(), [](std::uint32_t l) { return l == 0; });
  tree.is_tree = connected && tree.edges.size() + 1 == k;
  tree.every_edge_twinned =
      std::all_of(tree.edges.begin(), tree.edges.end(), [](const auto& e) { return !e.twin_pairs.empty(); });
  return tree;
}

}  // namespace twinless
