#include "twinless/blocks.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "twinless/cuts.hpp"
#include "twinless/errors.hpp"

namespace twinless {

namespace {

// Meet of `base` with the TSCC or SCC partitions of G \ {e} for each e.
Partition refine_by_removal(const Digraph& g, Partition base, const std::vector<ArcId>& arcs, bool twinless,
                            const ExecutionPolicy& policy) {
  std::vector<Partition> parts(arcs.size());
  parallel_for(arcs.size(), policy, [&](std::size_t i) {
    parts[i] = twinless ? twinless_strongly_connected_components(g, arcs[i])
                        : strongly_connected_components(g, arcs[i]);
  });
  for (const Partition& p : parts) base = partition_meet(base, p);
  return base;
}

void require_twinless_strongly_connected(const Digraph& g) {
  if (!is_twinless_strongly_connected(g)) throw PreconditionError("input is not twinless strongly connected");
}

BlockSet whole_vertex_set(const Digraph& g) {
  return BlockSet::from_partition(Partition::single_class(g.vertex_count()));
}

// C(m, r), saturating at limit + 1.
std::size_t binomial_capped(std::size_t m, std::size_t r, std::size_t limit) {
  if (r > m) return 0;
  r = std::min(r, m - r);
  long double value = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    value = value * static_cast<long double>(m - r + i) / static_cast<long double>(i);
    if (value > static_cast<long double>(limit)) return limit + 1;
  }
  return static_cast<std::size_t>(value + 0.5L);
}

}  // namespace

BlockSet::BlockSet(std::vector<std::vector<VertexId>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.size() < 2) throw InvalidArgument("block with fewer than 2 vertices");
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw InvalidArgument("repeated vertex in block");
  }
  std::sort(blocks_.begin(), blocks_.end());
  std::vector<VertexId> all;
  for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw InvalidArgument("blocks overlap");
}

BlockSet BlockSet::from_partition(const Partition& p, std::size_t min_size) {
  std::vector<std::vector<VertexId>> blocks;
  for (const auto& cls : p.classes()) {
    if (cls.size() >= std::max<std::size_t>(2, min_size)) blocks.push_back(cls);
  }
  return BlockSet(std::move(blocks));
}

const std::vector<VertexId>* BlockSet::block_of(VertexId v) const {
  for (const auto& b : blocks_) {
    if (std::binary_search(b.begin(), b.end(), v)) return &b;
  }
  return nullptr;
}

bool BlockSet::together(VertexId u, VertexId v) const {
  const auto* b = block_of(u);
  return b && std::binary_search(b->begin(), b->end(), v);
}

bool BlockSet::within(const Partition& p) const {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](const auto& b) {
    return std::all_of(b.begin(), b.end(), [&](VertexId v) { return p.same_class(v, b.front()); });
  });
}

bool BlockSet::within(const BlockSet& other) const {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](const auto& b) {
    return std::all_of(b.begin(), b.end(), [&](VertexId v) { return other.together(v, b.front()); });
  });
}

std::vector<std::vector<std::string>> BlockSet::to_labels(const Digraph& g) const {
  std::vector<std::vector<std::string>> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    auto& labels = out.emplace_back();
    for (VertexId v : b) labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end(), label_less);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return label_less(a.front(), b.front()); });
  return out;
}

Partition partition_meet(const Partition& p, const Partition& q) {
  if (p.universe_size() != q.universe_size()) throw InvalidArgument("partition universes differ");
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  std::vector<std::uint32_t> labels(p.universe_size());
  for (VertexId v = 0; v < labels.size(); ++v) {
    const std::uint64_t key = (static_cast<std::uint64_t>(p.class_of(v)) << 32) | q.class_of(v);
    labels[v] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size())).first->second;
  }
  return Partition(labels);
}

SeparationMatrix::SeparationMatrix(std::size_t n) : n_(n), bits_((n * n + 63) / 64, ~std::uint64_t{0}) {}

bool SeparationMatrix::is_symmetric() const {
  for (VertexId v = 0; v < n_; ++v) {
    for (VertexId w = v + 1; w < n_; ++w) {
      if (get(v, w) != get(w, v)) return false;
    }
  }
  return true;
}

Partition two_edge_block_partition(const Digraph& g, const ExecutionPolicy& policy) {
  const std::vector<ArcId> bridges = strong_bridges(g, policy);
  return refine_by_removal(g, Partition::single_class(g.vertex_count()), bridges, false, policy);
}

BlockSet two_edge_blocks(const Digraph& g, const ExecutionPolicy& policy) {
  return BlockSet::from_partition(two_edge_block_partition(g, policy));
}

BlockSet twinless_blocks_by_matrix(const Digraph& g, const ExecutionPolicy& policy) {
  require_twinless_strongly_connected(g);
  const std::size_t n = g.vertex_count();
  if (n > kMatrixVertexLimit) {
    throw PreconditionError("matrix algorithm refuses " + std::to_string(n) + " vertices (limit " +
                            std::to_string(kMatrixVertexLimit) + "); use the refinement algorithm");
  }

  const std::vector<ArcId> bridges = twinless_bridges(g, policy);
  if (bridges.empty()) return whole_vertex_set(g);

  std::vector<Partition> split(bridges.size());
  parallel_for(bridges.size(), policy,
               [&](std::size_t i) { split[i] = twinless_strongly_connected_components(g, bridges[i]); });

  SeparationMatrix matrix(n);
  for (const Partition& p : split) {
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w = 0; w < n; ++w) {
        if (!p.same_class(v, w)) matrix.clear(v, w);
      }
    }
  }
  if (!matrix.is_symmetric()) throw std::logic_error("separation matrix is not symmetric");

  // Connected components of the auxiliary graph linking v, w whenever both
  // A[v][w] and A[w][v] are set, explored without materializing its edges.
  std::vector<std::uint32_t> component(n, UINT32_MAX);
  std::vector<VertexId> stack;
  std::uint32_t next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (component[s] != UINT32_MAX) continue;
    component[s] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w = 0; w < n; ++w) {
        if (w == v || component[w] != UINT32_MAX) continue;
        if (matrix.get(v, w) && matrix.get(w, v)) {
          component[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return BlockSet::from_partition(Partition(component));
}

BlockSet twinless_blocks_by_refinement(const Digraph& g, RefineMode mode, const ExecutionPolicy& policy) {
  require_twinless_strongly_connected(g);
  const std::vector<ArcId> twinless = twinless_bridges(g, policy);
  if (twinless.empty()) return whole_vertex_set(g);

  const std::vector<ArcId> strong = strong_bridges(g, policy);
  const Partition two_edge = refine_by_removal(g, Partition::single_class(g.vertex_count()), strong, false, policy);

  std::vector<ArcId> selected;
  for (ArcId e : twinless) {
    const bool is_strong = std::binary_search(strong.begin(), strong.end(), e);
    if (mode == RefineMode::safe || !is_strong) selected.push_back(e);
  }
  return BlockSet::from_partition(refine_by_removal(g, two_edge, selected, true, policy));
}

BlockSet two_edge_twinless_blocks(const Digraph& g, const ExecutionPolicy& policy) {
  return two_edge_twinless_blocks(g, TwinlessBlockAlgorithm::refine_safe, policy);
}

BlockSet two_edge_twinless_blocks(const Digraph& g, TwinlessBlockAlgorithm algorithm, const ExecutionPolicy& policy) {
  const Partition tscc = twinless_strongly_connected_components(g);
  std::vector<std::vector<VertexId>> blocks;
  for (const auto& cls : tscc.classes()) {
    if (cls.size() < 2) continue;
    const Digraph sub = induced_subgraph(g, cls);
    BlockSet local_blocks;
    switch (algorithm) {
      case TwinlessBlockAlgorithm::matrix:
        local_blocks = twinless_blocks_by_matrix(sub, policy);
        break;
      case TwinlessBlockAlgorithm::refine_safe:
        local_blocks = twinless_blocks_by_refinement(sub, RefineMode::safe, policy);
        break;
      case TwinlessBlockAlgorithm::refine_faithful:
        local_blocks = twinless_blocks_by_refinement(sub, RefineMode::faithful, policy);
        break;
    }
    for (const auto& local : local_blocks.blocks()) {
      auto& block = blocks.emplace_back();
      for (VertexId v : local) block.push_back(cls[v]);
    }
  }
  return BlockSet(std::move(blocks));
}

BlockSet k_edge_twinless_blocks_bruteforce(const Digraph& g, std::size_t k, const ExecutionPolicy& policy) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  const std::size_t m = g.arc_count();
  if (binomial_capped(m, k - 1, kSubsetEnumerationLimit) > kSubsetEnumerationLimit) {
    throw PreconditionError("C(" + std::to_string(m) + ", " + std::to_string(k - 1) + ") arc subsets exceed the " +
                            std::to_string(kSubsetEnumerationLimit) + " enumeration budget");
  }

  Partition result = twinless_strongly_connected_components(g);
  for (std::size_t size = 1; size < k && size <= m; ++size) {
    // Subsets of one size are enumerated in lexicographic order; each batch
    // of subsets is solved in parallel and folded in order.
    std::vector<ArcId> subset(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = static_cast<ArcId>(i);
    bool more = true;
    while (more) {
      std::vector<std::vector<ArcId>> batch;
      constexpr std::size_t kBatch = 4096;
      while (more && batch.size() < kBatch) {
        batch.push_back(subset);
        std::size_t i = size;
        while (i > 0 && subset[i - 1] == m - size + i - 1) --i;
        if (i == 0) {
          more = false;
        } else {
          ++subset[i - 1];
          for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
      }
      std::vector<Partition> parts(batch.size());
      parallel_for(batch.size(), policy, [&](std::size_t i) {
        parts[i] = twinless_strongly_connected_components(remove_arcs(g, batch[i]));
      });
      for (const Partition& p : parts) result = partition_meet(result, p);
    }
  }
  return BlockSet::from_partition(result);
}

}  // namespace twinless
