#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twinless/connectivity.hpp"
#include "twinless/graph.hpp"
#include "twinless/parallel.hpp"

namespace twinless {

// Pairwise disjoint vertex sets of size >= 2. Stored in id order (vertices
// ascending, blocks by first vertex); `to_labels` yields the report order.
class BlockSet {
 public:
  BlockSet() = default;
  // Throws InvalidArgument if blocks overlap or one has fewer than 2 vertices.
  explicit BlockSet(std::vector<std::vector<VertexId>> blocks);

  // Classes of `p` with at least `min_size` (>= 2) vertices.
  static BlockSet from_partition(const Partition& p, std::size_t min_size = 2);

  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }
  const std::vector<std::vector<VertexId>>& blocks() const noexcept { return blocks_; }

  // The block holding v, if any.
  const std::vector<VertexId>* block_of(VertexId v) const;
  bool together(VertexId u, VertexId v) const;
  // Every block lies inside a class of `p`.
  bool within(const Partition& p) const;
  // Every block lies inside some block of `other`.
  bool within(const BlockSet& other) const;

  // Labels sorted with label_less inside each block; blocks sorted by their
  // first label.
  std::vector<std::vector<std::string>> to_labels(const Digraph& g) const;

  friend bool operator==(const BlockSet&, const BlockSet&) = default;

 private:
  std::vector<std::vector<VertexId>> blocks_;
};

// Coarsest common refinement. Throws InvalidArgument on universe mismatch.
Partition partition_meet(const Partition& p, const Partition& q);

// n x n bit matrix; entry (v, w) stays set while no twinless bridge seen so
// far has put v and w into different TSCCs.
class SeparationMatrix {
 public:
  explicit SeparationMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool get(VertexId v, VertexId w) const { return (bits_[index(v, w) / 64] >> (index(v, w) % 64)) & 1u; }
  void clear(VertexId v, VertexId w) { bits_[index(v, w) / 64] &= ~(std::uint64_t{1} << (index(v, w) % 64)); }
  bool is_symmetric() const;

 private:
  std::size_t index(VertexId v, VertexId w) const { return static_cast<std::size_t>(v) * n_ + w; }

  std::size_t n_;
  std::vector<std::uint64_t> bits_;
};

inline constexpr std::size_t kMatrixVertexLimit = 20000;
inline constexpr std::size_t kSubsetEnumerationLimit = 1000000;

// 2-edge blocks as a partition (vertices outside every block are
// singletons): the meet, over all strong bridges e, of the SCCs of G \ {e}.
// Requires g strongly connected.
Partition two_edge_block_partition(const Digraph& g, const ExecutionPolicy& policy = {});
BlockSet two_edge_blocks(const Digraph& g, const ExecutionPolicy& policy = {});

// Matrix algorithm. Requires g twinless strongly connected and at most
// kMatrixVertexLimit vertices (PreconditionError otherwise). Without
// twinless bridges the whole vertex set is one block. Otherwise each
// twinless bridge e clears A[v][w] for v, w in different TSCCs of G \ {e};
// pairs with A[v][w] and A[w][v] set are linked and the linked components
// of size > 1 are returned.
BlockSet twinless_blocks_by_matrix(const Digraph& g, const ExecutionPolicy& policy = {});

enum class RefineMode {
  // Refines the 2-edge blocks only with twinless bridges that are not
  // strong bridges. Exact on 2-edge-connected graphs only; kept to document
  // that skipping strong bridges is unsound in general.
  faithful,
  // Refines with every twinless bridge.
  safe,
};

// Refinement algorithm: start from the 2-edge block partition and meet with
// TSCC(G \ {e}) for the selected twinless bridges. Requires g twinless
// strongly connected.
BlockSet twinless_blocks_by_refinement(const Digraph& g, RefineMode mode = RefineMode::safe,
                                       const ExecutionPolicy& policy = {});

enum class TwinlessBlockAlgorithm { matrix, refine_safe, refine_faithful };

// The 2-edge-twinless blocks of an arbitrary digraph: each TSCC with at
// least two vertices is solved on its induced subgraph with the chosen
// algorithm (safe refinement by default), and the results are combined.
BlockSet two_edge_twinless_blocks(const Digraph& g, const ExecutionPolicy& policy = {});
BlockSet two_edge_twinless_blocks(const Digraph& g, TwinlessBlockAlgorithm algorithm,
                                  const ExecutionPolicy& policy = {});

// Meet over every arc subset L with |L| < k of TSCC(G \ L). Throws
// InvalidArgument for k < 1 and PreconditionError if C(m, k-1) exceeds
// kSubsetEnumerationLimit.
BlockSet k_edge_twinless_blocks_bruteforce(const Digraph& g, std::size_t k, const ExecutionPolicy& policy = {});

}  // namespace twinless
