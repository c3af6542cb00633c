#pragma once

#include <cstddef>
#include <vector>

#include "twinless/graph.hpp"
#include "twinless/parallel.hpp"

namespace twinless {

struct BridgeReport {
  std::vector<ArcId> strong_bridges;
  std::vector<ArcId> twinless_bridges;

  std::size_t b_s() const noexcept { return strong_bridges.size(); }
  std::size_t b_t() const noexcept { return twinless_bridges.size(); }
};

// Arcs whose removal leaves g not strongly connected, ascending by id.
// Requires g strongly connected (PreconditionError otherwise).
//
// Each candidate arc is removed and strong connectivity recomputed. Arcs
// outside both BFS trees rooted at vertex 0 (forward and reverse) cannot be
// strong bridges, so at most 2n-2 arcs are rechecked.
std::vector<ArcId> strong_bridges(const Digraph& g, const ExecutionPolicy& policy = {});

// Arcs whose removal leaves g not twinless strongly connected, ascending by
// id. Requires g twinless strongly connected.
//
// Candidates are the strong-bridge candidates plus every twin-free arc whose
// underlying edge lies in a two-forest certificate of the underlying graph;
// any other arc leaves both strong connectivity and the underlying
// 2-edge-connectivity intact. Candidates are rechecked from scratch.
std::vector<ArcId> twinless_bridges(const Digraph& g, const ExecutionPolicy& policy = {});

// Both lists; requires g twinless strongly connected.
BridgeReport bridge_report(const Digraph& g, const ExecutionPolicy& policy = {});

}  // namespace twinless
