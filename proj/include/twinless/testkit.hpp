#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>

#include "twinless/blocks.hpp"
#include "twinless/connectivity.hpp"
#include "twinless/graph.hpp"

// Brute-force oracles built straight from the definitions, plus seeded
// random graph generation. Oracles use plain BFS reachability and share no
// code with the linear-time algorithms they check.
namespace twinless::testkit {

inline constexpr std::size_t kOracleTwinPairLimit = 20;
// Cap on arc_count * 2^(twin pairs) for oracle_two_edge_twinless_blocks.
inline constexpr std::size_t kOracleWorkLimit = std::size_t{1} << 26;

// True iff some choice of one arc from every twin pair (all other arcs
// kept) makes u and v mutually reachable. Equivalently: a u->v path and a
// v->u path exist whose union contains no twin pair. Enumerates 2^p
// choices; PreconditionError if p > kOracleTwinPairLimit.
bool oracle_twinless_related(const Digraph& g, VertexId u, VertexId v);

// Partition induced by oracle_twinless_related. The relation is checked to
// be an equivalence; a violation throws std::logic_error.
Partition oracle_tscc(const Digraph& g);

// Pairs that stay oracle-related in G \ {e} for every arc e; classes of
// size >= 2.
BlockSet oracle_two_edge_twinless_blocks(const Digraph& g);

enum class Shape { any, strongly_connected, twinless_strongly_connected };

Shape parse_shape(std::string_view name);
std::string_view shape_name(Shape s);

struct GeneratorConfig {
  std::size_t min_n = 1;
  std::size_t max_n = 1;
  std::size_t min_m = 0;
  std::size_t max_m = 0;
  // Probability that an arc added beyond the connectivity skeleton is the
  // reverse of an existing twin-free arc.
  double twin_density = 0.0;
  std::uint64_t seed = 0;
  Shape shape = Shape::any;
  std::size_t max_twin_pairs = std::numeric_limits<std::size_t>::max();
};

// Deterministic in `cfg` on every platform (mt19937_64 with hand-rolled
// range reduction). Strongly connected shapes grow a random ear
// decomposition and then add arcs; the twinless shape only uses ears that
// keep the underlying graph 2-edge-connected. Vertices are labelled 1..n.
// Throws InvalidArgument when no graph fits the configuration.
Digraph random_digraph(const GeneratorConfig& cfg);

}  // namespace twinless::testkit
