#include "twinless/testkit.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "twinless/errors.hpp"

namespace twinless::testkit {

namespace {

using Matrix = std::vector<std::vector<bool>>;

std::vector<TwinPair> checked_twin_pairs(const Digraph& g) {
  auto pairs = twin_pairs(g);
  if (pairs.size() > kOracleTwinPairLimit) {
    throw PreconditionError("oracle budget exceeded: " + std::to_string(pairs.size()) + " twin pairs (limit " +
                            std::to_string(kOracleTwinPairLimit) + ")");
  }
  return pairs;
}

// Keeps every arc except, per twin pair, the one not chosen by `mask`.
std::vector<bool> orientation(const Digraph& g, const std::vector<TwinPair>& pairs, std::uint64_t mask) {
  std::vector<bool> active(g.arc_count(), true);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    active[(mask >> i) & 1u ? pairs[i].forward : pairs[i].backward] = false;
  }
  return active;
}

std::vector<bool> reachable_from(const Digraph& g, const std::vector<bool>& active, VertexId s) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> frontier{s};
  seen[s] = true;
  while (!frontier.empty()) {
    const VertexId v = frontier.back();
    frontier.pop_back();
    for (ArcId a : g.out_arcs(v)) {
      if (!active[a]) continue;
      const VertexId w = g.arc(a).target;
      if (!seen[w]) {
        seen[w] = true;
        frontier.push_back(w);
      }
    }
  }
  return seen;
}

Matrix related_matrix(const Digraph& g) {
  const auto pairs = checked_twin_pairs(g);
  const std::size_t n = g.vertex_count();
  Matrix related(n, std::vector<bool>(n, false));
  for (VertexId v = 0; v < n; ++v) related[v][v] = true;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    const auto active = orientation(g, pairs, mask);
    Matrix reach(n);
    for (VertexId v = 0; v < n; ++v) reach[v] = reachable_from(g, active, v);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (reach[u][v] && reach[v][u]) related[u][v] = true;
      }
    }
  }
  return related;
}

Partition partition_of_equivalence(const Matrix& related) {
  const std::size_t n = related.size();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (related[u][v] != related[v][u]) throw std::logic_error("oracle relation is not symmetric");
      if (!related[u][v]) continue;
      for (VertexId w = 0; w < n; ++w) {
        if (related[v][w] && !related[u][w]) throw std::logic_error("oracle relation is not transitive");
      }
    }
  }
  std::vector<std::uint32_t> label(n);
  for (VertexId v = 0; v < n; ++v) {
    VertexId first = 0;
    while (!related[v][first]) ++first;
    label[v] = first;
  }
  return Partition(label);
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi] without relying on std::uniform_int_distribution,
  // whose output differs between standard libraries.
  std::size_t between(std::size_t lo, std::size_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return lo + engine_();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::size_t>(x % range);
  }

  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[between(0, i - 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

class ArcSet {
 public:
  explicit ArcSet(std::size_t n) : n_(n) {}

  bool has(VertexId u, VertexId v) const { return present_.count(key(u, v)) != 0; }
  std::size_t twin_pairs() const { return twins_; }
  std::vector<Arc>& arcs() { return arcs_; }
  std::size_t size() const { return arcs_.size(); }

  void add(VertexId u, VertexId v) {
    present_.insert(key(u, v));
    if (has(v, u)) ++twins_;
    arcs_.push_back({u, v});
  }

 private:
  std::uint64_t key(VertexId u, VertexId v) const { return static_cast<std::uint64_t>(u) * n_ + v; }

  std::size_t n_;
  std::unordered_set<std::uint64_t> present_;
  std::vector<Arc> arcs_;
  std::size_t twins_ = 0;
};

[[noreturn]] void infeasible(const std::string& why) {
  throw InvalidArgument("infeasible generator configuration: " + why);
}

// Initial cycle plus ears over a random vertex order; uses exactly n + ears
// arcs. Every ear brings at least one new vertex, so the result is strongly
// connected. With `twinless`, no ear closes a 2-cycle, which keeps the
// underlying graph 2-edge-connected.
void grow_ear_decomposition(Random& rng, std::size_t n, std::size_t m, bool twinless, std::size_t twin_budget,
                            ArcSet& out) {
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);

  const std::size_t min_cycle = (twinless || twin_budget == 0) ? 3 : 2;
  if (n < min_cycle) infeasible("cannot build the connectivity skeleton on " + std::to_string(n) + " vertices");
  const std::size_t ears = rng.between(0, std::min(m - n, n - min_cycle));
  const std::size_t cycle = ears == 0 ? n : rng.between(min_cycle, n - ears);

  std::vector<std::size_t> ear_sizes(ears, 1);
  for (std::size_t left = n - cycle - ears; left > 0; --left) ++ear_sizes[rng.between(0, ears - 1)];

  for (std::size_t i = 0; i < cycle; ++i) out.add(order[i], order[(i + 1) % cycle]);

  std::size_t used = cycle;
  for (std::size_t k : ear_sizes) {
    const VertexId from = order[rng.between(0, used - 1)];
    VertexId to = order[rng.between(0, used - 1)];
    const bool closes_two_cycle = k == 1 && from == to;
    if (closes_two_cycle && (twinless || out.twin_pairs() >= twin_budget)) {
      while (to == from) to = order[rng.between(0, used - 1)];
    }
    VertexId prev = from;
    for (std::size_t j = 0; j < k; ++j) {
      out.add(prev, order[used + j]);
      prev = order[used + j];
    }
    out.add(prev, to);
    used += k;
  }
}

}  // namespace

bool oracle_twinless_related(const Digraph& g, VertexId u, VertexId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw InvalidArgument("vertex id out of range");
  if (u == v) return true;
  const auto pairs = checked_twin_pairs(g);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    const auto active = orientation(g, pairs, mask);
    if (reachable_from(g, active, u)[v] && reachable_from(g, active, v)[u]) return true;
  }
  return false;
}

Partition oracle_tscc(const Digraph& g) { return partition_of_equivalence(related_matrix(g)); }

BlockSet oracle_two_edge_twinless_blocks(const Digraph& g) {
  const std::size_t p = twin_pairs(g).size();
  if (p > kOracleTwinPairLimit || (g.arc_count() + 1) * (std::size_t{1} << p) > kOracleWorkLimit) {
    throw PreconditionError("oracle budget exceeded: " + std::to_string(g.arc_count()) + " arcs, " +
                            std::to_string(p) + " twin pairs");
  }
  // L = {} is included so an arc-free graph is handled like every other.
  Matrix together = related_matrix(g);
  for (ArcId e = 0; e < g.arc_count(); ++e) {
    const ArcId drop[] = {e};
    const Matrix split = related_matrix(remove_arcs(g, drop));
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!split[u][v]) together[u][v] = false;
      }
    }
  }
  return BlockSet::from_partition(partition_of_equivalence(together));
}

Shape parse_shape(std::string_view name) {
  if (name == "any") return Shape::any;
  if (name == "sc" || name == "strongly-connected") return Shape::strongly_connected;
  if (name == "tsc" || name == "twinless-strongly-connected") return Shape::twinless_strongly_connected;
  throw InvalidArgument("unknown shape '" + std::string(name) + "'");
}

std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::any:
      return "any";
    case Shape::strongly_connected:
      return "strongly-connected";
    case Shape::twinless_strongly_connected:
      return "twinless-strongly-connected";
  }
  return "any";
}

Digraph random_digraph(const GeneratorConfig& cfg) {
  if (cfg.min_n < 1 || cfg.min_n > cfg.max_n) infeasible("vertex range is empty");
  if (cfg.min_m > cfg.max_m) infeasible("arc range is empty");
  if (!(cfg.twin_density >= 0.0 && cfg.twin_density <= 1.0)) infeasible("twin density outside [0, 1]");

  Random rng(cfg.seed);
  const std::size_t n = rng.between(cfg.min_n, cfg.max_n);
  // Each unordered pair holds one arc, or two when it is a twin pair.
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t max_arcs = pairs + std::min(pairs, cfg.max_twin_pairs);
  const bool connected = cfg.shape != Shape::any;
  const bool twinless = cfg.shape == Shape::twinless_strongly_connected;
  if (twinless && n == 2) infeasible("no twinless strongly connected graph has 2 vertices");

  const std::size_t lower = std::max(cfg.min_m, connected && n > 1 ? n : std::size_t{0});
  const std::size_t upper = std::min(cfg.max_m, max_arcs);
  if (lower > upper) {
    infeasible("no arc count in [" + std::to_string(cfg.min_m) + ", " + std::to_string(cfg.max_m) +
               "] fits shape " + std::string(shape_name(cfg.shape)) + " on " + std::to_string(n) + " vertices");
  }
  const std::size_t m = rng.between(lower, upper);

  ArcSet arcs(n);
  if (connected && n > 1) grow_ear_decomposition(rng, n, m, twinless, cfg.max_twin_pairs, arcs);

  // Twin-creating picks are avoided until plain picks keep failing.
  const std::size_t relax_after = 32 * m + 64;
  const std::size_t give_up = 4096 * (m + 16);
  std::size_t attempts = 0;
  while (arcs.size() < m) {
    if (++attempts > give_up) infeasible("could not place " + std::to_string(m) + " arcs");
    const bool room_for_twin = arcs.twin_pairs() < cfg.max_twin_pairs;
    if (room_for_twin && arcs.size() > 0 && cfg.twin_density > 0 && rng.chance(cfg.twin_density)) {
      const Arc a = arcs.arcs()[rng.between(0, arcs.size() - 1)];
      if (!arcs.has(a.target, a.source)) arcs.add(a.target, a.source);
      continue;
    }
    const auto u = static_cast<VertexId>(rng.between(0, n - 1));
    const auto v = static_cast<VertexId>(rng.between(0, n - 1));
    if (u == v || arcs.has(u, v)) continue;
    if (arcs.has(v, u) && (!room_for_twin || attempts < relax_after)) continue;
    arcs.add(u, v);
  }

  rng.shuffle(arcs.arcs());
  Digraph g = Digraph::with_numbered_vertices(n, std::move(arcs.arcs()));
  if (cfg.shape == Shape::strongly_connected && !is_strongly_connected(g)) {
    throw std::logic_error("generator produced a graph that is not strongly connected");
  }
  if (twinless && !is_twinless_strongly_connected(g)) {
    throw std::logic_error("generator produced a graph that is not twinless strongly connected");
  }
  return g;
}

}  // namespace twinless::testkit
