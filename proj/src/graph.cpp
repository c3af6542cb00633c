#include "twinless/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "twinless/errors.hpp"

namespace twinless {

namespace {

bool is_integer_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_leading_zeros(std::string_view s) {
  const auto first = s.find_first_not_of('0');
  return first == std::string_view::npos ? s.substr(s.size() - 1) : s.substr(first);
}

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void build_csr(std::size_t n, std::span<const Arc> arcs, bool by_source,
               std::vector<std::size_t>& offsets, std::vector<ArcId>& ids) {
  offsets.assign(n + 1, 0);
  for (const Arc& a : arcs) ++offsets[(by_source ? a.source : a.target) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  ids.resize(arcs.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (ArcId id = 0; id < arcs.size(); ++id) {
    const VertexId v = by_source ? arcs[id].source : arcs[id].target;
    ids[fill[v]++] = id;
  }
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  const bool ai = is_integer_token(a);
  const bool bi = is_integer_token(b);
  if (ai != bi) return ai;
  if (ai) {
    const auto sa = strip_leading_zeros(a);
    const auto sb = strip_leading_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

Digraph::Digraph(std::vector<std::string> labels, std::vector<Arc> arcs)
    : labels_(std::move(labels)), arcs_(std::move(arcs)) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], v).second) {
      throw InvalidArgument("duplicate vertex label '" + labels_[v] + "'");
    }
  }

  std::unordered_map<std::uint64_t, ArcId> by_pair;
  by_pair.reserve(arcs_.size());
  for (ArcId id = 0; id < arcs_.size(); ++id) {
    const Arc& a = arcs_[id];
    if (a.source >= n || a.target >= n) throw InvalidArgument("arc endpoint out of range");
    if (a.source == a.target) throw InvalidArgument("self-loop at '" + labels_[a.source] + "'");
    if (!by_pair.emplace(pair_key(a.source, a.target), id).second) {
      throw InvalidArgument("duplicate arc " + labels_[a.source] + " -> " + labels_[a.target]);
    }
  }

  twin_.assign(arcs_.size(), kNoArc);
  for (ArcId id = 0; id < arcs_.size(); ++id) {
    const auto it = by_pair.find(pair_key(arcs_[id].target, arcs_[id].source));
    if (it != by_pair.end()) twin_[id] = it->second;
  }

  build_csr(n, arcs_, true, out_offsets_, out_ids_);
  build_csr(n, arcs_, false, in_offsets_, in_ids_);
}

Digraph Digraph::with_numbered_vertices(std::size_t n, std::vector<Arc> arcs) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return Digraph(std::move(labels), std::move(arcs));
}

std::optional<VertexId> Digraph::find_vertex(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArcId> Digraph::find_arc(VertexId source, VertexId target) const {
  if (source >= vertex_count()) return std::nullopt;
  for (ArcId id : out_arcs(source)) {
    if (arcs_[id].target == target) return id;
  }
  return std::nullopt;
}

VertexId Digraph::vertex(std::string_view label) const {
  const auto v = find_vertex(label);
  if (!v) throw InvalidArgument("unknown vertex '" + std::string(label) + "'");
  return *v;
}

ArcId Digraph::arc_between(std::string_view source, std::string_view target) const {
  const auto a = find_arc(vertex(source), vertex(target));
  if (!a) {
    throw InvalidArgument("no arc " + std::string(source) + " -> " + std::string(target));
  }
  return *a;
}

UndirectedGraph::UndirectedGraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (Edge& e : edges) {
    if (e.first >= n || e.second >= n) throw InvalidArgument("edge endpoint out of range");
    if (e.first == e.second) throw InvalidArgument("self-edge in undirected graph");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool UndirectedGraph::has_edge(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

ParseResult parse_edge_list(std::string_view text, ParseMode mode) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Arc> arcs;
  std::unordered_set<std::uint64_t> seen;
  ParseResult result;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = index.try_emplace(std::string(token), static_cast<VertexId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    constexpr std::string_view kSpace = " \t\r\f\v";
    while (true) {
      i = line.find_first_not_of(kSpace, i);
      if (i == std::string_view::npos) break;
      std::size_t j = line.find_first_of(kSpace, i);
      if (j == std::string_view::npos) j = line.size();
      tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'SOURCE TARGET', got " + std::to_string(tokens.size()) + " tokens");
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(line_no, "self-loop at '" + std::string(tokens[0]) + "'");
    }
    const VertexId u = intern(tokens[0]);
    const VertexId v = intern(tokens[1]);
    if (!seen.insert(pair_key(u, v)).second) {
      if (mode == ParseMode::strict) {
        throw ParseError(line_no, "duplicate arc " + labels[u] + " -> " + labels[v]);
      }
      ++result.dropped_duplicates;
      continue;
    }
    arcs.push_back({u, v});
  }

  result.graph = Digraph(std::move(labels), std::move(arcs));
  return result;
}

std::string serialize(const Digraph& g) {
  std::vector<ArcId> order(g.arc_count());
  std::iota(order.begin(), order.end(), ArcId{0});
  std::sort(order.begin(), order.end(), [&](ArcId x, ArcId y) {
    const Arc& a = g.arc(x);
    const Arc& b = g.arc(y);
    if (a.source != b.source) return label_less(g.label(a.source), g.label(b.source));
    return label_less(g.label(a.target), g.label(b.target));
  });

  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Arc& a = g.arc(order[i]);
    if (i) out += '\n';
    out += g.label(a.source);
    out += ' ';
    out += g.label(a.target);
  }
  return out;
}

std::vector<TwinPair> twin_pairs(const Digraph& g) {
  std::vector<TwinPair> pairs;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const ArcId b = g.twin(a);
    if (b != kNoArc && a < b) pairs.push_back({a, b});
  }
  return pairs;
}

Digraph remove_arcs(const Digraph& g, std::span<const ArcId> drop) {
  std::vector<bool> dropped(g.arc_count(), false);
  for (ArcId a : drop) {
    if (a >= g.arc_count()) throw InvalidArgument("unknown arc id " + std::to_string(a));
    dropped[a] = true;
  }
  std::vector<Arc> kept;
  kept.reserve(g.arc_count());
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (!dropped[a]) kept.push_back(g.arc(a));
  }
  return Digraph({g.labels().begin(), g.labels().end()}, std::move(kept));
}

UndirectedGraph underlying_graph(const Digraph& g) {
  std::vector<UndirectedGraph::Edge> edges;
  edges.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) edges.emplace_back(a.source, a.target);
  return UndirectedGraph(g.vertex_count(), std::move(edges));
}

Digraph induced_subgraph(const Digraph& g, std::span<const VertexId> keep) {
  constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> local(g.vertex_count(), kAbsent);
  for (VertexId v : keep) {
    if (v >= g.vertex_count()) throw InvalidArgument("unknown vertex id " + std::to_string(v));
    local[v] = 0;
  }
  std::vector<std::string> labels;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (local[v] == kAbsent) continue;
    local[v] = static_cast<VertexId>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (local[a.source] != kAbsent && local[a.target] != kAbsent) {
      arcs.push_back({local[a.source], local[a.target]});
    }
  }
  return Digraph(std::move(labels), std::move(arcs));
}

bool same_labelled_graph(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    if (!b.find_vertex(a.label(v))) return false;
  }
  for (const Arc& arc : a.arcs()) {
    const auto s = b.find_vertex(a.label(arc.source));
    const auto t = b.find_vertex(a.label(arc.target));
    if (!b.find_arc(*s, *t)) return false;
  }
  return true;
}

}  // namespace twinless
