// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "twinless/blocks.hpp"
#include "twinless/connectivity.hpp"
#include "twinless/cuts.hpp"
#include "twinless/fixtures.hpp"
#include "twinless/testkit.hpp"

using namespace twinless;
using json = nlohmann::json;

namespace {

// Limits, pinned.
constexpr double kFigureBudgetSeconds = 1.0;
constexpr std::size_t kOracleGraphs = 500;
constexpr double kOracleBudgetSeconds = 60.0;
constexpr std::size_t kFaithfulGraphs = 200;
constexpr std::size_t kPerfVertices = 2000;
constexpr std::size_t kPerfArcs = 10000;
constexpr double kPerfBudgetSeconds = 10.0;
constexpr double kPerfMaxRatio = 4.0;
constexpr int kPerfRepeats = 3;
constexpr std::uint64_t kPerfSeed = 2024;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, std::string_view input = "") {
  std::istringstream in{std::string(input)};
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string without_timing(const std::string& text) {
  static const std::regex timing(R"(\n *"elapsed_ms": [^\n]*)");
  return std::regex_replace(text, timing, "");
}

std::string sets_text(const json& sets) {
  std::string s = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    s += i ? ",{" : "{";
    for (std::size_t j = 0; j < sets[i].size(); ++j) s += (j ? "," : "") + sets[i][j].get<std::string>();
    s += "}";
  }
  return s + "}";
}

testkit::GeneratorConfig small_tsc(std::uint64_t seed) {
  testkit::GeneratorConfig cfg;
  cfg.min_n = 3;
  cfg.max_n = 8;
  cfg.min_m = 0;
  cfg.max_m = 18;
  cfg.twin_density = 0.35;
  cfg.max_twin_pairs = 8;
  cfg.seed = seed;
  cfg.shape = testkit::Shape::twinless_strongly_connected;
  return cfg;
}

struct Verdict {
  bool passed;
  std::string detail;
};

// ---------------------------------------------------------------------------

Verdict figure_one() {
  const auto start = Clock::now();
  const std::string fig(fixtures::figure1_text());
  std::vector<std::string> problems;

  const json two_edge = json::parse(cli({"2-edge-blocks", "--format", "json"}, fig).out);
  const json want_two_edge = json::parse(R"([["2","7"],["12","18"]])");
  if (two_edge["blocks"] != want_two_edge) {
    problems.push_back("2-edge-blocks gave " + sets_text(two_edge["blocks"]) + ", expected {{2,7},{12,18}}");
  }

  const json want_twinless = json::parse(R"([["12","18"]])");
  for (const char* algorithm : {"alg1", "alg2-safe", "oracle"}) {
    const json r = json::parse(cli({"2etb", "--algorithm", algorithm, "--format", "json"}, fig).out);
    if (r["blocks"] != want_twinless) {
      problems.push_back(std::string("2etb ") + algorithm + " gave " + sets_text(r["blocks"]) +
                         ", expected {{12,18}}");
    }
  }

  const std::string cut = std::regex_replace(fig, std::regex("(^|\n)3 8\n"), "$1");
  const json tscc_cut = json::parse(cli({"tscc", "--format", "json"}, cut).out);
  for (const auto& cls : tscc_cut["classes"]) {
    const bool has2 = std::find(cls.begin(), cls.end(), "2") != cls.end();
    const bool has7 = std::find(cls.begin(), cls.end(), "7") != cls.end();
    if (has2 && has7) problems.push_back("tscc without (3,8) keeps 2 and 7 together");
  }
  if (tscc_cut["m"] != 26) problems.push_back("arc (3,8) was not removed");

  const json tscc = json::parse(cli({"tscc", "--format", "json"}, fig).out);
  if (tscc["classes"].size() != 1 || tscc["classes"][0].size() != 19) {
    problems.push_back("tscc is not one 19-vertex class");
  }

  const double elapsed = seconds_since(start);
  if (elapsed >= kFigureBudgetSeconds) problems.push_back("took " + std::to_string(elapsed) + " s");

  std::string detail;
  for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
  if (detail.empty()) detail = "blocks and components as expected";
  return {problems.empty(), detail};
}

Verdict oracle_equivalence() {
  const auto start = Clock::now();
  std::size_t tscc_bad = 0;
  std::size_t block_bad = 0;
  std::size_t twin_overflow = 0;
  for (std::uint64_t seed = 0; seed < kOracleGraphs; ++seed) {
    const Digraph g = testkit::random_digraph(small_tsc(seed));
    if (twin_pairs(g).size() > 8 || g.arc_count() > 18) ++twin_overflow;
    if (twinless_strongly_connected_components(g) != testkit::oracle_tscc(g)) ++tscc_bad;
    const BlockSet oracle = testkit::oracle_two_edge_twinless_blocks(g);
    if (twinless_blocks_by_matrix(g) != oracle || twinless_blocks_by_refinement(g, RefineMode::safe) != oracle) {
      ++block_bad;
    }
  }
  const double elapsed = seconds_since(start);
  const bool ok = tscc_bad == 0 && block_bad == 0 && twin_overflow == 0 && elapsed < kOracleBudgetSeconds;
  char detail[200];
  std::snprintf(detail, sizeof detail, "%zu graphs, tscc mismatches %zu, block mismatches %zu, out of range %zu, %.2f s",
                kOracleGraphs, tscc_bad, block_bad, twin_overflow, elapsed);
  return {ok, detail};
}

Verdict refinement_gap() {
  std::vector<std::string> problems;
  const Digraph g = fixtures::gadget();
  const VertexId x = g.vertex("x");
  const VertexId y = g.vertex("y");
  const BlockSet oracle = testkit::oracle_two_edge_twinless_blocks(g);
  const BlockSet safe = twinless_blocks_by_refinement(g, RefineMode::safe);
  const BlockSet faithful = twinless_blocks_by_refinement(g, RefineMode::faithful);
  if (safe != oracle) problems.push_back("gadget: safe differs from oracle");
  if (oracle.together(x, y)) problems.push_back("gadget: oracle keeps x and y together");
  if (faithful == oracle) problems.push_back("gadget: faithful matches oracle");
  if (!faithful.together(x, y)) problems.push_back("gadget: faithful separates x and y");

  std::size_t tested = 0;
  std::size_t mismatches = 0;
  for (std::uint64_t seed = 0; tested < kFaithfulGraphs && seed < 100000; ++seed) {
    testkit::GeneratorConfig cfg = small_tsc(seed);
    cfg.min_n = 4;
    cfg.min_m = 8;
    const Digraph h = testkit::random_digraph(cfg);
    if (!strong_bridges(h).empty()) continue;
    ++tested;
    if (twinless_blocks_by_refinement(h, RefineMode::faithful) != twinless_blocks_by_refinement(h, RefineMode::safe)) {
      ++mismatches;
    }
  }
  if (tested < kFaithfulGraphs) problems.push_back("only " + std::to_string(tested) + " bridgeless graphs found");
  if (mismatches) problems.push_back(std::to_string(mismatches) + " faithful/safe mismatches");

  std::string detail = "gadget separates the modes; " + std::to_string(tested) +
                       " graphs without strong bridges, faithful == safe on " +
                       std::to_string(tested - mismatches);
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

bool pairwise_disjoint(const BlockSet& b, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (const auto& block : b.blocks()) {
    for (VertexId v : block) {
      if (seen[v]++) return false;
    }
  }
  return true;
}

bool each_inside_some(const BlockSet& inner, const BlockSet& outer) {
  for (const auto& block : inner.blocks()) {
    const auto* host = outer.block_of(block.front());
    if (!host) return false;
    for (VertexId v : block) {
      if (!std::binary_search(host->begin(), host->end(), v)) return false;
    }
  }
  return true;
}

Verdict structural_suite() {
  std::vector<std::pair<std::string, std::size_t>> violations = {
      {"disjoint", 0}, {"within 2-edge block", 0}, {"within TSCC", 0}, {"strong within twinless", 0},
      {"twinless bridge bound", 0}, {"ketb k=2", 0}, {"meet over all arcs", 0},
  };
  auto bump = [&](std::size_t i, bool ok) { violations[i].second += ok ? 0 : 1; };

  std::vector<Digraph> graphs;
  for (std::uint64_t seed = 0; seed < 500; ++seed) graphs.push_back(testkit::random_digraph(small_tsc(seed)));
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    testkit::GeneratorConfig cfg = small_tsc(1000 + seed);
    cfg.shape = testkit::Shape::strongly_connected;
    graphs.push_back(testkit::random_digraph(cfg));
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    testkit::GeneratorConfig cfg = small_tsc(2000 + seed);
    cfg.shape = testkit::Shape::any;
    graphs.push_back(testkit::random_digraph(cfg));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    testkit::GeneratorConfig cfg = small_tsc(3000 + seed);
    cfg.max_n = 40;
    cfg.max_m = 160;
    cfg.max_twin_pairs = 30;
    graphs.push_back(testkit::random_digraph(cfg));
  }

  for (const Digraph& g : graphs) {
    const std::size_t n = g.vertex_count();
    const BlockSet blocks = two_edge_twinless_blocks(g);
    bump(0, pairwise_disjoint(blocks, n));
    bump(2, blocks.within(twinless_strongly_connected_components(g)));
    bump(5, k_edge_twinless_blocks_bruteforce(g, 2) == blocks);

    if (is_strongly_connected(g)) {
      const BlockSet two_edge = two_edge_blocks(g);
      bump(0, pairwise_disjoint(two_edge, n));
      bump(1, each_inside_some(blocks, two_edge));
    }
    if (is_twinless_strongly_connected(g)) {
      const BridgeReport r = bridge_report(g);
      bump(3, std::includes(r.twinless_bridges.begin(), r.twinless_bridges.end(), r.strong_bridges.begin(),
                            r.strong_bridges.end()));
      bump(4, r.b_t() <= 2 * n - 2);
      if (n <= 8) {
        const BlockSet alg1 = twinless_blocks_by_matrix(g);
        bump(0, pairwise_disjoint(alg1, n));
        Partition meet = twinless_strongly_connected_components(g);
        for (ArcId a = 0; a < g.arc_count(); ++a) meet = partition_meet(meet, twinless_strongly_connected_components(g, a));
        bump(6, BlockSet::from_partition(meet) == alg1);
      }
    }
  }

  std::size_t total = 0;
  std::string failing;
  for (const auto& [name, count] : violations) {
    total += count;
    if (count) failing += "; " + name + ": " + std::to_string(count);
  }
  return {total == 0, std::to_string(graphs.size()) + " graphs, " + std::to_string(total) + " violations" + failing};
}

double time_pipeline(const std::string& text) {
  double best = 1e300;
  for (int i = 0; i < kPerfRepeats; ++i) {
    const auto start = Clock::now();
    const Run r = cli({"2etb", "--algorithm", "alg2-safe", "--format", "json"}, text);
    const double elapsed = seconds_since(start);
    if (r.code != 0) return -1.0;
    best = std::min(best, elapsed);
  }
  return best;
}

Verdict performance() {
  auto graph_text = [](std::size_t m) {
    const Run r = cli({"gen", "--n", std::to_string(kPerfVertices), "--m", std::to_string(m), "--shape", "tsc", "--seed",
                       std::to_string(kPerfSeed), "--twin-density", "0.1"});
    return r.out;
  };
  const double base = time_pipeline(graph_text(kPerfArcs));
  const double doubled = time_pipeline(graph_text(2 * kPerfArcs));
  if (base < 0 || doubled < 0) return {false, "pipeline failed"};
  const double ratio = doubled / base;
  char detail[200];
  std::snprintf(detail, sizeof detail, "n=%zu m=%zu: %.3f s (limit %.0f); m=%zu: %.3f s, ratio %.2f (limit %.1f)",
                kPerfVertices, kPerfArcs, base, kPerfBudgetSeconds, 2 * kPerfArcs, doubled, ratio, kPerfMaxRatio);
  return {base < kPerfBudgetSeconds && ratio <= kPerfMaxRatio, detail};
}

Verdict determinism() {
  const std::vector<std::pair<std::string, std::string_view>> inputs = {
      {"figure1", fixtures::figure1_text()}, {"c3", fixtures::c3_text()},       {"p2", fixtures::p2_text()},
      {"k3b", fixtures::k3b_text()},         {"gadget", fixtures::gadget_text()},
  };
  const std::vector<std::vector<std::string>> commands = {
      {"scc"},
      {"tscc"},
      {"strong-bridges"},
      {"twinless-bridges"},
      {"2-edge-blocks"},
      {"2etb", "--algorithm", "alg1"},
      {"2etb", "--algorithm", "alg2-safe"},
      {"2etb", "--algorithm", "alg2-faithful"},
      {"2etb", "--algorithm", "oracle"},
      {"ketb", "--k", "2"},
  };
  std::size_t runs = 0;
  std::vector<std::string> differing;
  auto compare = [&](std::vector<std::string> args, std::string_view input, const std::string& tag) {
    args.insert(args.end(), {"--format", "json"});
    const Run first = cli(args, input);
    const std::string reference = without_timing(first.out);
    for (int repeat = 0; repeat < 2; ++repeat) {
      const Run again = cli(args, input);
      if (without_timing(again.out) != reference || again.code != first.code || again.err != first.err) {
        differing.push_back(tag);
      }
    }
    args.insert(args.end(), {"--threads", "4"});
    const Run threaded = cli(args, input);
    if (without_timing(threaded.out) != reference || threaded.code != first.code || threaded.err != first.err) {
      differing.push_back(tag + " --threads 4");
    }
    runs += 4;
  };
  for (const auto& command : commands) {
    for (const auto& [name, text] : inputs) compare(command, text, command.front() + " on " + name);
  }
  compare({"gen", "--n", "50", "--m", "200", "--shape", "tsc", "--seed", "9", "--twin-density", "0.3"}, "", "gen");
  compare({"selftest", "--seeds", "25"}, "", "selftest");

  std::string detail = std::to_string(runs) + " runs compared";
  for (const auto& d : differing) detail += "; differs: " + d;
  return {differing.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"figure-1 reproduction", figure_one},
      {"oracle equivalence", oracle_equivalence},
      {"faithful refinement gap", refinement_gap},
      {"structural properties", structural_suite},
      {"performance smoke", performance},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    failures += v.passed ? 0 : 1;
    std::cout << (v.passed ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
