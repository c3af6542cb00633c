#include "cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twinless/blocks.hpp"
#include "twinless/connectivity.hpp"
#include "twinless/cuts.hpp"
#include "twinless/errors.hpp"
#include "twinless/fixtures.hpp"
#include "twinless/testkit.hpp"

namespace twinless::cli {

namespace {

using json = nlohmann::ordered_json;
using LabelSets = std::vector<std::vector<std::string>>;
using LabelPairs = std::vector<std::array<std::string, 2>>;

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::size_t min_size = 2;
  bool min_size_given = false;
  bool include_singletons = false;
  unsigned threads = 1;
  bool lenient = false;

  std::string algorithm = "alg2-safe";
  std::size_t k = 2;

  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  std::string shape = "any";
  std::uint64_t seed = 0;
  double twin_density = 0.0;

  std::size_t selftest_seeds = 200;

  ExecutionPolicy policy() const { return {threads}; }
};

struct Check {
  std::string name;
  bool passed;
};

struct Report {
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::string analysis;
  std::optional<std::string> algorithm;
  std::optional<LabelSets> classes;
  std::optional<LabelSets> blocks;
  std::optional<LabelPairs> strong_bridges;
  std::optional<LabelPairs> twinless_bridges;
  std::optional<std::size_t> b_s;
  std::optional<std::size_t> b_t;
  std::optional<std::string> edge_list;
  std::optional<LabelPairs> arcs;
  std::optional<std::vector<Check>> checks;
  double elapsed_ms = 0;
};

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void write_json(const Report& r, std::ostream& out) {
  json j;
  if (r.n) j["n"] = *r.n;
  if (r.m) j["m"] = *r.m;
  j["analysis"] = r.analysis;
  if (r.algorithm) j["algorithm"] = *r.algorithm;
  if (r.classes) j["classes"] = *r.classes;
  if (r.blocks) j["blocks"] = *r.blocks;
  if (r.strong_bridges) j["strong_bridges"] = *r.strong_bridges;
  if (r.twinless_bridges) j["twinless_bridges"] = *r.twinless_bridges;
  if (r.b_s) j["b_s"] = *r.b_s;
  if (r.b_t) j["b_t"] = *r.b_t;
  if (r.arcs) j["arcs"] = *r.arcs;
  if (r.checks) {
    json checks = json::array();
    for (const Check& c : *r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    j["checks"] = checks;
    j["passed"] = all_passed(*r.checks);
  }
  j["elapsed_ms"] = r.elapsed_ms;
  out << j.dump(2) << '\n';
}

void write_sets(std::ostream& out, const char* name, const LabelSets& sets) {
  out << name << ' ' << sets.size() << '\n';
  for (const auto& set : sets) {
    for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
    out << '\n';
  }
}

void write_pairs(std::ostream& out, const char* name, const LabelPairs& pairs) {
  out << name << ' ' << pairs.size() << '\n';
  for (const auto& p : pairs) out << p[0] << ' ' << p[1] << '\n';
}

// Text output carries no timing so repeated runs are byte-identical.
void write_text(const Report& r, std::ostream& out) {
  if (r.edge_list) {
    out << *r.edge_list;
    if (!r.edge_list->empty()) out << '\n';
    return;
  }
  out << "analysis " << r.analysis << '\n';
  if (r.algorithm) out << "algorithm " << *r.algorithm << '\n';
  if (r.n) out << "n " << *r.n << '\n';
  if (r.m) out << "m " << *r.m << '\n';
  if (r.b_s) out << "b_s " << *r.b_s << '\n';
  if (r.b_t) out << "b_t " << *r.b_t << '\n';
  if (r.classes) write_sets(out, "classes", *r.classes);
  if (r.blocks) write_sets(out, "blocks", *r.blocks);
  if (r.strong_bridges) write_pairs(out, "strong_bridges", *r.strong_bridges);
  if (r.twinless_bridges) write_pairs(out, "twinless_bridges", *r.twinless_bridges);
  if (r.checks) {
    for (const Check& c : *r.checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    out << "selftest " << (all_passed(*r.checks) ? "passed" : "failed") << '\n';
  }
}

void sort_sets(LabelSets& sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end(), label_less);
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return label_less(a.front(), b.front()); });
}

LabelSets class_labels(const Digraph& g, const Partition& p, const Options& opt) {
  LabelSets sets;
  for (const auto& cls : p.classes()) {
    if (opt.min_size_given && cls.size() < opt.min_size) continue;
    auto& labels = sets.emplace_back();
    for (VertexId v : cls) labels.push_back(g.label(v));
  }
  sort_sets(sets);
  return sets;
}

LabelSets block_labels(const Digraph& g, const BlockSet& blocks, const Options& opt) {
  LabelSets sets;
  std::vector<bool> covered(g.vertex_count(), false);
  for (const auto& b : blocks.blocks()) {
    if (b.size() < opt.min_size) continue;
    auto& labels = sets.emplace_back();
    for (VertexId v : b) {
      labels.push_back(g.label(v));
      covered[v] = true;
    }
  }
  if (opt.include_singletons) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!covered[v]) sets.push_back({g.label(v)});
    }
  }
  sort_sets(sets);
  return sets;
}

LabelPairs arc_labels(const Digraph& g, const std::vector<ArcId>& arcs) {
  LabelPairs pairs;
  for (ArcId a : arcs) pairs.push_back({g.label(g.arc(a).source), g.label(g.arc(a).target)});
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    if (x[0] != y[0]) return label_less(x[0], y[0]);
    return label_less(x[1], y[1]);
  });
  return pairs;
}

Digraph load_graph(const Options& opt, std::istream& in, std::ostream& err) {
  std::string text;
  if (opt.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(opt.input, std::ios::binary);
    if (!file) throw ParseError(0, "cannot open '" + opt.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  ParseResult parsed = parse_edge_list(text, opt.lenient ? ParseMode::lenient : ParseMode::strict);
  if (parsed.dropped_duplicates > 0) {
    err << "warning: dropped " << parsed.dropped_duplicates << " duplicate arc(s)\n";
  }
  return std::move(parsed.graph);
}

Report graph_report(const Digraph& g, std::string analysis) {
  Report r;
  r.n = g.vertex_count();
  r.m = g.arc_count();
  r.analysis = std::move(analysis);
  return r;
}

Report run_twinless_blocks(const Digraph& g, const Options& opt) {
  Report r = graph_report(g, "2etb");
  r.algorithm = opt.algorithm;
  BlockSet blocks;
  if (opt.algorithm == "oracle") {
    blocks = testkit::oracle_two_edge_twinless_blocks(g);
  } else {
    TwinlessBlockAlgorithm algorithm = TwinlessBlockAlgorithm::refine_safe;
    if (opt.algorithm == "alg1") algorithm = TwinlessBlockAlgorithm::matrix;
    if (opt.algorithm == "alg2-faithful") algorithm = TwinlessBlockAlgorithm::refine_faithful;
    blocks = two_edge_twinless_blocks(g, algorithm, opt.policy());
    if (g.vertex_count() > 0 && is_twinless_strongly_connected(g)) {
      const BridgeReport bridges = bridge_report(g, opt.policy());
      r.b_s = bridges.b_s();
      r.b_t = bridges.b_t();
    }
  }
  r.blocks = block_labels(g, blocks, opt);
  return r;
}

// Fixture checks against oracle-verified values, then agreement of every
// algorithm with the brute-force oracles on seeded random graphs.
std::vector<Check> self_test(const Options& opt) {
  std::vector<Check> checks;
  auto check = [&](std::string name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception&) {
      ok = false;
    }
    checks.push_back({std::move(name), ok});
  };
  auto labelled = [](const Digraph& g, const BlockSet& b) { return b.to_labels(g); };

  const Digraph fig = fixtures::figure1();
  check("figure1 has 19 vertices and 27 arcs", [&] { return fig.vertex_count() == 19 && fig.arc_count() == 27; });
  check("figure1 is twinless strongly connected", [&] { return is_twinless_strongly_connected(fig); });
  check("figure1 without (3,8) separates 2 and 7", [&] {
    const ArcId drop[] = {fig.arc_between("3", "8")};
    const Digraph cut = remove_arcs(fig, drop);
    return !twinless_strongly_connected_components(cut).same_class(cut.vertex("2"), cut.vertex("7"));
  });
  check("figure1 2-edge blocks", [&] {
    return labelled(fig, two_edge_blocks(fig)) == LabelSets{{"2", "5", "7"}, {"12", "18"}};
  });
  check("figure1 2-edge-twinless blocks agree across algorithms", [&] {
    const BlockSet oracle = testkit::oracle_two_edge_twinless_blocks(fig);
    return labelled(fig, oracle) == LabelSets{{"2", "5"}, {"12", "18"}} && twinless_blocks_by_matrix(fig) == oracle &&
           twinless_blocks_by_refinement(fig) == oracle;
  });

  const Digraph gadget = fixtures::gadget();
  check("gadget: safe refinement matches the oracle", [&] {
    return twinless_blocks_by_refinement(gadget, RefineMode::safe) == testkit::oracle_two_edge_twinless_blocks(gadget);
  });
  check("gadget: faithful refinement keeps x and y together", [&] {
    return twinless_blocks_by_refinement(gadget, RefineMode::faithful).together(gadget.vertex("x"), gadget.vertex("y"));
  });
  check("c3: every arc is a strong bridge", [&] { return strong_bridges(fixtures::c3()).size() == 3; });
  check("p2: twinless components are singletons",
        [&] { return twinless_strongly_connected_components(fixtures::p2()).class_count() == 2; });
  check("k3b: one 2-edge-twinless block", [&] {
    const Digraph k = fixtures::k3b();
    return labelled(k, two_edge_twinless_blocks(k)) == LabelSets{{"a", "b", "c"}};
  });

  std::size_t tscc_mismatch = 0;
  std::size_t block_mismatch = 0;
  for (std::uint64_t seed = 0; seed < opt.selftest_seeds; ++seed) {
    testkit::GeneratorConfig cfg;
    cfg.min_n = 3;
    cfg.max_n = 8;
    cfg.min_m = 3;
    cfg.max_m = 18;
    cfg.twin_density = 0.3;
    cfg.max_twin_pairs = 8;
    cfg.seed = seed;
    cfg.shape = testkit::Shape::twinless_strongly_connected;
    const Digraph g = testkit::random_digraph(cfg);
    if (twinless_strongly_connected_components(g) != testkit::oracle_tscc(g)) ++tscc_mismatch;
    const BlockSet oracle = testkit::oracle_two_edge_twinless_blocks(g);
    if (twinless_blocks_by_matrix(g, opt.policy()) != oracle ||
        twinless_blocks_by_refinement(g, RefineMode::safe, opt.policy()) != oracle) {
      ++block_mismatch;
    }
  }
  const std::string suffix = " on " + std::to_string(opt.selftest_seeds) + " random graphs";
  checks.push_back({"twinless components match the oracle" + suffix, tscc_mismatch == 0});
  checks.push_back({"2-edge-twinless blocks match the oracle" + suffix, block_mismatch == 0});
  return checks;
}

void add_graph_options(CLI::App* sub, Options& opt) {
  sub->add_option("--input", opt.input, "Edge-list file, or - for standard input");
  sub->add_flag("--lenient", opt.lenient, "Drop duplicate arcs instead of rejecting them");
}

void add_common_options(CLI::App* sub, Options& opt) {
  sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--min-size", opt.min_size, "Smallest block size to report")
      ->check(CLI::PositiveNumber)
      ->each([&opt](const std::string&) { opt.min_size_given = true; });
  sub->add_flag("--include-singletons", opt.include_singletons, "Also list vertices outside every block");
  sub->add_option("--threads", opt.threads, "Worker threads for per-arc analysis")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twinless strong connectivity, bridges and 2-edge-twinless blocks of directed graphs", "twinless"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    CLI::App* sub;
    bool reads_graph;
  };
  std::vector<Command> commands;
  auto add = [&](const char* name, const char* help, bool reads_graph) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (reads_graph) add_graph_options(sub, opt);
    add_common_options(sub, opt);
    commands.push_back({sub, reads_graph});
    return sub;
  };

  add("scc", "Strongly connected components", true);
  add("tscc", "Twinless strongly connected components", true);
  add("strong-bridges", "Strong bridges (input must be strongly connected)", true);
  add("twinless-bridges", "Twinless bridges (input must be twinless strongly connected)", true);
  add("2-edge-blocks", "2-edge blocks (input must be strongly connected)", true);
  add("2etb", "2-edge-twinless blocks", true)
      ->add_option("--algorithm", opt.algorithm, "Block algorithm")
      ->check(CLI::IsMember({"alg1", "alg2-safe", "alg2-faithful", "oracle"}));
  add("ketb", "k-edge-twinless blocks by exhaustive enumeration", true)
      ->add_option("--k", opt.k, "Blocks survive the removal of any k-1 arcs")
      ->required()
      ->check(CLI::PositiveNumber);
  CLI::App* gen = add("gen", "Generate a random edge list", false);
  gen->add_option("--n", opt.gen_n, "Vertex count")->required();
  gen->add_option("--m", opt.gen_m, "Arc count")->required();
  gen->add_option("--shape", opt.shape, "any | sc | tsc")
      ->check(CLI::IsMember({"any", "sc", "tsc", "strongly-connected", "twinless-strongly-connected"}));
  gen->add_option("--seed", opt.seed, "Random seed");
  gen->add_option("--twin-density", opt.twin_density, "Probability that an extra arc reverses an existing one")
      ->check(CLI::Range(0.0, 1.0));
  add("selftest", "Run the fixture and oracle checks", false)
      ->add_option("--seeds", opt.selftest_seeds, "Random graphs in the oracle suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const bool reads_graph = std::find_if(commands.begin(), commands.end(), [&](const Command& c) {
                             return c.sub->get_name() == name;
                           })->reads_graph;

  Digraph g;
  if (reads_graph) {
    try {
      g = load_graph(opt, in, err);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kParseError;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (name == "scc") {
      report = graph_report(g, name);
      report.classes = class_labels(g, strongly_connected_components(g), opt);
    } else if (name == "tscc") {
      report = graph_report(g, name);
      report.classes = class_labels(g, twinless_strongly_connected_components(g), opt);
    } else if (name == "strong-bridges") {
      report = graph_report(g, name);
      const auto bridges = strong_bridges(g, opt.policy());
      report.strong_bridges = arc_labels(g, bridges);
      report.b_s = bridges.size();
    } else if (name == "twinless-bridges") {
      report = graph_report(g, name);
      const auto bridges = twinless_bridges(g, opt.policy());
      report.twinless_bridges = arc_labels(g, bridges);
      report.b_t = bridges.size();
    } else if (name == "2-edge-blocks") {
      report = graph_report(g, name);
      report.blocks = block_labels(g, two_edge_blocks(g, opt.policy()), opt);
      report.b_s = strong_bridges(g, opt.policy()).size();
    } else if (name == "2etb") {
      report = run_twinless_blocks(g, opt);
    } else if (name == "ketb") {
      report = graph_report(g, name);
      report.blocks = block_labels(g, k_edge_twinless_blocks_bruteforce(g, opt.k, opt.policy()), opt);
    } else if (name == "gen") {
      testkit::GeneratorConfig cfg;
      cfg.min_n = cfg.max_n = opt.gen_n;
      cfg.min_m = cfg.max_m = opt.gen_m;
      cfg.shape = testkit::parse_shape(opt.shape);
      cfg.seed = opt.seed;
      cfg.twin_density = opt.twin_density;
      const Digraph made = testkit::random_digraph(cfg);
      report = graph_report(made, name);
      if (opt.format == "json") {
        report.arcs = LabelPairs{};
        for (const Arc& a : made.arcs()) report.arcs->push_back({made.label(a.source), made.label(a.target)});
        std::sort(report.arcs->begin(), report.arcs->end(), [](const auto& x, const auto& y) {
          return label_less(x[0], y[0]) || (x[0] == y[0] && label_less(x[1], y[1]));
        });
      } else {
        report.edge_list = serialize(made);
      }
    } else if (name == "selftest") {
      report.analysis = name;
      report.checks = self_test(opt);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolation;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.format == "json") {
    write_json(report, out);
  } else {
    write_text(report, out);
  }
  if (report.checks && !all_passed(*report.checks)) return kSelfTestFailed;
  return kSuccess;
}

}  // namespace twinless::cli
