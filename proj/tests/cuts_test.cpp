#include <algorithm>

#include "doctest.h"
#include "test_support.hpp"
#include "twinless/cuts.hpp"
#include "twinless/errors.hpp"
#include "twinless/fixtures.hpp"

using namespace twinless;
using ArcLabels = std::set<std::pair<std::string, std::string>>;

TEST_CASE("bridges of the 3-cycle") {
  const Digraph c3 = fixtures::c3();
  CHECK(strong_bridges(c3).size() == 3);
  CHECK(twinless_bridges(c3).size() == 3);
}

TEST_CASE("bidirected triangle has no bridges") {
  const BridgeReport r = bridge_report(fixtures::k3b());
  CHECK(r.b_s() == 0);
  CHECK(r.b_t() == 0);
}

TEST_CASE("gadget: (p,q) is the only strong bridge") {
  const Digraph g = fixtures::gadget();
  CHECK(test::arc_label_set(g, strong_bridges(g)) == ArcLabels{{"p", "q"}});
  const auto tb = twinless_bridges(g);
  CHECK(std::find(tb.begin(), tb.end(), g.arc_between("p", "q")) != tb.end());
}

TEST_CASE("figure 1") {
  const Digraph g = fixtures::figure1();
  const BridgeReport r = bridge_report(g);
  CHECK(std::find(r.strong_bridges.begin(), r.strong_bridges.end(), g.arc_between("3", "8")) !=
        r.strong_bridges.end());
  CHECK(std::find(r.twinless_bridges.begin(), r.twinless_bridges.end(), g.arc_between("3", "8")) !=
        r.twinless_bridges.end());
  CHECK(r.b_s() == 23);
  CHECK(r.b_t() == 23);
  CHECK(std::is_sorted(r.strong_bridges.begin(), r.strong_bridges.end()));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(strong_bridges(parse_edge_list("1 2").graph), PreconditionError);
  CHECK_THROWS_AS(twinless_bridges(fixtures::p2()), PreconditionError);
  CHECK(strong_bridges(fixtures::p2()).size() == 2);
}

TEST_CASE("property: bridges agree with exhaustive deletion") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Digraph sc = testkit::random_digraph(test::small_config(seed, testkit::Shape::strongly_connected));
    CAPTURE(seed);
    CHECK(strong_bridges(sc) == test::exhaustive_strong_bridges(sc));

    const Digraph tsc =
        testkit::random_digraph(test::small_config(seed, testkit::Shape::twinless_strongly_connected));
    const BridgeReport r = bridge_report(tsc);
    CHECK(r.strong_bridges == test::exhaustive_strong_bridges(tsc));
    CHECK(r.twinless_bridges == test::exhaustive_twinless_bridges(tsc));
    CHECK(r.b_s() <= 2 * tsc.vertex_count() - 2);
    CHECK(std::includes(r.twinless_bridges.begin(), r.twinless_bridges.end(), r.strong_bridges.begin(),
                        r.strong_bridges.end()));
  }
}

TEST_CASE("property: thread count does not change results") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto cfg = test::small_config(seed, testkit::Shape::twinless_strongly_connected);
    cfg.max_n = 40;
    cfg.max_m = 120;
    cfg.max_twin_pairs = 20;
    const Digraph g = testkit::random_digraph(cfg);
    CAPTURE(seed);
    const BridgeReport one = bridge_report(g, {1});
    const BridgeReport four = bridge_report(g, {4});
    CHECK(one.strong_bridges == four.strong_bridges);
    CHECK(one.twinless_bridges == four.twinless_bridges);
  }
}

TEST_CASE("property: twinless bridges agree with exhaustive deletion on medium graphs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto cfg = test::small_config(seed, testkit::Shape::twinless_strongly_connected);
    cfg.min_n = 10;
    cfg.max_n = 60;
    cfg.max_m = 200;
    cfg.twin_density = 0.2;
    cfg.max_twin_pairs = 40;
    const Digraph g = testkit::random_digraph(cfg);
    CAPTURE(seed);
    CHECK(twinless_bridges(g) == test::exhaustive_twinless_bridges(g));
    CHECK(strong_bridges(g) == test::exhaustive_strong_bridges(g));
  }
}
