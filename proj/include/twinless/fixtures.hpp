#pragma once

#include <string_view>

#include "twinless/graph.hpp"

// Small named graphs used throughout tests, the CLI self-test and docs.
namespace twinless::fixtures {

// 19 vertices, 27 arcs, one twin pair 5<->7; twinless strongly connected.
// 2-edge blocks {2,5,7} and {12,18}; 2-edge-twinless blocks {2,5} and
// {12,18}.
std::string_view figure1_text();
// Directed 3-cycle 1->2->3->1.
std::string_view c3_text();
// A single twin pair 1<->2.
std::string_view p2_text();
// All six arcs on {a,b,c}.
std::string_view k3b_text();
// Vertices {x,a,b,y,p,q}. The arc p->q is both a strong and a twinless
// bridge, and without it every x<->y route crosses the twin pair a<->b.
std::string_view gadget_text();

Digraph figure1();
Digraph c3();
Digraph p2();
Digraph k3b();
Digraph gadget();

}  // namespace twinless::fixtures
