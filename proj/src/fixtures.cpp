#include "twinless/fixtures.hpp"

namespace twinless::fixtures {

std::string_view figure1_text() {
  return "2 5\n15 3\n2 1\n7 3\n5 7\n5 9\n7 5\n9 2\n8 4\n4 6\n2 15\n10 7\n3 8\n6 2\n"
         "8 10\n1 12\n12 2\n18 17\n12 19\n12 16\n13 12\n16 18\n18 14\n14 13\n"
         "17 12\n19 11\n11 18\n";
}

std::string_view c3_text() { return "1 2\n2 3\n3 1\n"; }

std::string_view p2_text() { return "1 2\n2 1\n"; }

std::string_view k3b_text() { return "a b\nb a\nb c\nc b\na c\nc a\n"; }

std::string_view gadget_text() {
  return "x a\na b\nb y\ny b\nb a\na x\nx p\np q\nq y\ny p\nq x\n";
}

Digraph figure1() { return parse_edge_list(figure1_text()).graph; }
Digraph c3() { return parse_edge_list(c3_text()).graph; }
Digraph p2() { return parse_edge_list(p2_text()).graph; }
Digraph k3b() { return parse_edge_list(k3b_text()).graph; }
Digraph gadget() { return parse_edge_list(gadget_text()).graph; }

}  // namespace twinless::fixtures
