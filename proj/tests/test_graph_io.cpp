#include <doctest.h>

#include "fhorder/errors.hpp"
#include "fhorder/graph_io.hpp"

using namespace fhorder;

TEST_CASE("text format parses comments, blank lines and duplicate edges") {
  const Graph g = parse_text("# a path\n\ngraph 4\n0 1\n1 2\n  2 3  \n1 0\n");
  CHECK(g == Graph::path(4));
  CHECK(format_text(g) == "graph 4\n0 1\n1 2\n2 3\n");
}

TEST_CASE("text format errors name the line") {
  try {
    (void)parse_text("graph 3\n0 1\n2 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_text("graph 3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_text("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_text("graph 0\n"), ParseError);
  CHECK_THROWS_AS(parse_text("graph 3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_text("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(parse_text("graph x\n"), ParseError);
}

TEST_CASE("graph6 decodes reference strings") {
  // Strings from the nauty format documentation and geng output.
  CHECK(parse_graph6("A_") == Graph::complete(2));
  CHECK(parse_graph6("Bw") == Graph::complete(3));
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("Ch") == Graph::path(4));
  // The documentation example: 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
  CHECK(parse_graph6("DQc") == Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
  CHECK(format_graph6(Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");
  CHECK(parse_graph6(">>graph6<<A_") == Graph::complete(2));
}

TEST_CASE("graph6 round trip, including the long size prefix") {
  Graph big(64);
  for (Vertex v = 0; v + 1 < 64; v += 3) big.add_edge(v, v + 1);
  big.add_edge(0, 63);
  const std::string encoded = format_graph6(big);
  CHECK(encoded[0] == '~');
  CHECK(parse_graph6(encoded) == big);

  const Graph c7 = Graph::cycle(7);
  CHECK(parse_graph6(format_graph6(c7)) == c7);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("?"), ParseError);      // zero vertices
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);    // too many data bytes
  CHECK_THROWS_AS(parse_graph6("B\x01"), ParseError);  // character below '?'
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);     // padding bit set
}

TEST_CASE("graph6 files") {
  const auto graphs = parse_graph6_file(">>graph6<<\nA_\n\nBw\n");
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1] == Graph::complete(3));
  try {
    (void)parse_graph6_file("A_\nA_x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("inline literals") {
  CHECK(parse_inline("3; 0-1,1-2") == Graph::path(3));
  CHECK(parse_inline("2") == Graph(2));
  CHECK(parse_inline("4;") == Graph(4));
  CHECK(format_inline(Graph::path(3)) == "3; 0-1,1-2");
  CHECK(format_inline(Graph(2)) == "2;");
  CHECK(parse_inline(format_inline(Graph::cycle(5))) == Graph::cycle(5));
  CHECK_THROWS_AS(parse_inline("3; 0-0"), ParseError);
  CHECK_THROWS_AS(parse_inline("3; 0-4"), ParseError);
  CHECK_THROWS_AS(parse_inline("3; 01"), ParseError);
  CHECK_THROWS_AS(parse_inline("x; 0-1"), ParseError);
}
