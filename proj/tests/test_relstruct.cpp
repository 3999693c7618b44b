#include <doctest.h>

#include <algorithm>
#include <map>

#include "bridge.hpp"
#include "fhorder/enumeration.hpp"
#include "fhorder/errors.hpp"
#include "fhorder/fullhom.hpp"
#include "fhorder/gaps.hpp"
#include "fhorder/relstruct.hpp"

using namespace fhorder;

namespace {

constexpr Vertex kMark = MarkedTuple::kMarker;

RelStructure digraph(std::size_t n, std::initializer_list<Tuple> arcs) {
  RelStructure a(Language::digraph(), n);
  for (const auto& t : arcs) a.add_tuple(0, t);
  return a;
}

std::set<MarkedTuple> marked(std::initializer_list<std::vector<Vertex>> entries) {
  std::set<MarkedTuple> out;
  for (const auto& e : entries) out.insert(MarkedTuple{e});
  return out;
}

// All labelled digraphs with loops on n vertices.
std::vector<oracle::Digraph> labelled_digraphs(std::size_t n) {
  std::vector<oracle::Digraph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code)
    out.push_back(oracle::labelled_digraph(n, code));
  return out;
}

}  // namespace

TEST_CASE("language and structure validation") {
  CHECK_THROWS_AS(Language({{"E", 2}, {"E", 1}}), ArgumentError);
  CHECK_THROWS_AS(Language({{"E", 0}}), ArgumentError);
  RelStructure a(Language::digraph(), 2);
  CHECK_THROWS_AS(a.add_tuple(0, {0}), ShapeError);
  CHECK_THROWS_AS(a.add_tuple(0, {0, 2}), RangeError);
  a.add_tuple("E", {0, 1});
  a.add_tuple("E", {0, 1});
  CHECK(a.tuple_count() == 1);
  CHECK(a.contains(0, {0, 1}));
  CHECK_FALSE(a.contains(0, {1, 0}));
}

TEST_CASE("has_loop") {
  CHECK(has_loop(digraph(2, {{0, 0}}), 0));
  CHECK_FALSE(has_loop(digraph(2, {{0, 0}}), 1));
  CHECK_FALSE(has_loop(digraph(2, {{0, 1}, {1, 0}}), 0));
  CHECK_FALSE(has_loop(digraph(2, {{0, 1}, {1, 0}}), 1));
  RelStructure unary(Language({{"P", 1}}), 2);
  unary.add_tuple(0, {0});
  CHECK_FALSE(has_loop(unary, 0));
}

TEST_CASE("rel_neighborhood") {
  const auto t = ternary_counterexample();
  CHECK(rel_neighborhood(t, 0).per_symbol[0] == marked({{kMark, 1, 2}}));
  CHECK(rel_neighborhood(t, 1).per_symbol[0] == marked({{0, kMark, 2}}));
  CHECK(rel_neighborhood(t, 2).per_symbol[0] == marked({{0, 1, kMark}}));

  // Direct rule: arcs through v, v replaced by the marker.
  const auto arc = digraph(2, {{0, 1}});
  CHECK(rel_neighborhood(arc, 0).per_symbol[0] == marked({{kMark, 1}}));
  CHECK(rel_neighborhood(arc, 1).per_symbol[0] == marked({{0, kMark}}));

  // Loop rule: non-arcs through v, plus the marked constant tuple.
  const auto looped = digraph(2, {{0, 0}, {0, 1}});
  CHECK(rel_neighborhood(looped, 0).per_symbol[0] == marked({{kMark, kMark}, {1, kMark}}));

  CHECK_THROWS_AS(rel_neighborhood(arc, 2), RangeError);
}

TEST_CASE("rel_is_point_determining examples") {
  const auto t = ternary_counterexample();
  CHECK(rel_is_point_determining(t));
  for (Vertex v = 0; v < 3; ++v) CHECK_FALSE(rel_is_point_determining(rel_remove_vertex(t, v)));
  CHECK_FALSE(rel_is_point_determining(digraph(2, {})));
  CHECK(rel_is_point_determining(digraph(2, {{0, 1}})));
}

TEST_CASE("rel_pd_quotient examples") {
  const auto edgeless = rel_pd_quotient(digraph(3, {}));
  CHECK(edgeless.structure.size() == 1);

  const RelStructure a = digraph(3, {{0, 2}, {1, 2}});
  const auto q = rel_pd_quotient(a);
  CHECK(q.structure == digraph(2, {{0, 1}}));
  CHECK(q.map.image() == std::vector<Vertex>{0, 0, 1});
  CHECK(rel_is_full_hom(a, q.structure, q.map));

  const auto t = ternary_counterexample();
  const auto same = rel_pd_quotient(t);
  CHECK(same.structure == t);
  CHECK(same.map == Mapping::identity(3));
}

TEST_CASE("rel_is_full_hom examples") {
  const auto t = ternary_counterexample();
  CHECK(rel_is_full_hom(t, t, Mapping::identity(3)));
  CHECK_FALSE(rel_is_full_hom(digraph(1, {}), digraph(1, {{0, 0}}), Mapping::identity(1)));
  CHECK_THROWS_AS(rel_is_full_hom(t, digraph(3, {}), Mapping::identity(3)), ShapeError);
  CHECK_THROWS_AS(rel_is_full_hom(digraph(2, {}), digraph(3, {}), Mapping::identity(2)), ShapeError);
}

TEST_CASE("rel_find_full_hom examples") {
  CHECK(rel_find_full_hom(digraph(2, {}), digraph(1, {})));
  CHECK_FALSE(rel_find_full_hom(digraph(1, {{0, 0}}), digraph(1, {})));
  const auto cycle = digraph(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto path = digraph(2, {{0, 1}});
  const auto f = rel_find_full_hom(path, cycle);
  REQUIRE(f);
  CHECK(rel_is_full_hom(path, cycle, *f));
}

TEST_CASE("rel_is_gap examples") {
  const auto g = rel_is_gap(digraph(1, {}), digraph(2, {{0, 1}}));
  REQUIRE(g);
  CHECK(g->removed_vertex == 1);
  CHECK_THROWS_AS(rel_is_gap(ternary_counterexample(), ternary_counterexample()), UnsupportedArityError);
  CHECK_FALSE(rel_is_gap(digraph(1, {}), digraph(1, {{0, 0}})));
}

TEST_CASE("ternary counterexample") {
  const auto t = ternary_counterexample();
  CHECK(t.size() == 3);
  CHECK(t.language().max_arity() == 3);
  CHECK(t.tuple_count() == 1);
  CHECK(rel_is_point_determining(t));
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex w = u + 1; w < 3; ++w) CHECK_FALSE(rel_is_point_determining(rel_induced_substructure(t, {u, w})));
}

TEST_CASE("graphs encoded as symmetric digraphs keep every verdict (n <= 5)") {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto cat = enumerate_graphs(n);
    graphs.insert(graphs.end(), cat.members.begin(), cat.members.end());
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < bridge::labelled_count(n); ++code) {
      const Graph g = bridge::labelled(n, code);
      const RelStructure a = from_graph(g);
      REQUIRE(rel_is_point_determining(a) == is_point_determining(g));
      const auto rq = rel_pd_quotient(a);
      const auto gq = pd_quotient(g);
      REQUIRE(rq.structure == from_graph(gq.graph));
      REQUIRE(rq.map == gq.map);
    }
  }
  for (const auto& g : graphs) {
    for (const auto& h : graphs) {
      const auto rel = rel_find_full_hom(from_graph(g), from_graph(h));
      const auto plain = find_full_hom(g, h);
      REQUIRE(rel.has_value() == plain.has_value());
      if (rel) REQUIRE(is_full_hom(g, h, *rel));
      const auto rel_gap = rel_is_gap(from_graph(g), from_graph(h));
      REQUIRE(rel_gap.has_value() == is_gap(g, h).has_value());
    }
  }
}

TEST_CASE("pd digraphs are exactly the twin-free ones, and quotients are sound (n <= 3)") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& d : labelled_digraphs(n)) {
      const RelStructure a = bridge::from_digraph(d);
      REQUIRE(rel_is_point_determining(a) == oracle::digraph_point_determining(d));
      const auto q = rel_pd_quotient(a);
      REQUIRE(rel_is_point_determining(q.structure));
      REQUIRE(rel_is_full_hom(a, q.structure, q.map));
    }
  }
}

TEST_CASE("pd digraphs are the smallest members of their equivalence classes (n <= 3)") {
  std::vector<oracle::Digraph> all;
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& d : labelled_digraphs(n)) all.push_back(std::move(d));
  for (const auto& d : all) {
    std::size_t smallest = d.size();
    for (const auto& e : all)
      if (e.size() < smallest && oracle::digraph_full_hom_exists(d, e) && oracle::digraph_full_hom_exists(e, d))
        smallest = e.size();
    REQUIRE(rel_is_point_determining(bridge::from_digraph(d)) == (smallest == d.size()));
  }
}

TEST_CASE("between pd digraphs, full homomorphisms are induced embeddings (n <= 3)") {
  std::vector<RelStructure> pd;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& d : labelled_digraphs(n))
      if (oracle::digraph_point_determining(d)) pd.push_back(bridge::from_digraph(d));
  for (const auto& a : pd) {
    for (const auto& b : pd) {
      const bool brute = oracle::digraph_full_hom(bridge::to_digraph(a), bridge::to_digraph(b));
      REQUIRE(brute == rel_induced_embedding(a, b).has_value());
      REQUIRE(brute == rel_find_full_hom(a, b).has_value());
      REQUIRE(brute == brute_force_full_hom(a, b).has_value());
    }
  }
}

TEST_CASE("rel_canonical_form identifies exactly the isomorphic digraphs (n <= 2)") {
  const auto all = labelled_digraphs(2);
  for (const auto& d : all)
    for (const auto& e : all)
      REQUIRE((rel_canonical_form(bridge::from_digraph(d)) == rel_canonical_form(bridge::from_digraph(e))) ==
              oracle::digraph_isomorphic(d, e));
}

TEST_CASE("structure JSON") {
  const auto a = parse_structure_json(R"({"language": {"R": 3, "E": 2}, "n": 3, "relations": {"R": [[0,1,2]], "E": [[1,0],[0,1]]}})");
  CHECK(a.size() == 3);
  CHECK(a.language()[0].name == "E");
  CHECK(format_structure_json(a) ==
        R"({"language":{"E":2,"R":3},"n":3,"relations":{"E":[[0,1],[1,0]],"R":[[0,1,2]]}})");
  CHECK(parse_structure_json(format_structure_json(a)) == a);
  // Relations may be omitted when empty.
  CHECK(parse_structure_json(R"({"language": {"E": 2}, "n": 2})").tuple_count() == 0);

  CHECK_THROWS_AS(parse_structure_json("{"), ParseError);
  CHECK_THROWS_AS(parse_structure_json(R"({"language": {"E": 2}, "n": 2, "relations": {"F": []}})"), ParseError);
  CHECK_THROWS_AS(parse_structure_json(R"({"language": {"E": 2}, "n": 2, "relations": {"E": [[0]]}})"), ParseError);
  CHECK_THROWS_AS(parse_structure_json(R"({"language": {"E": 2}, "n": 2, "relations": {"E": [[0, 2]]}})"), ParseError);
  CHECK_THROWS_AS(parse_structure_json(R"({"language": {"E": 2}, "n": 0})"), ParseError);
}
