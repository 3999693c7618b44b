#include <doctest.h>

#include <set>

#include "bridge.hpp"
#include "fhorder/enumeration.hpp"
#include "fhorder/errors.hpp"
#include "fhorder/fullhom.hpp"
#include "fhorder/gaps.hpp"

using namespace fhorder;

namespace {

Graph k2_plus_k1() { return Graph(3, {{0, 1}}); }

std::vector<Graph> pd_classes_up_to(std::size_t n_max) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto cat = enumerate_pd_graphs(n);
    out.insert(out.end(), cat.members.begin(), cat.members.end());
  }
  return out;
}

VertexSet subset(std::size_t n, std::uint64_t bits) {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if ((bits >> v) & 1U) s.push_back(v);
  return s;
}

}  // namespace

TEST_CASE("determines examples") {
  const Graph p4 = Graph::path(4);
  CHECK(determines(p4, 3, 0, 2));
  CHECK_FALSE(determines(Graph::complete(3), 2, 0, 1));
  CHECK_FALSE(determines(p4, 0, 1, 2));
  CHECK_THROWS_AS(determines(p4, 0, 0, 2), ArgumentError);
  // Twins are never determined: they already agree before any deletion.
  CHECK_FALSE(determines(Graph::path(3), 1, 0, 2));
}

TEST_CASE("determining_vertex examples") {
  CHECK(determining_vertex(Graph::path(4), 0, 2) == Vertex{3});
  CHECK_FALSE(determining_vertex(Graph::complete(3), 0, 1));
  CHECK(determining_vertex(k2_plus_k1(), 0, 2) == Vertex{1});
  CHECK_THROWS_AS(determining_vertex(Graph::path(3), 0, 2), PreconditionError);
}

TEST_CASE("determining_graph examples") {
  const auto p4 = determining_graph(Graph::path(4), {0, 1, 2, 3});
  CHECK(p4.aux_edges == std::vector<DeterminedPair>{{0, 2, 3}, {1, 3, 0}});

  CHECK(determining_graph(Graph::complete(3), {0, 1, 2}).aux_edges.empty());

  const auto small = determining_graph(k2_plus_k1(), {1});
  CHECK(small.aux_edges == std::vector<DeterminedPair>{{0, 2, 1}});
}

TEST_CASE("compare_forest_determiners examples") {
  const auto p4 = compare_forest_determiners(Graph::path(4), {0, 1, 2, 3});
  CHECK(p4.determiners_of_aux == VertexSet{0, 3});
  CHECK(p4.determiners_of_forest == VertexSet{0, 3});
  CHECK(p4.forest.size() == 2);
  CHECK(p4.equal);

  const auto k3 = compare_forest_determiners(Graph::complete(3), {0, 1, 2});
  CHECK(k3.determiners_of_aux.empty());
  CHECK(k3.determiners_of_forest.empty());
  CHECK(k3.equal);
}

TEST_CASE("compare_forest_determiners holds for every pd graph with n <= 5 and every witness set") {
  for (const auto& g : pd_classes_up_to(5)) {
    const std::size_t n = g.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const auto r = compare_forest_determiners(g, subset(n, bits));
      REQUIRE(r.equal);
      // The forest spans every component of the auxiliary graph.
      const auto aux = determining_graph(g, subset(n, bits));
      std::set<std::pair<Vertex, Vertex>> forest_pairs;
      for (const auto& e : r.forest) forest_pairs.emplace(e.u, e.u2);
      for (const auto& e : r.forest) REQUIRE(std::find(aux.aux_edges.begin(), aux.aux_edges.end(), e) != aux.aux_edges.end());
      REQUIRE(forest_pairs.size() == r.forest.size());
    }
  }
}

TEST_CASE("determiners are unique and never split adjacent pairs (pd, n <= 6)") {
  for (const auto& g : pd_classes_up_to(6)) {
    const std::size_t n = g.size();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex u2 = u + 1; u2 < n; ++u2) {
        std::size_t count = 0;
        for (Vertex v = 0; v < n; ++v) {
          if (v == u || v == u2 || !determines(g, v, u, u2)) continue;
          ++count;
          REQUIRE_FALSE(g.adjacent(u, u2));
        }
        REQUIRE(count <= 1);
        REQUIRE(determining_vertex(g, u, u2).has_value() == (count == 1));
      }
    }
  }
}

TEST_CASE("removable_vertices examples") {
  CHECK(removable_vertices(Graph::complete(2)) == VertexSet{0, 1});
  CHECK(removable_vertices(Graph::path(4)) == VertexSet{1, 2});
  CHECK(removable_vertices(Graph::complete(3)) == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(removable_vertices(Graph::path(3)), PreconditionError);
  CHECK_THROWS_AS(removable_vertices(Graph(1)), SizeError);
}

TEST_CASE("removable vertices exist, are genuine, and usually come in pairs (pd, 2 <= n <= 6)") {
  // Graphs with a single removable vertex, by size. K_2 + K_1 is the smallest.
  std::vector<std::size_t> singles(7, 0);
  for (const auto& g : pd_classes_up_to(6)) {
    if (g.size() < 2) continue;
    const auto r = removable_vertices(g);
    REQUIRE_FALSE(r.empty());
    if (r.size() == 1) ++singles[g.size()];
    for (Vertex v = 0; v < g.size(); ++v) {
      const bool listed = std::find(r.begin(), r.end(), v) != r.end();
      REQUIRE(listed == oracle::point_determining(bridge::to_matrix(remove_vertex(g, v).graph)));
    }
  }
  CHECK(singles == std::vector<std::size_t>{0, 0, 0, 1, 0, 2, 0});
  CHECK(removable_vertices(k2_plus_k1()) == VertexSet{2});
}

TEST_CASE("is_gap examples") {
  const auto a = is_gap(Graph(1), Graph::complete(2));
  REQUIRE(a);
  CHECK(a->removed_vertex == 1);

  const auto b = is_gap(Graph::complete(2), Graph::complete(3));
  REQUIRE(b);
  CHECK(b->embedding.image() == std::vector<Vertex>{0, 1});
  CHECK(b->removed_vertex == 2);

  CHECK_FALSE(is_gap(Graph::complete(2), Graph::path(4)));
  CHECK_FALSE(is_gap(Graph::complete(2), Graph::path(3)));  // P_3 is not an F-core
  CHECK_FALSE(is_gap(Graph::complete(3), Graph::path(4)));  // no induced triangle
  CHECK_FALSE(is_gap(Graph::complete(2), Graph::complete(2)));
}

TEST_CASE("is_gap agrees with the definition on pd graphs up to 5 vertices") {
  const auto graphs = pd_classes_up_to(5);
  const std::size_t count = graphs.size();
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      below[i][j] = oracle::full_hom_exists(bridge::to_matrix(graphs[i]), bridge::to_matrix(graphs[j]));
  auto strictly = [&](std::size_t i, std::size_t j) { return below[i][j] && !below[j][i]; };

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (!strictly(i, j)) {
        REQUIRE_FALSE(is_gap(graphs[i], graphs[j]));
        continue;
      }
      bool intermediate = false;
      for (std::size_t k = 0; k < count && !intermediate; ++k) intermediate = strictly(i, k) && strictly(k, j);
      REQUIRE(is_gap(graphs[i], graphs[j]).has_value() == !intermediate);
    }
  }
}

TEST_CASE("gap_extensions examples") {
  CHECK(gap_extensions(Graph(1)) == std::vector<Graph>{Graph::complete(2)});

  const auto k2 = gap_extensions(Graph::complete(2));
  REQUIRE(k2.size() == 2);
  std::set<CanonicalLabel> labels{canonical_form(k2[0]), canonical_form(k2[1])};
  CHECK(labels == std::set<CanonicalLabel>{canonical_form(k2_plus_k1()), canonical_form(Graph::complete(3))});
  CHECK(canonical_form(k2[0]) < canonical_form(k2[1]));

  CHECK_THROWS_AS(gap_extensions(Graph::path(3)), PreconditionError);
}

TEST_CASE("gap_extensions are gaps and cover every pd graph one vertex larger (n <= 5)") {
  for (const auto& g : pd_classes_up_to(5)) {
    std::set<CanonicalLabel> produced;
    for (const auto& h : gap_extensions(g)) {
      REQUIRE(is_gap(g, h));
      REQUIRE(produced.insert(canonical_form(h)).second);
    }
    // Completeness: every pd graph on n+1 vertices containing g induced is listed.
    for (const auto& h : enumerate_pd_graphs(g.size() + 1).members)
      REQUIRE(produced.count(canonical_form(h)) == (induced_embedding(g, h).has_value() ? 1U : 0U));
  }
}

TEST_CASE("core_chain examples") {
  CHECK(core_chain(Graph(1)) == std::vector<Graph>{Graph(1)});
  CHECK(core_chain(Graph::complete(3)) ==
        std::vector<Graph>{Graph(1), Graph::complete(2), Graph::complete(3)});
  // Deleting vertex 1 of P_4 compacts {0, 2, 3} to an isolated 0 and an edge 1-2.
  CHECK(core_chain(Graph::path(4)) ==
        std::vector<Graph>{Graph(1), Graph::complete(2), Graph(3, {{1, 2}}), Graph::path(4)});
  CHECK_THROWS_AS(core_chain(Graph::path(3)), PreconditionError);
}

TEST_CASE("core chains climb by gaps (pd, n <= 6)") {
  for (const auto& g : pd_classes_up_to(6)) {
    const auto chain = core_chain(g);
    REQUIRE(chain.size() == g.size());
    REQUIRE(chain.front() == Graph(1));
    REQUIRE(chain.back() == g);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) REQUIRE(is_gap(chain[i], chain[i + 1]));
  }
}
