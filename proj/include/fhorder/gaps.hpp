#pragma once

#include <optional>
#include <vector>

#include "fhorder/graph.hpp"

namespace fhorder {

/// Vertex `v` determines the pair {u, u2} when the two have different
/// neighbourhoods in g but equal neighbourhoods once v is deleted.
///
/// The "different in g" conjunct keeps the relation meaningful on graphs with
/// twins; on point-determining graphs it always holds. Throws ArgumentError
/// unless v, u, u2 are pairwise distinct.
bool determines(const Graph& g, Vertex v, Vertex u, Vertex u2);

/// The unique vertex determining {u, u2}, if any. Requires a
/// point-determining graph.
std::optional<Vertex> determining_vertex(const Graph& g, Vertex u, Vertex u2);

/// An edge of the auxiliary graph together with the witness-set vertex that
/// determines it.
struct DeterminedPair {
  Vertex u;
  Vertex u2;  ///< u < u2
  Vertex determiner;

  bool operator==(const DeterminedPair&) const = default;
};

/// Auxiliary graph on the vertices of `base`: {u, u2} is an edge iff some
/// vertex of `witness_set` determines it.
struct DeterminingGraph {
  Graph base;
  VertexSet witness_set;
  std::vector<DeterminedPair> aux_edges;  ///< sorted by (u, u2)
};

DeterminingGraph determining_graph(const Graph& g, const VertexSet& witness_set);

struct ForestDeterminerCheck {
  VertexSet determiners_of_aux;     ///< vertices determining some auxiliary edge
  VertexSet determiners_of_forest;  ///< vertices determining some edge of the spanning forest
  std::vector<DeterminedPair> forest;
  bool equal;
};

/// Builds the auxiliary graph for `witness_set`, grows a breadth-first
/// spanning forest from the lowest-index root of each component and compares
/// the determiners of all auxiliary edges against those of forest edges. On
/// point-determining graphs the two sets always coincide.
ForestDeterminerCheck compare_forest_determiners(const Graph& g, const VertexSet& witness_set);

/// Vertices whose deletion leaves a point-determining graph. Requires a
/// point-determining graph on at least 2 vertices. The result is never empty
/// (InvariantError otherwise) but may be a single vertex, as for K_2 + K_1.
VertexSet removable_vertices(const Graph& g);

struct GapCertificate {
  Graph lower;
  Graph upper;
  /// Induced embedding lower -> upper.
  Mapping embedding;
  /// The vertex of `upper` outside the embedding image.
  Vertex removed_vertex;
};

/// Certificate iff both graphs are point-determining and lower embeds induced
/// into upper with exactly one vertex of upper left over. Non-point-determining
/// inputs are simply "not a gap".
std::optional<GapCertificate> is_gap(const Graph& lower, const Graph& upper);

/// All point-determining one-vertex extensions of g (new vertex last), one
/// per isomorphism class, ordered by canonical label. Requires a
/// point-determining graph.
std::vector<Graph> gap_extensions(const Graph& g);

/// K_1 = G_1, ..., G_k = g, each a point-determining graph one vertex smaller
/// than the next. Built by peeling the lowest-index removable vertex.
std::vector<Graph> core_chain(const Graph& g);

}  // namespace fhorder
