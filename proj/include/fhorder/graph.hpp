#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fhorder {

using Vertex = unsigned;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertices of some ambient graph.
using VertexSet = std::vector<Vertex>;

/// Byte string identifying a graph up to isomorphism.
using CanonicalLabel = std::string;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one 64-bit neighbourhood mask per vertex, so graphs
/// hold between 1 and kMaxVertices vertices. Loops are rejected; relational
/// structures cover the looped case.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);

  std::size_t size() const noexcept { return rows_.size(); }
  bool adjacent(Vertex u, Vertex v) const;
  std::uint64_t row(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const noexcept;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);

  /// Mask with one bit per vertex.
  std::uint64_t vertex_mask() const noexcept;

  /// Labelled equality.
  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> rows_;
};

/// Total vertex map from a source graph of `image.size()` vertices into a
/// target graph of `target_size` vertices.
class Mapping {
 public:
  Mapping(std::size_t target_size, std::vector<Vertex> image);

  static Mapping identity(std::size_t n);

  std::size_t source_size() const noexcept { return image_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }
  const std::vector<Vertex>& image() const noexcept { return image_; }
  Vertex operator()(Vertex v) const { return image_.at(v); }

  bool injective() const;

  /// `next` after `*this`.
  Mapping then(const Mapping& next) const;

  bool operator==(const Mapping&) const = default;

 private:
  std::size_t target_size_;
  std::vector<Vertex> image_;
};

/// Result of collapsing twin classes.
struct Quotient {
  Graph graph;
  /// Original graph -> quotient; a full homomorphism.
  Mapping map;
  /// Quotient vertex -> the original vertex kept for it (lowest index of its class).
  std::vector<Vertex> representatives;
};

/// Induced subgraph with the original identity of each kept vertex.
struct Subgraph {
  Graph graph;
  /// New vertex -> original vertex, strictly increasing.
  std::vector<Vertex> original;
};

VertexSet neighborhood(const Graph& g, Vertex v);

VertexSet mask_to_set(std::uint64_t mask);
std::uint64_t set_to_mask(const VertexSet& s);

bool is_point_determining(const Graph& g);

/// Repeatedly merges vertices with equal neighbourhoods into the lowest
/// indexed vertex of each class until the graph is point-determining.
Quotient pd_quotient(const Graph& g);

/// Equal for two graphs exactly when they are isomorphic.
///
/// Colour refinement with individualisation; the label is the minimum
/// adjacency encoding over all leaves of the search tree.
CanonicalLabel canonical_form(const Graph& g);

/// The graph relabelled into the vertex order that realises its canonical label.
Graph canonical_graph(const Graph& g);

/// Order-preserving deletion of v. Throws SizeError when g has one vertex.
Subgraph remove_vertex(const Graph& g, Vertex v);

/// Subgraph induced on `vertices` (any order, duplicates ignored), relabelled
/// in increasing original order. Throws SizeError on an empty set.
Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// The graph with one extra vertex (index n) adjacent to `neighbours`.
Graph add_vertex(const Graph& g, std::uint64_t neighbours);

/// Disjoint union, vertices of `b` shifted after those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace fhorder
