#include "fhorder/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "fhorder/errors.hpp"

namespace fhorder {

namespace {

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

void check_order(std::size_t n) {
  if (n == 0) throw SizeError("graph must have at least one vertex");
  if (n > Graph::kMaxVertices)
    throw SizeError("graph has " + std::to_string(n) + " vertices; at most " +
                    std::to_string(Graph::kMaxVertices) + " are supported");
}

}  // namespace

Graph::Graph(std::size_t n) : rows_((check_order(n), n), 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw SizeError("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= size())
    throw RangeError("vertex " + std::to_string(v) + " out of range for graph on " +
                     std::to_string(size()) + " vertices");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[u] & bit(v)) != 0;
}

std::uint64_t Graph::row(Vertex v) const {
  check_vertex(v);
  return rows_[v];
}

std::size_t Graph::degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(row(v))); }

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v = u + 1; v < size(); ++v)
      if (rows_[u] & bit(v)) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

std::uint64_t Graph::vertex_mask() const noexcept {
  return size() == 64 ? ~std::uint64_t{0} : bit(static_cast<Vertex>(size())) - 1;
}

Mapping::Mapping(std::size_t target_size, std::vector<Vertex> image)
    : target_size_(target_size), image_(std::move(image)) {
  for (Vertex v : image_)
    if (v >= target_size_)
      throw RangeError("mapping image " + std::to_string(v) + " outside target of size " +
                       std::to_string(target_size_));
}

Mapping Mapping::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return Mapping(n, std::move(image));
}

bool Mapping::injective() const {
  std::vector<bool> hit(target_size_, false);
  for (Vertex v : image_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Mapping Mapping::then(const Mapping& next) const {
  if (next.source_size() != target_size_)
    throw ShapeError("cannot compose: target size " + std::to_string(target_size_) +
                     " differs from next source size " + std::to_string(next.source_size()));
  std::vector<Vertex> image(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) image[i] = next.image_[image_[i]];
  return Mapping(next.target_size_, std::move(image));
}

VertexSet neighborhood(const Graph& g, Vertex v) { return mask_to_set(g.row(v)); }

VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t set_to_mask(const VertexSet& s) {
  std::uint64_t mask = 0;
  for (Vertex v : s) {
    if (v >= Graph::kMaxVertices) throw RangeError("vertex " + std::to_string(v) + " out of range");
    mask |= bit(v);
  }
  return mask;
}

bool is_point_determining(const Graph& g) {
  std::vector<std::uint64_t> rows;
  rows.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) rows.push_back(g.row(v));
  std::sort(rows.begin(), rows.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

Quotient pd_quotient(const Graph& g) {
  Quotient q{g, Mapping::identity(g.size()), {}};
  q.representatives.resize(g.size());
  std::iota(q.representatives.begin(), q.representatives.end(), Vertex{0});

  while (true) {
    const Graph& cur = q.graph;
    std::map<std::uint64_t, Vertex> first_with_row;
    std::vector<Vertex> kept;
    std::vector<Vertex> class_of(cur.size());
    for (Vertex v = 0; v < cur.size(); ++v) {
      auto [it, inserted] = first_with_row.try_emplace(cur.row(v), static_cast<Vertex>(kept.size()));
      if (inserted) kept.push_back(v);
      class_of[v] = it->second;
    }
    if (kept.size() == cur.size()) break;

    Subgraph sub = induced_subgraph(cur, kept);
    std::vector<Vertex> reps(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) reps[i] = q.representatives[kept[i]];
    q.map = q.map.then(Mapping(kept.size(), std::move(class_of)));
    q.graph = std::move(sub.graph);
    q.representatives = std::move(reps);
  }
  return q;
}

namespace {

// Ordered partition of the vertex set; each cell lists its vertices.
using Partition = std::vector<std::vector<Vertex>>;

// Splits cells by neighbour counts into every cell until stable. Each split
// depends only on the current ordered partition, so relabelling the graph
// relabels the result.
void refine(const Graph& g, Partition& cells) {
  const std::size_t n = g.size();
  std::vector<std::uint64_t> cell_mask;
  while (true) {
    cell_mask.assign(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c]) cell_mask[c] |= bit(v);

    Partition next;
    next.reserve(n);
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) {
        std::vector<int> sig(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c)
          sig[c] = std::popcount(g.row(v) & cell_mask[c]);
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

std::string encode(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.size();
  const std::size_t row_bytes = (n + 7) / 8;
  std::string out(1 + n * row_bytes, '\0');
  out[0] = static_cast<char>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t r = g.row(order[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (r & bit(order[j])) {
        // Most significant bit first so byte order matches position order.
        out[1 + i * row_bytes + j / 8] |= static_cast<char>(0x80u >> (j % 8));
      }
    }
  }
  return out;
}

struct CanonicalSearch {
  const Graph& g;
  std::string best;
  std::vector<Vertex> best_order;

  void run(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<Vertex> order;
      order.reserve(cells.size());
      for (const auto& c : cells) order.push_back(c.front());
      std::string label = encode(g, order);
      if (best.empty() || label < best) {
        best = std::move(label);
        best_order = std::move(order);
      }
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    for (Vertex v : cells[index]) {
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(index));
      child.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : cells[index])
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(index) + 1, cells.end());
      run(std::move(child));
    }
  }
};

CanonicalSearch search_canonical(const Graph& g) {
  CanonicalSearch search{g, {}, {}};
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), Vertex{0});
  search.run(Partition{std::move(all)});
  return search;
}

}  // namespace

CanonicalLabel canonical_form(const Graph& g) { return search_canonical(g).best; }

Graph canonical_graph(const Graph& g) {
  const auto search = search_canonical(g);
  std::vector<Vertex> position(g.size());
  for (std::size_t i = 0; i < search.best_order.size(); ++i) position[search.best_order[i]] = static_cast<Vertex>(i);
  Graph out(g.size());
  for (auto [u, v] : g.edges()) out.add_edge(position[u], position[v]);
  return out;
}

Subgraph remove_vertex(const Graph& g, Vertex v) {
  if (v >= g.size())
    throw RangeError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(g.size()) +
                     " vertices");
  if (g.size() < 2) throw SizeError("cannot remove the only vertex of a graph");
  VertexSet rest;
  for (Vertex u = 0; u < g.size(); ++u)
    if (u != v) rest.push_back(u);
  return induced_subgraph(g, rest);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  VertexSet sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw SizeError("induced subgraph on an empty vertex set");
  for (Vertex v : sorted)
    if (v >= g.size()) throw RangeError("vertex " + std::to_string(v) + " out of range");

  Graph sub(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j])) sub.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Subgraph{std::move(sub), std::move(sorted)};
}

Graph add_vertex(const Graph& g, std::uint64_t neighbours) {
  if ((neighbours & ~g.vertex_mask()) != 0) throw RangeError("neighbour mask outside the vertex set");
  Graph out(g.size() + 1, g.edges());
  const auto fresh = static_cast<Vertex>(g.size());
  for (Vertex v : mask_to_set(neighbours)) out.add_edge(v, fresh);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.size() + b.size(), a.edges());
  const auto shift = static_cast<Vertex>(a.size());
  for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

}  // namespace fhorder
