#include "fhorder/gaps.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "fhorder/errors.hpp"
#include "fhorder/fullhom.hpp"

namespace fhorder {

namespace {

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.size())
    throw RangeError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(g.size()) +
                     " vertices");
}

void require_point_determining(const Graph& g, const char* op) {
  if (!is_point_determining(g)) throw PreconditionError(std::string(op) + " requires a point-determining graph");
}

// Candidate determiners of {u, u2} without the distinctness and pd checks.
bool determines_unchecked(const Graph& g, Vertex v, Vertex u, Vertex u2) {
  const std::uint64_t a = g.row(u);
  const std::uint64_t b = g.row(u2);
  return a != b && (a & ~bit(v)) == (b & ~bit(v));
}

}  // namespace

bool determines(const Graph& g, Vertex v, Vertex u, Vertex u2) {
  require_vertex(g, v);
  require_vertex(g, u);
  require_vertex(g, u2);
  if (v == u || v == u2 || u == u2) throw ArgumentError("determines needs three distinct vertices");
  return determines_unchecked(g, v, u, u2);
}

std::optional<Vertex> determining_vertex(const Graph& g, Vertex u, Vertex u2) {
  require_vertex(g, u);
  require_vertex(g, u2);
  if (u == u2) throw ArgumentError("determining_vertex needs two distinct vertices");
  require_point_determining(g, "determining_vertex");

  std::optional<Vertex> found;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (v == u || v == u2 || !determines_unchecked(g, v, u, u2)) continue;
    if (found)
      throw InvariantError("pair {" + std::to_string(u) + "," + std::to_string(u2) + "} has two determiners");
    found = v;
  }
  return found;
}

DeterminingGraph determining_graph(const Graph& g, const VertexSet& witness_set) {
  require_point_determining(g, "determining_graph");
  for (Vertex v : witness_set) require_vertex(g, v);
  VertexSet a = witness_set;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  const std::uint64_t a_mask = set_to_mask(a);

  DeterminingGraph out{g, a, {}};
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex u2 = u + 1; u2 < g.size(); ++u2) {
      auto v = determining_vertex(g, u, u2);
      if (v && (a_mask & bit(*v))) out.aux_edges.push_back({u, u2, *v});
    }
  }
  return out;
}

ForestDeterminerCheck compare_forest_determiners(const Graph& g, const VertexSet& witness_set) {
  const DeterminingGraph aux = determining_graph(g, witness_set);
  const std::size_t n = g.size();

  std::vector<std::vector<const DeterminedPair*>> incident(n);
  for (const auto& e : aux.aux_edges) {
    incident[e.u].push_back(&e);
    incident[e.u2].push_back(&e);
  }
  for (auto& list : incident)
    std::sort(list.begin(), list.end(), [](const DeterminedPair* x, const DeterminedPair* y) {
      return std::pair(x->u, x->u2) < std::pair(y->u, y->u2);
    });

  ForestDeterminerCheck out{{}, {}, {}, false};
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const DeterminedPair* e : incident[x]) {
        const Vertex y = e->u == x ? e->u2 : e->u;
        if (seen[y]) continue;
        seen[y] = true;
        out.forest.push_back(*e);
        queue.push_back(y);
      }
    }
  }
  std::sort(out.forest.begin(), out.forest.end(),
            [](const auto& x, const auto& y) { return std::pair(x.u, x.u2) < std::pair(y.u, y.u2); });

  std::uint64_t b = 0;
  std::uint64_t c = 0;
  for (const auto& e : aux.aux_edges) b |= bit(e.determiner);
  for (const auto& e : out.forest) c |= bit(e.determiner);
  out.determiners_of_aux = mask_to_set(b);
  out.determiners_of_forest = mask_to_set(c);
  out.equal = b == c;
  return out;
}

VertexSet removable_vertices(const Graph& g) {
  if (g.size() < 2) throw SizeError("removable_vertices requires at least 2 vertices");
  require_point_determining(g, "removable_vertices");
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (is_point_determining(remove_vertex(g, v).graph)) out.push_back(v);
  // At least one vertex is always removable. Two is not guaranteed: in K_2 + K_1
  // deleting either end of the edge leaves two isolated twins.
  if (out.empty()) throw InvariantError("point-determining graph without a removable vertex");
  return out;
}

std::optional<GapCertificate> is_gap(const Graph& lower, const Graph& upper) {
  if (upper.size() != lower.size() + 1) return std::nullopt;
  if (!is_point_determining(lower) || !is_point_determining(upper)) return std::nullopt;
  auto embedding = induced_embedding(lower, upper);
  if (!embedding) return std::nullopt;

  std::uint64_t image = 0;
  for (Vertex v : embedding->image()) image |= bit(v);
  const auto removed = static_cast<Vertex>(std::countr_zero(upper.vertex_mask() & ~image));
  return GapCertificate{lower, upper, std::move(*embedding), removed};
}

std::vector<Graph> gap_extensions(const Graph& g) {
  require_point_determining(g, "gap_extensions");
  if (g.size() >= Graph::kMaxVertices) throw SizeError("graph is already at the maximum size");
  if (g.size() > 20) throw CostGuardError("gap_extensions scans 2^n neighbourhoods; n <= 20 supported");

  std::map<CanonicalLabel, Graph> classes;
  const std::uint64_t subsets = std::uint64_t{1} << g.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Graph h = add_vertex(g, mask);
    if (!is_point_determining(h)) continue;
    classes.try_emplace(canonical_form(h), std::move(h));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [_, h] : classes) out.push_back(std::move(h));
  return out;
}

std::vector<Graph> core_chain(const Graph& g) {
  require_point_determining(g, "core_chain");
  std::vector<Graph> chain{g};
  while (chain.back().size() > 1) {
    const VertexSet removable = removable_vertices(chain.back());
    chain.push_back(remove_vertex(chain.back(), removable.front()).graph);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace fhorder
