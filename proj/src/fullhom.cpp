#include "fhorder/fullhom.hpp"

#include <bit>

#include "fhorder/errors.hpp"

namespace fhorder {

bool is_full_hom(const Graph& g, const Graph& h, const Mapping& f) {
  if (f.source_size() != g.size() || f.target_size() != h.size())
    throw ShapeError("mapping is " + std::to_string(f.source_size()) + " -> " + std::to_string(f.target_size()) +
                     " but graphs have " + std::to_string(g.size()) + " and " + std::to_string(h.size()) +
                     " vertices");
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      const bool image_adjacent = f(u) != f(v) && h.adjacent(f(u), f(v));
      if (g.adjacent(u, v) != image_adjacent) return false;
    }
  }
  return true;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& g, const Graph& h) : g_(g), h_(h), image_(g.size()) {}

  std::optional<Mapping> run() {
    if (g_.size() > h_.size()) return std::nullopt;
    if (!extend(0, 0)) return std::nullopt;
    return Mapping(h_.size(), image_);
  }

 private:
  bool extend(Vertex next, std::uint64_t used) {
    if (next == g_.size()) return true;
    const std::size_t deg = g_.degree(next);
    const std::size_t non_deg = g_.size() - 1 - deg;
    for (Vertex t = 0; t < h_.size(); ++t) {
      if (used & (std::uint64_t{1} << t)) continue;
      // Degree pruning: an induced embedding injects neighbours into
      // neighbours and non-neighbours into non-neighbours.
      const std::size_t t_deg = h_.degree(t);
      if (t_deg < deg || h_.size() - 1 - t_deg < non_deg) continue;
      bool consistent = true;
      for (Vertex u = 0; u < next && consistent; ++u)
        consistent = g_.adjacent(u, next) == h_.adjacent(image_[u], t);
      if (!consistent) continue;
      image_[next] = t;
      if (extend(next + 1, used | (std::uint64_t{1} << t))) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> image_;
};

}  // namespace

std::optional<Mapping> induced_embedding(const Graph& g, const Graph& h) { return EmbeddingSearch(g, h).run(); }

std::optional<FullHomWitness> find_full_hom(const Graph& g, const Graph& h) {
  const Quotient gq = pd_quotient(g);
  const Quotient hq = pd_quotient(h);
  auto embedding = induced_embedding(gq.graph, hq.graph);
  if (!embedding) return std::nullopt;

  Mapping mapping = gq.map.then(*embedding).then(Mapping(h.size(), hq.representatives));
  if (!is_full_hom(g, h, mapping)) throw InvariantError("composed full homomorphism witness failed verification");
  const WitnessKind kind = mapping.injective() ? WitnessKind::embedding : WitnessKind::general;
  return FullHomWitness{std::move(mapping), kind};
}

bool is_f_core(const Graph& g) { return is_point_determining(g); }

bool fhom_equivalent(const Graph& g, const Graph& h) {
  return canonical_form(pd_quotient(g).graph) == canonical_form(pd_quotient(h).graph);
}

}  // namespace fhorder
