#pragma once

#include <optional>

#include "fhorder/graph.hpp"

namespace fhorder {

enum class WitnessKind { general, embedding };

struct FullHomWitness {
  Mapping mapping;
  /// `embedding` exactly when the mapping is injective.
  WitnessKind kind;
};

/// True iff for every pair u != v: u~v in g <=> f(u)~f(v) in h.
/// Two non-adjacent vertices may share an image. Throws ShapeError when the
/// mapping does not go from g to h.
bool is_full_hom(const Graph& g, const Graph& h, const Mapping& f);

/// Injective map reflecting adjacency exactly, or nullopt. Source vertices
/// are assigned in index order and targets tried in index order, so the
/// result is the lexicographically first such map.
std::optional<Mapping> induced_embedding(const Graph& g, const Graph& h);

/// Full homomorphism g -> h if one exists.
///
/// Both graphs are reduced to their point-determining quotients; a full
/// homomorphism exists exactly when the smaller quotient embeds induced into
/// the larger one. The witness composes g's quotient map with that embedding,
/// read back into h.
std::optional<FullHomWitness> find_full_hom(const Graph& g, const Graph& h);

/// F-cores are exactly the point-determining graphs.
bool is_f_core(const Graph& g);

/// Full homomorphisms exist in both directions.
bool fhom_equivalent(const Graph& g, const Graph& h);

}  // namespace fhorder
