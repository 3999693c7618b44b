#pragma once

#include <optional>
#include <set>
#include <vector>

#include "fhorder/graph.hpp"

namespace fhorder {

/// A finite obstruction set (`frontier`) for a finite family of targets:
/// some frontier graph maps fully into G exactly when G maps fully into no
/// target.
struct DualityPair {
  std::vector<Graph> frontier;
  /// Point-determining quotients of the requested targets.
  std::vector<Graph> targets;
  /// Every point-determining graph that maps fully into some target.
  std::vector<Graph> lower_set;
  /// Largest vertex count checked by the last successful verification; 0
  /// when unverified.
  std::size_t verified_up_to = 0;

  /// Whether g maps fully into some target. Answered by looking up the
  /// canonical label of g's quotient in the lower set.
  bool maps_into_targets(const Graph& g) const;

 private:
  friend DualityPair duality_frontier(const std::vector<Graph>& targets);
  std::set<CanonicalLabel> lower_labels_;
};

/// Point-determining graphs, one per isomorphism class, admitting a full
/// homomorphism into some member of `targets`, in canonical-label order.
/// Throws ArgumentError on an empty family.
std::vector<Graph> lower_set(const std::vector<Graph>& targets);

/// Frontier of the lower set. Candidates are the point-determining one-vertex
/// extensions of lower-set members that are not themselves in the lower set;
/// a candidate containing another candidate as an induced subgraph is
/// redundant and dropped, so no member can be removed without breaking the
/// duality. Each frontier graph has at most max |V(target)| + 1 vertices.
DualityPair duality_frontier(const std::vector<Graph>& targets);

struct DualityVerdict {
  /// First point-determining graph (by size, then canonical label)
  /// violating the duality biconditional.
  std::optional<Graph> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

/// Brute-force verification over every point-determining graph with at most
/// `max_vertices` vertices. Both sides are decided by direct full
/// homomorphism search, independent of how the frontier was built.
DualityVerdict check_duality(const std::vector<Graph>& frontier, const std::vector<Graph>& targets,
                             std::size_t max_vertices);

/// Runs check_duality and records the bound on success. Throws
/// InvariantError with the counterexample otherwise.
void verify(DualityPair& pair, std::size_t max_vertices);

}  // namespace fhorder
