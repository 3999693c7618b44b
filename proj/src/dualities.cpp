#include "fhorder/dualities.hpp"

#include <algorithm>
#include <map>

#include "fhorder/enumeration.hpp"
#include "fhorder/errors.hpp"
#include "fhorder/fullhom.hpp"
#include "fhorder/gaps.hpp"
#include "fhorder/graph_io.hpp"

namespace fhorder {

namespace {

constexpr std::size_t kMaxTargetCore = 20;

std::vector<Graph> normalise(const std::vector<Graph>& targets) {
  if (targets.empty()) throw ArgumentError("target family must be nonempty");
  std::vector<Graph> out;
  out.reserve(targets.size());
  for (const auto& d : targets) out.push_back(pd_quotient(d).graph);
  return out;
}

}  // namespace

bool DualityPair::maps_into_targets(const Graph& g) const {
  return lower_labels_.contains(canonical_form(pd_quotient(g).graph));
}

std::vector<Graph> lower_set(const std::vector<Graph>& targets) {
  std::map<CanonicalLabel, Graph> members;
  for (const Graph& core : normalise(targets)) {
    if (core.size() > kMaxTargetCore)
      throw CostGuardError("lower set enumerates all induced subgraphs; target cores above " +
                           std::to_string(kMaxTargetCore) + " vertices are not supported");
    const std::uint64_t subsets = std::uint64_t{1} << core.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      Graph sub = induced_subgraph(core, mask_to_set(mask)).graph;
      if (!is_point_determining(sub)) continue;
      members.try_emplace(canonical_form(sub), std::move(sub));
    }
  }
  std::vector<Graph> out;
  out.reserve(members.size());
  for (auto& [_, g] : members) out.push_back(std::move(g));
  return out;
}

DualityPair duality_frontier(const std::vector<Graph>& targets) {
  DualityPair pair;
  pair.targets = normalise(targets);
  pair.lower_set = lower_set(pair.targets);
  for (const auto& g : pair.lower_set) pair.lower_labels_.insert(canonical_form(g));

  std::map<CanonicalLabel, Graph> frontier;
  for (const auto& g : pair.lower_set) {
    for (Graph h : gap_extensions(g)) {
      auto label = canonical_form(h);
      if (pair.lower_labels_.contains(label)) continue;
      frontier.try_emplace(std::move(label), std::move(h));
    }
  }
  // A candidate containing a smaller candidate is implied by it and dropped,
  // which leaves every remaining member indispensable.
  for (auto& [_, h] : frontier) {
    const bool implied = std::any_of(frontier.begin(), frontier.end(), [&](const auto& other) {
      return other.second.size() < h.size() && induced_embedding(other.second, h).has_value();
    });
    if (!implied) pair.frontier.push_back(h);
  }
  return pair;
}

DualityVerdict check_duality(const std::vector<Graph>& frontier, const std::vector<Graph>& targets,
                             std::size_t max_vertices) {
  if (max_vertices == 0) throw ArgumentError("check_duality needs max_vertices >= 1");
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    for (const Graph& g : enumerate_pd_graphs(n).members) {
      const bool obstructed = std::any_of(frontier.begin(), frontier.end(),
                                          [&](const Graph& f) { return find_full_hom(f, g).has_value(); });
      const bool maps_to_target = std::any_of(targets.begin(), targets.end(),
                                              [&](const Graph& d) { return find_full_hom(g, d).has_value(); });
      if (obstructed == maps_to_target) return DualityVerdict{g};
    }
  }
  return DualityVerdict{};
}

void verify(DualityPair& pair, std::size_t max_vertices) {
  const auto verdict = check_duality(pair.frontier, pair.targets, max_vertices);
  if (!verdict.passed())
    throw InvariantError("duality check failed on " + format_inline(*verdict.counterexample));
  pair.verified_up_to = max_vertices;
}

}  // namespace fhorder
