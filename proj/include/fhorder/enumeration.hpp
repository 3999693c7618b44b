#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fhorder/graph.hpp"
#include "fhorder/relstruct.hpp"

namespace fhorder {

/// Isomorphism classes on a fixed vertex count, sorted by canonical label.
struct IsoClassCatalog {
  std::size_t n = 0;
  std::vector<Graph> members;
  std::vector<CanonicalLabel> labels;

  std::size_t count() const noexcept { return members.size(); }
};

struct StructureCatalog {
  std::size_t n = 0;
  std::vector<RelStructure> members;
  std::vector<std::string> labels;

  std::size_t count() const noexcept { return members.size(); }
};

inline constexpr std::size_t kMaxEnumeratedVertices = 7;
inline constexpr std::size_t kDefaultStructureBudget = std::size_t{1} << 12;
inline constexpr std::size_t kBruteForceBudget = 10'000'000;

/// Every isomorphism class of graphs on n vertices (1 <= n <= 7), one
/// canonically labelled member each.
///
/// Sweeps all 2^(n(n-1)/2) labelled graphs. `jobs` splits the sweep across
/// threads; the result does not depend on it.
IsoClassCatalog enumerate_graphs(std::size_t n, unsigned jobs = 1);

/// enumerate_graphs(n) restricted to point-determining graphs.
IsoClassCatalog enumerate_pd_graphs(std::size_t n, unsigned jobs = 1);

/// Every isomorphism class of `language`-structures on n vertices. Throws
/// CostGuardError when the labelled sweep, 2^(sum over symbols of
/// n^arity) structures, exceeds `max_labelled`.
StructureCatalog enumerate_rel_structures(const Language& language, std::size_t n,
                                          std::size_t max_labelled = kDefaultStructureBudget);

/// First full homomorphism in lexicographic order over all |V(h)|^|V(g)|
/// maps. Throws CostGuardError above kBruteForceBudget maps.
std::optional<Mapping> brute_force_full_hom(const Graph& g, const Graph& h);
std::optional<Mapping> brute_force_full_hom(const RelStructure& a, const RelStructure& b);

/// Serialises a catalog: a `# count: <k>` line, then one JSON-escaped text
/// format string per member.
std::string format_catalog(const IsoClassCatalog& catalog);
std::vector<Graph> parse_catalog(std::string_view text);

}  // namespace fhorder
