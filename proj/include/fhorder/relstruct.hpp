#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fhorder/graph.hpp"

namespace fhorder {

struct Symbol {
  std::string name;
  std::size_t arity;

  bool operator==(const Symbol&) const = default;
};

/// Ordered list of relation symbols with unique names and positive arities.
class Language {
 public:
  Language() = default;
  explicit Language(std::vector<Symbol> symbols);

  /// One binary symbol, the language of digraphs.
  static Language digraph(std::string name = "E");

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t max_arity() const noexcept;

  bool operator==(const Language&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

using Tuple = std::vector<Vertex>;

/// Finite structure: vertices 0..n-1 and one tuple set per symbol.
class RelStructure {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  RelStructure(Language language, std::size_t n);

  const Language& language() const noexcept { return language_; }
  std::size_t size() const noexcept { return n_; }
  const std::set<Tuple>& relation(std::size_t symbol) const { return relations_.at(symbol); }
  bool contains(std::size_t symbol, const Tuple& t) const { return relations_.at(symbol).contains(t); }

  /// Throws ShapeError on an arity mismatch, RangeError on a bad entry.
  void add_tuple(std::size_t symbol, Tuple t);
  void add_tuple(std::string_view symbol, Tuple t);

  std::size_t tuple_count() const noexcept;

  bool operator==(const RelStructure&) const = default;

 private:
  Language language_;
  std::size_t n_;
  std::vector<std::set<Tuple>> relations_;
};

/// Tuple with every occurrence of one vertex replaced by kMarker.
struct MarkedTuple {
  static constexpr Vertex kMarker = ~Vertex{0};
  std::vector<Vertex> entries;

  auto operator<=>(const MarkedTuple&) const = default;
};

/// One set of marked tuples per symbol of the language, in language order.
struct Neighborhood {
  std::vector<std::set<MarkedTuple>> per_symbol;

  bool operator==(const Neighborhood&) const = default;
};

struct RelQuotient {
  RelStructure structure;
  Mapping map;
  std::vector<Vertex> representatives;
};

struct RelGapCertificate {
  RelStructure lower;
  RelStructure upper;
  Mapping embedding;
  Vertex removed_vertex;
};

/// Some symbol of arity >= 2 holds the constant tuple (v, ..., v).
bool has_loop(const RelStructure& a, Vertex v);

/// Per symbol R: without (v,...,v) in R, the marked forms of the R-tuples
/// containing v. With it, the marked forms of the tuples containing v that
/// are outside R, plus the marked constant tuple. Unary symbols always use
/// the first rule; both rules agree there.
Neighborhood rel_neighborhood(const RelStructure& a, Vertex v);

bool rel_is_point_determining(const RelStructure& a);

/// Fixpoint merge of equal-neighbourhood classes into their lowest vertex,
/// rewriting tuples through the merge map.
RelQuotient rel_pd_quotient(const RelStructure& a);

/// Throws ShapeError on differing languages or a mapping of the wrong shape.
bool rel_is_full_hom(const RelStructure& a, const RelStructure& b, const Mapping& f);

/// Injective map under which every tuple over the source is in a relation
/// iff its image is; lexicographically first, or nullopt.
std::optional<Mapping> rel_induced_embedding(const RelStructure& a, const RelStructure& b);

/// Full homomorphism found by embedding the quotient of a into b.
std::optional<Mapping> rel_find_full_hom(const RelStructure& a, const RelStructure& b);

/// Gap criterion for languages of arity at most 2. Both sides must be
/// point-determining and the smaller must embed induced into the larger
/// with exactly one vertex left over.
/// Throws UnsupportedArityError for any symbol of arity 3 or more.
std::optional<RelGapCertificate> rel_is_gap(const RelStructure& lower, const RelStructure& upper);

/// Three vertices and one ternary relation holding the single tuple (0,1,2).
/// Point-determining, yet none of its 2-vertex substructures is.
RelStructure ternary_counterexample();

RelStructure rel_induced_substructure(const RelStructure& a, const VertexSet& vertices);
RelStructure rel_remove_vertex(const RelStructure& a, Vertex v);

/// A graph as a loopless symmetric digraph over one binary symbol "E".
RelStructure from_graph(const Graph& g);

/// Equal for two structures exactly when they are isomorphic. Exhaustive
/// over vertex permutations; CostGuardError above 8 vertices.
std::string rel_canonical_form(const RelStructure& a);

/// {"language": {"E": 2}, "n": 3, "relations": {"E": [[0, 1]]}}
/// Symbols are taken in name order. Throws ParseError on malformed input.
RelStructure parse_structure_json(std::string_view text);
/// Names and tuples sorted lexicographically.
std::string format_structure_json(const RelStructure& a);

}  // namespace fhorder
