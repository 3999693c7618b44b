#include "fhorder/relstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "fhorder/errors.hpp"

namespace fhorder {

namespace {

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

// Calls fn(t) for every tuple in {0..n-1}^arity in lexicographic order.
template <class Fn>
void for_each_tuple(std::size_t n, std::size_t arity, Fn&& fn) {
  if (n == 0) return;
  Tuple t(arity, 0);
  while (true) {
    fn(static_cast<const Tuple&>(t));
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (arity == 0) return;
  }
}

bool contains_vertex(const Tuple& t, Vertex v) { return std::find(t.begin(), t.end(), v) != t.end(); }

MarkedTuple mark(const Tuple& t, Vertex v) {
  MarkedTuple m{t};
  for (auto& x : m.entries)
    if (x == v) x = MarkedTuple::kMarker;
  return m;
}

Tuple apply(const Mapping& f, const Tuple& t) {
  Tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = f(t[i]);
  return out;
}

void require_vertex(const RelStructure& a, Vertex v) {
  if (v >= a.size())
    throw RangeError("vertex " + std::to_string(v) + " out of range for structure on " + std::to_string(a.size()) +
                     " vertices");
}

void require_same_language(const RelStructure& a, const RelStructure& b) {
  if (a.language() != b.language()) throw ShapeError("structures have different languages");
}

std::size_t tuple_space(std::size_t n, std::size_t arity) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    total *= n;
    if (total > 10'000'000) throw CostGuardError("tuple space above 10^7 tuples");
  }
  return total;
}

}  // namespace

Language::Language(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].arity == 0) throw ArgumentError("symbol '" + symbols_[i].name + "' has arity 0");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[i].name == symbols_[j].name) throw ArgumentError("duplicate symbol '" + symbols_[i].name + "'");
  }
}

Language Language::digraph(std::string name) { return Language({Symbol{std::move(name), 2}}); }

std::optional<std::size_t> Language::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Language::max_arity() const noexcept {
  std::size_t m = 0;
  for (const auto& s : symbols_) m = std::max(m, s.arity);
  return m;
}

RelStructure::RelStructure(Language language, std::size_t n)
    : language_(std::move(language)), n_(n), relations_(language_.size()) {
  if (n == 0) throw SizeError("structure must have at least one vertex");
  if (n > kMaxVertices) throw SizeError("structures above 64 vertices are not supported");
}

void RelStructure::add_tuple(std::size_t symbol, Tuple t) {
  if (symbol >= language_.size()) throw ShapeError("unknown symbol index " + std::to_string(symbol));
  if (t.size() != language_[symbol].arity)
    throw ShapeError("tuple of length " + std::to_string(t.size()) + " for symbol '" + language_[symbol].name +
                     "' of arity " + std::to_string(language_[symbol].arity));
  for (Vertex v : t)
    if (v >= n_) throw RangeError("tuple entry " + std::to_string(v) + " out of range");
  relations_[symbol].insert(std::move(t));
}

void RelStructure::add_tuple(std::string_view symbol, Tuple t) {
  auto index = language_.index_of(symbol);
  if (!index) throw ShapeError("unknown symbol '" + std::string(symbol) + "'");
  add_tuple(*index, std::move(t));
}

std::size_t RelStructure::tuple_count() const noexcept {
  std::size_t c = 0;
  for (const auto& r : relations_) c += r.size();
  return c;
}

bool has_loop(const RelStructure& a, Vertex v) {
  require_vertex(a, v);
  for (std::size_t s = 0; s < a.language().size(); ++s) {
    const std::size_t arity = a.language()[s].arity;
    if (arity >= 2 && a.contains(s, Tuple(arity, v))) return true;
  }
  return false;
}

Neighborhood rel_neighborhood(const RelStructure& a, Vertex v) {
  require_vertex(a, v);
  Neighborhood out;
  out.per_symbol.resize(a.language().size());
  for (std::size_t s = 0; s < a.language().size(); ++s) {
    const std::size_t arity = a.language()[s].arity;
    const Tuple constant(arity, v);
    auto& dest = out.per_symbol[s];
    if (arity >= 2 && a.contains(s, constant)) {
      tuple_space(a.size(), arity);
      for_each_tuple(a.size(), arity, [&](const Tuple& t) {
        if (contains_vertex(t, v) && (!a.contains(s, t) || t == constant)) dest.insert(mark(t, v));
      });
    } else {
      for (const Tuple& t : a.relation(s))
        if (contains_vertex(t, v)) dest.insert(mark(t, v));
    }
  }
  return out;
}

bool rel_is_point_determining(const RelStructure& a) {
  std::vector<Neighborhood> seen;
  seen.reserve(a.size());
  for (Vertex v = 0; v < a.size(); ++v) seen.push_back(rel_neighborhood(a, v));
  std::sort(seen.begin(), seen.end(), [](const Neighborhood& x, const Neighborhood& y) {
    return x.per_symbol < y.per_symbol;
  });
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

RelQuotient rel_pd_quotient(const RelStructure& a) {
  RelQuotient q{a, Mapping::identity(a.size()), {}};
  q.representatives.resize(a.size());
  std::iota(q.representatives.begin(), q.representatives.end(), Vertex{0});

  while (true) {
    const RelStructure& cur = q.structure;
    std::vector<std::pair<Neighborhood, Vertex>> classes;
    std::vector<Vertex> class_of(cur.size());
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < cur.size(); ++v) {
      Neighborhood nb = rel_neighborhood(cur, v);
      auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return c.first == nb; });
      if (it == classes.end()) {
        class_of[v] = static_cast<Vertex>(kept.size());
        classes.emplace_back(std::move(nb), class_of[v]);
        kept.push_back(v);
      } else {
        class_of[v] = it->second;
      }
    }
    if (kept.size() == cur.size()) break;

    const Mapping merge(kept.size(), std::move(class_of));
    RelStructure next(cur.language(), kept.size());
    for (std::size_t s = 0; s < cur.language().size(); ++s)
      for (const Tuple& t : cur.relation(s)) next.add_tuple(s, apply(merge, t));
    std::vector<Vertex> reps(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) reps[i] = q.representatives[kept[i]];

    q.map = q.map.then(merge);
    q.structure = std::move(next);
    q.representatives = std::move(reps);
  }
  return q;
}

bool rel_is_full_hom(const RelStructure& a, const RelStructure& b, const Mapping& f) {
  require_same_language(a, b);
  if (f.source_size() != a.size() || f.target_size() != b.size())
    throw ShapeError("mapping shape does not match the structures");
  for (std::size_t s = 0; s < a.language().size(); ++s) {
    const std::size_t arity = a.language()[s].arity;
    tuple_space(a.size(), arity);
    bool ok = true;
    for_each_tuple(a.size(), arity, [&](const Tuple& t) {
      if (ok && a.contains(s, t) != b.contains(s, apply(f, t))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

class RelEmbeddingSearch {
 public:
  RelEmbeddingSearch(const RelStructure& a, const RelStructure& b) : a_(a), b_(b), image_(a.size()) {}

  std::optional<Mapping> run() {
    if (a_.size() > b_.size()) return std::nullopt;
    if (!extend(0, 0)) return std::nullopt;
    return Mapping(b_.size(), image_);
  }

 private:
  // Every tuple over the assigned prefix that mentions `next` must agree.
  bool consistent(Vertex next) const {
    for (std::size_t s = 0; s < a_.language().size(); ++s) {
      bool ok = true;
      Tuple image;
      for_each_tuple(next + 1, a_.language()[s].arity, [&](const Tuple& t) {
        if (!ok || !contains_vertex(t, next)) return;
        image.resize(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) image[i] = image_[t[i]];
        if (a_.contains(s, t) != b_.contains(s, image)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  bool extend(Vertex next, std::uint64_t used) {
    if (next == a_.size()) return true;
    for (Vertex t = 0; t < b_.size(); ++t) {
      if (used & bit(t)) continue;
      image_[next] = t;
      if (consistent(next) && extend(next + 1, used | bit(t))) return true;
    }
    return false;
  }

  const RelStructure& a_;
  const RelStructure& b_;
  std::vector<Vertex> image_;
};

}  // namespace

std::optional<Mapping> rel_induced_embedding(const RelStructure& a, const RelStructure& b) {
  require_same_language(a, b);
  return RelEmbeddingSearch(a, b).run();
}

std::optional<Mapping> rel_find_full_hom(const RelStructure& a, const RelStructure& b) {
  require_same_language(a, b);
  const RelQuotient aq = rel_pd_quotient(a);
  const RelQuotient bq = rel_pd_quotient(b);
  auto embedding = rel_induced_embedding(aq.structure, bq.structure);
  if (!embedding) return std::nullopt;
  Mapping f = aq.map.then(*embedding).then(Mapping(b.size(), bq.representatives));
  if (!rel_is_full_hom(a, b, f)) throw InvariantError("composed structure homomorphism failed verification");
  return f;
}

std::optional<RelGapCertificate> rel_is_gap(const RelStructure& lower, const RelStructure& upper) {
  for (const auto* s : {&lower, &upper})
    for (const auto& sym : s->language().symbols())
      if (sym.arity >= 3)
        throw UnsupportedArityError("symbol '" + sym.name + "' has arity " + std::to_string(sym.arity) +
                                    "; the one-vertex gap criterion only holds for arity <= 2 (see "
                                    "ternary_counterexample)");
  require_same_language(lower, upper);
  if (upper.size() != lower.size() + 1) return std::nullopt;
  if (!rel_is_point_determining(lower) || !rel_is_point_determining(upper)) return std::nullopt;
  auto embedding = rel_induced_embedding(lower, upper);
  if (!embedding) return std::nullopt;
  std::uint64_t image = 0;
  for (Vertex v : embedding->image()) image |= bit(v);
  Vertex removed = 0;
  while (image & bit(removed)) ++removed;
  return RelGapCertificate{lower, upper, std::move(*embedding), removed};
}

RelStructure ternary_counterexample() {
  RelStructure a(Language({Symbol{"R", 3}}), 3);
  a.add_tuple(0, {0, 1, 2});
  return a;
}

RelStructure rel_induced_substructure(const RelStructure& a, const VertexSet& vertices) {
  VertexSet sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw SizeError("induced substructure on an empty vertex set");
  std::vector<Vertex> position(a.size(), MarkedTuple::kMarker);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    require_vertex(a, sorted[i]);
    position[sorted[i]] = static_cast<Vertex>(i);
  }
  RelStructure out(a.language(), sorted.size());
  for (std::size_t s = 0; s < a.language().size(); ++s) {
    for (const Tuple& t : a.relation(s)) {
      Tuple image(t.size());
      bool inside = true;
      for (std::size_t i = 0; i < t.size() && inside; ++i) {
        image[i] = position[t[i]];
        inside = image[i] != MarkedTuple::kMarker;
      }
      if (inside) out.add_tuple(s, std::move(image));
    }
  }
  return out;
}

RelStructure rel_remove_vertex(const RelStructure& a, Vertex v) {
  require_vertex(a, v);
  if (a.size() < 2) throw SizeError("cannot remove the only vertex of a structure");
  VertexSet rest;
  for (Vertex u = 0; u < a.size(); ++u)
    if (u != v) rest.push_back(u);
  return rel_induced_substructure(a, rest);
}

RelStructure from_graph(const Graph& g) {
  RelStructure a(Language::digraph(), g.size());
  for (auto [u, v] : g.edges()) {
    a.add_tuple(0, {u, v});
    a.add_tuple(0, {v, u});
  }
  return a;
}

std::string rel_canonical_form(const RelStructure& a) {
  const std::size_t n = a.size();
  if (n > 8) throw CostGuardError("structure canonical form is exhaustive; at most 8 vertices supported");
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& sym : a.language().symbols()) {
    offsets.push_back(total);
    total += tuple_space(n, sym.arity);
  }

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::string best;
  std::string label(total, '0');
  do {
    std::fill(label.begin(), label.end(), '0');
    for (std::size_t s = 0; s < a.language().size(); ++s) {
      for (const Tuple& t : a.relation(s)) {
        std::size_t index = 0;
        for (Vertex x : t) index = index * n + perm[x];
        label[offsets[s] + index] = '1';
      }
    }
    if (best.empty() || label < best) best = label;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

RelStructure parse_structure_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("language") || !doc.contains("n"))
      throw ParseError(0, "structure JSON needs 'language' and 'n'");
    const auto& lang = doc.at("language");
    if (!lang.is_object()) throw ParseError(0, "'language' must be an object of name: arity");
    std::vector<Symbol> symbols;
    for (const auto& [name, arity] : lang.items()) {
      if (!arity.is_number_unsigned() || arity.get<std::size_t>() == 0)
        throw ParseError(0, "arity of '" + name + "' must be a positive integer");
      symbols.push_back(Symbol{name, arity.get<std::size_t>()});
    }
    if (!doc.at("n").is_number_unsigned()) throw ParseError(0, "'n' must be a positive integer");
    const auto n = doc.at("n").get<std::size_t>();
    if (n == 0 || n > RelStructure::kMaxVertices) throw ParseError(0, "'n' must be between 1 and 64");

    RelStructure a(Language(std::move(symbols)), n);
    if (doc.contains("relations")) {
      const auto& rels = doc.at("relations");
      if (!rels.is_object()) throw ParseError(0, "'relations' must be an object");
      for (const auto& [name, tuples] : rels.items()) {
        auto index = a.language().index_of(name);
        if (!index) throw ParseError(0, "relation '" + name + "' is not in the language");
        if (!tuples.is_array()) throw ParseError(0, "relation '" + name + "' must be a list of tuples");
        for (const auto& t : tuples) {
          if (!t.is_array()) throw ParseError(0, "tuples of '" + name + "' must be arrays");
          Tuple tuple;
          for (const auto& x : t) {
            if (!x.is_number_unsigned()) throw ParseError(0, "tuple entries must be vertex indices");
            tuple.push_back(x.get<Vertex>());
          }
          a.add_tuple(*index, std::move(tuple));
        }
      }
    }
    return a;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  }
}

std::string format_structure_json(const RelStructure& a) {
  nlohmann::json lang = nlohmann::json::object();
  nlohmann::json rels = nlohmann::json::object();
  for (std::size_t s = 0; s < a.language().size(); ++s) {
    lang[a.language()[s].name] = a.language()[s].arity;
    nlohmann::json tuples = nlohmann::json::array();
    for (const Tuple& t : a.relation(s)) tuples.push_back(t);
    rels[a.language()[s].name] = std::move(tuples);
  }
  nlohmann::json doc{{"language", lang}, {"n", a.size()}, {"relations", rels}};
  return doc.dump();
}

}  // namespace fhorder
