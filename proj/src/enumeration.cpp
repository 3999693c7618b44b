#include "fhorder/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "fhorder/errors.hpp"
#include "fhorder/fullhom.hpp"
#include "fhorder/graph_io.hpp"

namespace fhorder {

namespace {

void check_enumeration_order(std::size_t n) {
  if (n < 1 || n > kMaxEnumeratedVertices)
    throw CostGuardError("graph enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeratedVertices) + ", got " +
                         std::to_string(n));
}

Graph labelled_graph(std::size_t n, std::uint64_t code) {
  Graph g(n);
  unsigned k = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++k)
      if ((code >> k) & 1U) g.add_edge(i, j);
  return g;
}

// Inverse of the canonical label encoding: row-major adjacency bits, most
// significant bit first.
Graph graph_from_label(const CanonicalLabel& label) {
  const auto n = static_cast<std::size_t>(static_cast<unsigned char>(label[0]));
  const std::size_t row_bytes = (n + 7) / 8;
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (static_cast<unsigned char>(label[1 + i * row_bytes + j / 8]) & (0x80u >> (j % 8))) g.add_edge(i, j);
  return g;
}

template <class Keep>
IsoClassCatalog sweep(std::size_t n, unsigned jobs, Keep keep) {
  check_enumeration_order(n);
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  jobs = std::clamp<unsigned>(jobs, 1, 64);

  std::vector<std::set<CanonicalLabel>> partial(jobs);
  auto work = [&](unsigned job) {
    const std::uint64_t begin = total * job / jobs;
    const std::uint64_t end = total * (job + 1) / jobs;
    for (std::uint64_t code = begin; code < end; ++code) {
      const Graph g = labelled_graph(n, code);
      if (keep(g)) partial[job].insert(canonical_form(g));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned job = 0; job < jobs; ++job) threads.emplace_back(work, job);
  }

  std::set<CanonicalLabel> labels;
  for (auto& p : partial) labels.merge(p);
  IsoClassCatalog out;
  out.n = n;
  for (const auto& label : labels) {
    out.members.push_back(graph_from_label(label));
    out.labels.push_back(label);
  }
  return out;
}

}  // namespace

IsoClassCatalog enumerate_graphs(std::size_t n, unsigned jobs) {
  return sweep(n, jobs, [](const Graph&) { return true; });
}

IsoClassCatalog enumerate_pd_graphs(std::size_t n, unsigned jobs) {
  return sweep(n, jobs, [](const Graph& g) { return is_point_determining(g); });
}

StructureCatalog enumerate_rel_structures(const Language& language, std::size_t n, std::size_t max_labelled) {
  if (n == 0) throw SizeError("structures need at least one vertex");
  std::size_t bits = 0;
  for (const auto& sym : language.symbols()) {
    std::size_t space = 1;
    for (std::size_t i = 0; i < sym.arity && space <= 64; ++i) space *= n;
    bits += space;
  }
  if (bits >= 63 || (std::uint64_t{1} << bits) > max_labelled)
    throw CostGuardError("enumerating 2^" + std::to_string(bits) + " labelled structures exceeds the budget of " +
                         std::to_string(max_labelled));

  // Tuple order: symbols in language order, tuples lexicographically.
  std::vector<std::pair<std::size_t, Tuple>> slots;
  for (std::size_t s = 0; s < language.size(); ++s) {
    const std::size_t arity = language[s].arity;
    Tuple t(arity, 0);
    while (true) {
      slots.emplace_back(s, t);
      std::size_t i = arity;
      bool done = true;
      while (i > 0) {
        --i;
        if (++t[i] < n) {
          done = false;
          break;
        }
        t[i] = 0;
      }
      if (done) break;
    }
  }

  std::map<std::string, RelStructure> classes;
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t code = 0; code < total; ++code) {
    RelStructure a(language, n);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((code >> k) & 1U) a.add_tuple(slots[k].first, slots[k].second);
    classes.try_emplace(rel_canonical_form(a), std::move(a));
  }
  StructureCatalog out;
  out.n = n;
  for (auto& [label, a] : classes) {
    out.labels.push_back(label);
    out.members.push_back(std::move(a));
  }
  return out;
}

namespace {

void check_map_budget(std::size_t source, std::size_t target) {
  double maps = 1;
  for (std::size_t i = 0; i < source; ++i) maps *= static_cast<double>(target);
  if (maps > static_cast<double>(kBruteForceBudget))
    throw CostGuardError("brute force would scan " + std::to_string(target) + "^" + std::to_string(source) +
                         " maps; budget is 10^7");
}

// Advances `image` to the next map in lexicographic order; false after the last.
bool next_map(std::vector<Vertex>& image, std::size_t target) {
  std::size_t i = image.size();
  while (i > 0) {
    --i;
    if (++image[i] < target) return true;
    image[i] = 0;
  }
  return false;
}

}  // namespace

std::optional<Mapping> brute_force_full_hom(const Graph& g, const Graph& h) {
  check_map_budget(g.size(), h.size());
  std::vector<Vertex> image(g.size(), 0);
  do {
    Mapping f(h.size(), image);
    if (is_full_hom(g, h, f)) return f;
  } while (next_map(image, h.size()));
  return std::nullopt;
}

std::optional<Mapping> brute_force_full_hom(const RelStructure& a, const RelStructure& b) {
  check_map_budget(a.size(), b.size());
  if (a.language() != b.language()) throw ShapeError("structures have different languages");
  std::vector<Vertex> image(a.size(), 0);
  do {
    Mapping f(b.size(), image);
    if (rel_is_full_hom(a, b, f)) return f;
  } while (next_map(image, b.size()));
  return std::nullopt;
}

std::string format_catalog(const IsoClassCatalog& catalog) {
  std::string out = "# count: " + std::to_string(catalog.count()) + "\n";
  for (const auto& g : catalog.members) out += nlohmann::json(format_text(g)).dump() + "\n";
  return out;
}

std::vector<Graph> parse_catalog(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    const auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(parse_text(nlohmann::json::parse(line).get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, std::string("catalog entry is not a JSON string: ") + e.what());
    } catch (const ParseError& e) {
      throw ParseError(line_no, std::string("bad graph in catalog entry: ") + e.what());
    }
  }
  return out;
}

}  // namespace fhorder
