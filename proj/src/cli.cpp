#include "fhorder/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fhorder/dualities.hpp"
#include "fhorder/enumeration.hpp"
#include "fhorder/errors.hpp"
#include "fhorder/fullhom.hpp"
#include "fhorder/gaps.hpp"
#include "fhorder/graph_io.hpp"
#include "fhorder/relstruct.hpp"

namespace fhorder {

namespace {

using nlohmann::json;

enum class InputFormat { text, graph6, json };
enum class OutputMode { human, jsonl };

/// What a subcommand produced, in both output modes, plus its exit code.
struct Report {
  json data;
  std::string human;
  int code = exit_code::ok;
};

struct Inputs {
  std::vector<std::string> paths;
  std::vector<std::string> literals;
};

/// Raised for malformed command lines that CLI11 itself accepts.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Adds the source name to parse errors so users can find the offending line.
template <class Fn>
auto with_source(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(0, name + ": " + e.what());
  }
}

std::vector<Graph> load_graphs(const Inputs& in, InputFormat format) {
  if (format == InputFormat::json) throw UsageError("--format json applies to rel-* commands only");
  if (!in.paths.empty() && !in.literals.empty()) throw UsageError("give inputs either as files or with -e, not both");
  std::vector<Graph> out;
  for (const auto& literal : in.literals) {
    with_source("-e '" + literal + "'", [&] {
      if (format == InputFormat::graph6)
        out.push_back(parse_graph6(literal));
      else
        out.push_back(parse_inline(literal));
      return 0;
    });
  }
  for (const auto& path : in.paths) {
    const std::string text = read_source(path);
    with_source(path, [&] {
      if (format == InputFormat::graph6) {
        auto graphs = parse_graph6_file(text);
        if (graphs.empty()) throw ParseError(0, "no graphs in file");
        out.insert(out.end(), graphs.begin(), graphs.end());
      } else {
        out.push_back(parse_text(text));
      }
      return 0;
    });
  }
  return out;
}

std::vector<Graph> load_exactly(const Inputs& in, InputFormat format, std::size_t count, const std::string& cmd) {
  auto graphs = load_graphs(in, format);
  if (graphs.size() != count)
    throw UsageError(cmd + " expects " + std::to_string(count) + " graph(s), got " + std::to_string(graphs.size()));
  return graphs;
}

std::vector<RelStructure> load_structures(const Inputs& in, std::size_t count, const std::string& cmd) {
  if (!in.paths.empty() && !in.literals.empty()) throw UsageError("give inputs either as files or with -e, not both");
  std::vector<RelStructure> out;
  for (const auto& literal : in.literals)
    out.push_back(with_source("-e", [&] { return parse_structure_json(literal); }));
  for (const auto& path : in.paths) {
    const std::string text = read_source(path);
    out.push_back(with_source(path, [&] { return parse_structure_json(text); }));
  }
  if (out.size() != count)
    throw UsageError(cmd + " expects " + std::to_string(count) + " structure(s), got " + std::to_string(out.size()));
  return out;
}

std::string mapping_str(const Mapping& f) {
  std::string s;
  for (std::size_t v = 0; v < f.source_size(); ++v) {
    if (v) s += ' ';
    s += std::to_string(v) + "->" + std::to_string(f(static_cast<Vertex>(v)));
  }
  return s;
}

std::string set_str(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

json graph_list(const std::vector<Graph>& graphs) {
  json arr = json::array();
  for (const auto& g : graphs) arr.push_back(format_text(g));
  return arr;
}

std::string inline_lines(const std::vector<Graph>& graphs) {
  std::string out;
  for (const auto& g : graphs) out += format_inline(g) + "\n";
  return out;
}

Report cmd_core(const Graph& g) {
  const Quotient q = pd_quotient(g);
  Report r;
  r.data = {{"command", "core"},
            {"quotient", format_text(q.graph)},
            {"map", q.map.image()},
            {"representatives", q.representatives}};
  r.human = format_text(q.graph) + "# map: " + mapping_str(q.map) + "\n";
  return r;
}

Report cmd_bool(const std::string& command, const std::string& key, bool value) {
  Report r;
  r.data = {{"command", command}, {key, value}};
  r.human = value ? "true\n" : "false\n";
  r.code = value ? exit_code::ok : exit_code::negative;
  return r;
}

Report cmd_hom(const Graph& g, const Graph& h) {
  Report r;
  r.data = {{"command", "hom"}};
  if (auto w = find_full_hom(g, h)) {
    const char* kind = w->kind == WitnessKind::embedding ? "embedding" : "general";
    r.data["witness"] = w->mapping.image();
    r.data["kind"] = kind;
    r.human = std::string(kind) + ": " + mapping_str(w->mapping) + "\n";
  } else {
    r.data["witness"] = nullptr;
    r.human = "none\n";
    r.code = exit_code::none;
  }
  return r;
}

Report cmd_gap(const Graph& g, const Graph& h) {
  Report r;
  r.data = {{"command", "gap"}};
  if (auto cert = is_gap(g, h)) {
    r.data["gap"] = true;
    r.data["embedding"] = cert->embedding.image();
    r.data["removed_vertex"] = cert->removed_vertex;
    r.human = "gap\n# removed_vertex: " + std::to_string(cert->removed_vertex) +
              "\n# embedding: " + mapping_str(cert->embedding) + "\n";
  } else {
    r.data["gap"] = false;
    r.human = "not a gap\n";
    r.code = exit_code::none;
  }
  return r;
}

Report cmd_duality(const std::vector<Graph>& targets, std::size_t verify_up_to) {
  DualityPair pair = duality_frontier(targets);
  if (verify_up_to > 0) verify(pair, verify_up_to);
  const json body = {{"targets", graph_list(pair.targets)},
                     {"frontier", graph_list(pair.frontier)},
                     {"verified_up_to", pair.verified_up_to}};
  Report r;
  r.human = body.dump(2) + "\n";
  r.data = body;
  r.data["command"] = "duality";
  return r;
}

std::string hasse_dot(std::size_t max_n, unsigned jobs) {
  std::vector<IsoClassCatalog> levels;
  for (std::size_t n = 1; n <= max_n; ++n) levels.push_back(enumerate_pd_graphs(n, jobs));
  std::ostringstream dot;
  dot << "digraph hasse {\n  rankdir=BT;\n";
  for (const auto& level : levels)
    for (std::size_t i = 0; i < level.count(); ++i)
      dot << "  g" << level.n << '_' << i << " [label=\"" << format_inline(level.members[i]) << "\"];\n";
  for (std::size_t k = 0; k + 1 < levels.size(); ++k)
    for (std::size_t i = 0; i < levels[k].count(); ++i)
      for (std::size_t j = 0; j < levels[k + 1].count(); ++j)
        if (is_gap(levels[k].members[i], levels[k + 1].members[j]))
          dot << "  g" << levels[k].n << '_' << i << " -> g" << levels[k + 1].n << '_' << j << ";\n";
  dot << "}\n";
  return dot.str();
}

json neighborhood_json(const RelStructure& a, const Neighborhood& nb) {
  json out = json::object();
  for (std::size_t s = 0; s < a.language().size(); ++s) {
    json tuples = json::array();
    for (const auto& t : nb.per_symbol[s]) {
      json entries = json::array();
      for (Vertex x : t.entries) {
        if (x == MarkedTuple::kMarker)
          entries.push_back("*");
        else
          entries.push_back(x);
      }
      tuples.push_back(std::move(entries));
    }
    out[a.language()[s].name] = std::move(tuples);
  }
  return out;
}

Report cmd_counterexample() {
  const RelStructure a = ternary_counterexample();
  json pairs = json::array();
  bool any_pd_pair = false;
  for (Vertex drop = 0; drop < 3; ++drop) {
    const RelStructure sub = rel_remove_vertex(a, drop);
    const bool pd = rel_is_point_determining(sub);
    any_pd_pair = any_pd_pair || pd;
    pairs.push_back({{"removed", drop}, {"point_determining", pd}});
  }
  bool gap_rejected = false;
  try {
    (void)rel_is_gap(rel_remove_vertex(a, 2), a);
  } catch (const UnsupportedArityError&) {
    gap_rejected = true;
  }
  Report r;
  r.data = {{"command", "counterexample-ternary"},
            {"structure", json::parse(format_structure_json(a))},
            {"point_determining", rel_is_point_determining(a)},
            {"two_vertex_substructures", pairs},
            {"gap_criterion_rejected", gap_rejected}};
  std::ostringstream h;
  h << format_structure_json(a) << "\n"
    << "point-determining: " << (rel_is_point_determining(a) ? "true" : "false") << "\n"
    << "point-determining 2-vertex substructure: " << (any_pd_pair ? "yes" : "none") << "\n"
    << "gap criterion for arity 3: " << (gap_rejected ? "rejected" : "accepted") << "\n";
  r.human = h.str();
  if (!rel_is_point_determining(a) || any_pd_pair || !gap_rejected)
    throw InvariantError("ternary counterexample lost its defining properties");
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Full homomorphism order on graphs and relational structures", "fhorder"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name;
  std::string output_name = "human";
  unsigned jobs = 1;
  app.add_option("--format", format_name, "Input format")->check(CLI::IsMember({"text", "graph6", "json"}));
  app.add_option("--output", output_name, "Output mode")->check(CLI::IsMember({"human", "jsonl"}));
  app.add_option("--jobs", jobs, "Worker threads for sweeps (does not change results)")->check(CLI::Range(1, 64));

  Inputs inputs;
  std::size_t verify_up_to = 6;
  std::size_t enumerate_n = 0;
  bool pd_only = false;
  bool hasse = false;
  Vertex vertex = 0;

  std::map<std::string, CLI::App*> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", inputs.paths, "Input files ('-' for stdin)");
    sub->add_option("-e,--expr", inputs.literals, "Inline input literal");
    subs[name] = sub;
    return sub;
  };
  add("core", "Point-determining quotient and quotient map");
  add("is-core", "Is the graph an F-core (point-determining)?");
  add("hom", "Full homomorphism witness G -> H");
  add("equiv", "Are G and H full-homomorphism equivalent?");
  add("removable", "Vertices whose deletion keeps the graph point-determining");
  add("chain", "Chain of F-cores from K_1 up to G");
  add("gap", "Do G < H form a gap?");
  add("extend", "Point-determining one-vertex extensions of G");
  add("duality", "Finite duality frontier for the target graphs")
      ->add_option("--verify-up-to", verify_up_to, "Verify on all F-cores up to this size (0 skips)")
      ->check(CLI::Range(0, static_cast<int>(kMaxEnumeratedVertices)));
  CLI::App* enumerate = app.add_subcommand("enumerate", "Catalog of graphs on n vertices up to isomorphism");
  enumerate->add_option("-n", enumerate_n, "Vertex count")->required();
  enumerate->add_flag("--pd", pd_only, "Only point-determining graphs");
  enumerate->add_flag("--hasse", hasse, "DOT Hasse diagram of F-cores up to n vertices (implies --pd)");
  subs["enumerate"] = enumerate;
  add("rel-core", "Point-determining quotient of a structure");
  add("rel-is-core", "Is the structure point-determining?");
  add("rel-hom", "Full homomorphism witness between structures");
  add("rel-gap", "Gap test for structures of arity <= 2");
  add("rel-neighborhood", "Neighbourhood of a vertex in a structure")
      ->add_option("-v,--vertex", vertex, "Vertex")
      ->required();
  subs["counterexample-ternary"] =
      app.add_subcommand("counterexample-ternary", "The ternary structure without 2-vertex F-core substructures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const bool rel = command.starts_with("rel-");
  InputFormat format = rel ? InputFormat::json : InputFormat::text;
  if (format_name == "text") format = InputFormat::text;
  if (format_name == "graph6") format = InputFormat::graph6;
  if (format_name == "json") format = InputFormat::json;
  const OutputMode mode = output_name == "jsonl" ? OutputMode::jsonl : OutputMode::human;

  try {
    if (rel && format != InputFormat::json) throw UsageError("rel-* commands read structure JSON");
    Report report;
    auto one = [&] { return load_exactly(inputs, format, 1, command).front(); };
    if (command == "core") {
      report = cmd_core(one());
    } else if (command == "is-core") {
      report = cmd_bool(command, "f_core", is_f_core(one()));
    } else if (command == "hom") {
      auto gs = load_exactly(inputs, format, 2, command);
      report = cmd_hom(gs[0], gs[1]);
    } else if (command == "equiv") {
      auto gs = load_exactly(inputs, format, 2, command);
      report = cmd_bool(command, "equivalent", fhom_equivalent(gs[0], gs[1]));
    } else if (command == "removable") {
      const VertexSet r = removable_vertices(one());
      report.data = {{"command", command}, {"removable", r}};
      report.human = set_str(r) + "\n";
    } else if (command == "chain") {
      const auto chain = core_chain(one());
      report.data = {{"command", command}, {"chain", graph_list(chain)}};
      report.human = inline_lines(chain);
    } else if (command == "gap") {
      auto gs = load_exactly(inputs, format, 2, command);
      report = cmd_gap(gs[0], gs[1]);
    } else if (command == "extend") {
      const auto ext = gap_extensions(one());
      report.data = {{"command", command}, {"extensions", graph_list(ext)}};
      report.human = inline_lines(ext);
    } else if (command == "duality") {
      auto targets = load_graphs(inputs, format);
      if (targets.empty()) throw UsageError("duality needs at least one target graph");
      report = cmd_duality(targets, verify_up_to);
    } else if (command == "enumerate") {
      if (hasse) {
        if (enumerate_n < 1 || enumerate_n > kMaxEnumeratedVertices)
          throw CostGuardError("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeratedVertices));
        report.human = hasse_dot(enumerate_n, jobs);
        report.data = {{"command", command}, {"dot", report.human}};
      } else {
        const auto catalog = pd_only ? enumerate_pd_graphs(enumerate_n, jobs) : enumerate_graphs(enumerate_n, jobs);
        report.data = {{"command", command},
                       {"n", enumerate_n},
                       {"pd", pd_only},
                       {"count", catalog.count()},
                       {"graphs", graph_list(catalog.members)}};
        report.human = format_catalog(catalog);
      }
    } else if (command == "rel-core") {
      const auto a = load_structures(inputs, 1, command).front();
      const RelQuotient q = rel_pd_quotient(a);
      report.data = {{"command", command},
                     {"quotient", json::parse(format_structure_json(q.structure))},
                     {"map", q.map.image()},
                     {"representatives", q.representatives}};
      report.human = format_structure_json(q.structure) + "\n# map: " + mapping_str(q.map) + "\n";
    } else if (command == "rel-is-core") {
      report = cmd_bool(command, "f_core", rel_is_point_determining(load_structures(inputs, 1, command).front()));
    } else if (command == "rel-hom") {
      auto as = load_structures(inputs, 2, command);
      report.data = {{"command", command}};
      if (auto f = rel_find_full_hom(as[0], as[1])) {
        report.data["witness"] = f->image();
        report.human = mapping_str(*f) + "\n";
      } else {
        report.data["witness"] = nullptr;
        report.human = "none\n";
        report.code = exit_code::none;
      }
    } else if (command == "rel-gap") {
      auto as = load_structures(inputs, 2, command);
      report.data = {{"command", command}};
      if (auto cert = rel_is_gap(as[0], as[1])) {
        report.data["gap"] = true;
        report.data["embedding"] = cert->embedding.image();
        report.data["removed_vertex"] = cert->removed_vertex;
        report.human = "gap\n# removed_vertex: " + std::to_string(cert->removed_vertex) +
                       "\n# embedding: " + mapping_str(cert->embedding) + "\n";
      } else {
        report.data["gap"] = false;
        report.human = "not a gap\n";
        report.code = exit_code::none;
      }
    } else if (command == "rel-neighborhood") {
      const auto a = load_structures(inputs, 1, command).front();
      const json nb = neighborhood_json(a, rel_neighborhood(a, vertex));
      report.data = {{"command", command}, {"vertex", vertex}, {"neighborhood", nb}, {"loop", has_loop(a, vertex)}};
      report.human = nb.dump() + "\n";
    } else if (command == "counterexample-ternary") {
      report = cmd_counterexample();
    }

    if (mode == OutputMode::jsonl)
      out << report.data.dump() << '\n';
    else
      out << report.human;
    return report.code;
  } catch (const CostGuardError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::cost_guard;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::internal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

}  // namespace fhorder
