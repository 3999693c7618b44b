#include "fhorder/graph_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "fhorder/errors.hpp"

namespace fhorder {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool parse_count(std::string_view token, std::size_t& out) {
  token = trim(token);
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

void check_graph_size(std::size_t n, std::size_t line) {
  if (n == 0) throw ParseError(line, "graph must have at least one vertex");
  if (n > Graph::kMaxVertices)
    throw ParseError(line, "graph has " + std::to_string(n) + " vertices; at most " +
                               std::to_string(Graph::kMaxVertices) + " are supported");
}

void add_parsed_edge(Graph& g, std::size_t u, std::size_t v, std::size_t line) {
  if (u >= g.size() || v >= g.size())
    throw ParseError(line, "edge endpoint out of range for graph on " + std::to_string(g.size()) + " vertices");
  if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u) + " is not allowed");
  g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

constexpr int kGraph6Bias = 63;

}  // namespace

Graph parse_text(std::string_view text) {
  std::optional<Graph> g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (!g) {
      std::size_t n = 0;
      if (tokens.size() != 2 || tokens[0] != "graph" || !parse_count(tokens[1], n))
        throw ParseError(line_no, "expected header 'graph <n>'");
      check_graph_size(n, line_no);
      g.emplace(n);
      continue;
    }
    std::size_t u = 0;
    std::size_t v = 0;
    if (tokens.size() != 2 || !parse_count(tokens[0], u) || !parse_count(tokens[1], v))
      throw ParseError(line_no, "expected edge line '<u> <v>'");
    add_parsed_edge(*g, u, v, line_no);
  }
  if (!g) throw ParseError(line_no, "missing header 'graph <n>'");
  return *g;
}

std::string format_text(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  for (char c : line)
    if (c < kGraph6Bias || c > 126) throw ParseError(1, "invalid graph6 character");
  if (line.empty()) throw ParseError(1, "empty graph6 string");

  std::size_t n = 0;
  std::size_t at = 0;
  if (line[0] != 126) {
    n = static_cast<std::size_t>(line[0] - kGraph6Bias);
    at = 1;
  } else if (line.size() >= 4 && line[1] != 126) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(line[i] - kGraph6Bias);
    at = 4;
  } else {
    throw ParseError(1, "graph6 orders above 258047 are not supported");
  }
  check_graph_size(n, 1);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - at != bytes)
    throw ParseError(1, "graph6 string has " + std::to_string(line.size() - at) + " data bytes, expected " +
                            std::to_string(bytes));

  Graph g(n);
  std::size_t k = 0;
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = line[at + k / 6] - kGraph6Bias;
      if (value & (0x20 >> (k % 6))) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k)
    if ((line[at + k / 6] - kGraph6Bias) & (0x20 >> (k % 6))) throw ParseError(1, "nonzero graph6 padding");
  return g;
}

std::string format_graph6(const Graph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kGraph6Bias));
  }
  const std::size_t bits = n * (n - 1) / 2;
  std::string data((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) data[k / 6] = static_cast<char>(data[k / 6] | (0x20 >> (k % 6)));
  for (char& c : data) c = static_cast<char>(c + kGraph6Bias);
  return out + data;
}

std::vector<Graph> parse_graph6_file(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line == ">>graph6<<") continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      const std::string what = e.what();
      throw ParseError(line_no, what.substr(what.find(": ") + 2));
    }
  }
  return out;
}

Graph parse_inline(std::string_view literal) {
  const auto semi = literal.find(';');
  std::size_t n = 0;
  if (!parse_count(literal.substr(0, semi), n)) throw ParseError(1, "inline graph must start with '<n>;'");
  check_graph_size(n, 1);
  Graph g(n);
  if (semi == std::string_view::npos) return g;

  auto rest = trim(literal.substr(semi + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : trim(rest.substr(comma + 1));
    if (item.empty()) continue;
    const auto dash = item.find('-');
    std::size_t u = 0;
    std::size_t v = 0;
    if (dash == std::string_view::npos || !parse_count(item.substr(0, dash), u) ||
        !parse_count(item.substr(dash + 1), v))
      throw ParseError(1, "malformed inline edge '" + std::string(item) + "'");
    add_parsed_edge(g, u, v, 1);
  }
  return g;
}

std::string format_inline(const Graph& g) {
  std::string out = std::to_string(g.size()) + ";";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out += first ? " " : ",";
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace fhorder
