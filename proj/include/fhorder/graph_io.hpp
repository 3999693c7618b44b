#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fhorder/graph.hpp"

namespace fhorder {

/// Line-oriented text format:
///
///     # comment
///     graph 4
///     0 1
///     1 2
///
/// Duplicate edges are ignored; self-loops and out-of-range endpoints are
/// ParseErrors carrying the offending line number.
Graph parse_text(std::string_view text);
std::string format_text(const Graph& g);

/// One graph in graph6 encoding (no trailing newline).
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph& g);

/// Every graph in a graph6 file, one per non-empty line. An optional
/// `>>graph6<<` header is accepted.
std::vector<Graph> parse_graph6_file(std::string_view text);

/// Inline literal `n; u-v,u-v,...`, e.g. `3; 0-1,1-2`.
Graph parse_inline(std::string_view literal);
std::string format_inline(const Graph& g);

}  // namespace fhorder
