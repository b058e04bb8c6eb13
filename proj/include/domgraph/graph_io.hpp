#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "domgraph/graph.hpp"

namespace domgraph {

enum class GraphFormat { Graph6, EdgeList };

GraphFormat parse_format(std::string_view name);
std::string_view to_string(GraphFormat format) noexcept;

/// Edge-list text: a "n <count>" header, then one "u v" pair per line.
/// '#' starts a comment that runs to end of line; blank lines are ignored.
Graph parse_edgelist(std::string_view text);
std::string to_edgelist(const Graph& g);

/// Short-form graph6 only (n <= 62). Surrounding whitespace and an optional
/// ">>graph6<<" prefix are accepted; padding bits must be zero.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Reads a single graph from a file. For graph6 the first non-blank line is used.
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format);

}  // namespace domgraph
