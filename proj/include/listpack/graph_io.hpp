#pragma once

#include "listpack/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace listpack::io {

/// Edge-list text: first line "n m", then m lines "u v" (0-based ids).
[[nodiscard]] Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// graph6 for n <= 62. Trailing whitespace is ignored.
[[nodiscard]] Graph parse_graph6(std::string_view text);
[[nodiscard]] std::string to_graph6(const Graph& g);

enum class GraphFormat { EdgeList, Graph6 };

[[nodiscard]] GraphFormat parse_graph_format(std::string_view name);

/// Reads a graph file. Throws InvalidArgument if it cannot be opened or parsed.
[[nodiscard]] Graph load_graph(const std::filesystem::path& path, GraphFormat format);

}  // namespace listpack::io
