#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "optbranch/graph.hpp"

namespace optbranch {

enum class GraphFormat { EdgeList, Dimacs };

/// Edge list: one "u v" pair per line, 1-based, '#' starts a comment. An
/// optional first data line holding a single integer fixes the vertex count;
/// without it the largest id does.
///
/// DIMACS: "c" comment lines, one "p edge n m" header, then "e u v" lines.
///
/// Both formats merge duplicate edges. Malformed lines and self-loops throw
/// ParseError with the line number, ids outside 1..n throw RangeError.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::filesystem::path& path, GraphFormat format);

/// "dimacs" or "edgelist".
GraphFormat parse_format_name(std::string_view name);

/// Writes the edge-list format with a vertex-count header line.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace optbranch
