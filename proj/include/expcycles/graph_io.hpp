#pragma once

#include <iosfwd>
#include <string>

#include "expcycles/graph.hpp"

namespace expcycles {

/// "n m" header followed by m lines "u v" with u < v in canonical order.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

/// {"n": int, "edges": [[u, v], ...]} with canonical edge order.
std::string to_json_text(const Graph& g);
Graph parse_json_graph(const std::string& text);

enum class GraphFormat { edge_list, json };

/// Picks the format from the extension (.json) or, failing that, the content.
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path, GraphFormat format);
GraphFormat format_for_path(const std::string& path);

}  // namespace expcycles
