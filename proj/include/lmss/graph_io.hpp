#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lmss/graph.hpp"

namespace lmss {

/// Edge-list document: whitespace-separated tokens, `#` starts a comment,
/// two tokens declare an edge, one token an isolated vertex.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// {"vertices": [...], "edges": [[u, v], ...]}
Graph parse_graph_json(std::string_view text);
std::string to_graph_json(const Graph& g);

std::string to_dot(const Graph& g);

/// Dispatches on extension: `.json` is JSON, anything else is an edge list.
Graph load_graph(const std::filesystem::path& path);

}  // namespace lmss
