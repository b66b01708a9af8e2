#pragma once

// Graph serialization: JSON documents, plain edge lists, DOT export.
//
// JSON shape:
//   {"vertices": [{"id": 0, "side": "A", "part": 0, "name": "a0"}, ...],
//    "edges": [[0, 5], [0, 5], ...]}
// "side", "part" and "name" are optional.  Parallel edges repeat the pair.

#include <string>

#include <json.hpp>

#include "cubforge/graph.hpp"

namespace cubforge {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

Graph load_graph_file(const std::string& path);  // dispatches on extension
void save_graph_json(const Graph& g, const std::string& path);

// One "u v" pair per line, '#' starts a comment.  Vertices are 0..max id.
Graph graph_from_edge_list(const std::string& text);

std::string graph_to_dot(const Graph& g);

}  // namespace cubforge
