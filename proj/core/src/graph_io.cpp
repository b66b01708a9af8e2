#include "cubforge/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cubforge {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json verts = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& l = g.label(v);
    json jv{{"id", v}};
    if (l.side != Side::none) jv["side"] = to_string(l.side);
    if (l.part != kNoPart) jv["part"] = l.part;
    if (!l.name.empty()) jv["name"] = l.name;
    verts.push_back(std::move(jv));
  }
  json es = json::array();
  for (const auto& [u, v] : g.edges()) es.push_back(json::array({u, v}));
  return json{{"vertices", std::move(verts)}, {"edges", std::move(es)}};
}

Graph graph_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph json needs 'vertices' and 'edges'");
  int max_id = -1;
  for (const auto& jv : j.at("vertices")) max_id = std::max(max_id, jv.at("id").get<int>());
  Graph g(max_id + 1);
  for (const auto& jv : j.at("vertices")) {
    int id = jv.at("id").get<int>();
    auto& l = g.label(id);
    if (jv.contains("side")) {
      std::string s = jv.at("side").get<std::string>();
      if (s == "A") l.side = Side::A;
      else if (s == "B") l.side = Side::B;
      else throw std::invalid_argument("bad side tag '" + s + "'");
    }
    if (jv.contains("part")) {
      int p = jv.at("part").get<int>();
      if (p != 0 && p != 1) throw std::invalid_argument("part tag must be 0 or 1");
      l.part = p;
    }
    if (jv.contains("name")) l.name = jv.at("name").get<std::string>();
  }
  for (const auto& je : j.at("edges")) {
    if (!je.is_array() || je.size() != 2)
      throw std::invalid_argument("edge entries must be [u, v] pairs");
    g.add_edge(je[0].get<int>(), je[1].get<int>());
  }
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return graph_from_json(json::parse(text));
  return graph_from_edge_list(text);
}

void save_graph_json(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << graph_to_json(g).dump(2) << "\n";
}

Graph graph_from_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  int max_id = -1;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v))
      throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": expected two ids");
    int extra;
    if (ls >> extra)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": trailing tokens");
    pairs.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  Graph g(max_id + 1);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& l = g.label(v);
    out << "  v" << v << " [label=\"" << (l.name.empty() ? std::to_string(v) : l.name) << "\"";
    if (l.side == Side::A) out << ", shape=box";
    if (l.part == 0) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cubforge
