#include "expcycles/graph_io.hpp"

#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

namespace expcycles {

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorKind::invalid_input, "edge list: bad header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw Error(ErrorKind::invalid_input, "edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::invalid_input, "edge list: endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::invalid_input, "edge list: trailing content");
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_json_text(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

Graph parse_json_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("graph json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("edges") ||
      !j["edges"].is_array()) {
    throw Error(ErrorKind::invalid_input, "graph json: need integer \"n\" and array \"edges\"");
  }
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > std::numeric_limits<int>::max()) throw Error(ErrorKind::invalid_input, "graph json: bad n");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw Error(ErrorKind::invalid_input, "graph json: each edge must be [u, v]");
    }
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::invalid_input, "graph json: endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

GraphFormat format_for_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0 ? GraphFormat::json
                                                                             : GraphFormat::edge_list;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (format_for_path(path) == GraphFormat::json) return parse_json_graph(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_graph(text);
  return parse_edge_list(text);
}

void write_graph_file(const Graph& g, const std::string& path, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_input, "cannot write " + path);
  out << (format == GraphFormat::json ? to_json_text(g) : to_edge_list(g));
}

}  // namespace expcycles
