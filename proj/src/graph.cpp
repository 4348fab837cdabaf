#include "expcycles/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

namespace expcycles {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::invalid_partition: return "invalid-partition";
    case ErrorKind::not_a_cycle: return "not-a-cycle";
    case ErrorKind::too_large: return "too-large";
    case ErrorKind::precondition_failed: return "precondition-failed";
    case ErrorKind::component_too_small: return "component-too-small";
    case ErrorKind::beta_graph_refuted: return "beta-graph-refuted";
    case ErrorKind::infeasible_degree: return "infeasible-degree";
    case ErrorKind::retry_limit: return "retry-limit";
    case ErrorKind::insufficient_data: return "insufficient-data";
    case ErrorKind::stage_failure: return "stage-failure";
    case ErrorKind::target_out_of_range: return "target-out-of-range";
    case ErrorKind::assembly_violation: return "assembly-violation";
    case ErrorKind::embedding_failed: return "embedding-failed";
    case ErrorKind::no_closing_edge: return "no-closing-edge";
  }
  return "unknown";
}

Graph::Graph(int n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0) throw Error(ErrorKind::invalid_input, "negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::invalid_input,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorKind::invalid_input, "self-loop at vertex " + std::to_string(u));
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  auto dup = std::adjacent_find(canon.begin(), canon.end());
  if (dup != canon.end()) {
    throw Error(ErrorKind::invalid_input,
                "parallel edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  }
  return from_edges_dedup(n, std::move(canon));
}

Graph Graph::from_edges_dedup(int n, std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::invalid_input, "edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g(n);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(edges.size() * 2);
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);
  }
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_simple_path(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (!g.valid_vertex(v) || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(vertices[i - 1], v)) return false;
  }
  return true;
}

CycleCertificate validate_cycle(const Graph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) {
    throw NotACycle(CycleDefect::too_short, "cycle has " + std::to_string(cycle.size()) + " vertices, need at least 3");
  }
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : cycle) {
    if (!g.valid_vertex(v)) throw NotACycle(CycleDefect::out_of_range, "vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw NotACycle(CycleDefect::repeated_vertex, "vertex " + std::to_string(v) + " repeats");
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    if (!g.adjacent(a, b)) {
      throw NotACycle(CycleDefect::missing_edge, "missing edge " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
  return CycleCertificate(std::vector<Vertex>(cycle.begin(), cycle.end()));
}

void require_valid(const Graph& g, const VertexSet& u) {
  if (u.universe() != g.order()) {
    throw Error(ErrorKind::invalid_input, "vertex set universe " + std::to_string(u.universe()) +
                                              " does not match graph order " + std::to_string(g.order()));
  }
}

VertexSet neighborhood(const Graph& g, const VertexSet& u) {
  require_valid(g, u);
  VertexSet out(g.order());
  for (Vertex v : u) {
    for (Vertex w : g.neighbors(v)) {
      if (!u.contains(w)) out.insert(w);
    }
  }
  return out;
}

VertexSet ball(const Graph& g, const VertexSet& u, int r) {
  require_valid(g, u);
  if (r < 0) throw Error(ErrorKind::invalid_input, "negative radius");
  VertexSet out = u;
  std::vector<Vertex> frontier = u.to_vector();
  for (int step = 0; step < r && !frontier.empty(); ++step) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex w : g.neighbors(v)) {
        if (!out.contains(w)) {
          out.insert(w);
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local, int parent_universe) const {
  VertexSet out(parent_universe);
  for (Vertex v : local) out.insert(to_parent[v]);
  return out;
}

VertexSet InducedSubgraph::restrict(const VertexSet& parent) const {
  VertexSet out(graph.order());
  for (Vertex v : parent) {
    if (v < static_cast<int>(from_parent.size()) && from_parent[v] >= 0) out.insert(from_parent[v]);
  }
  return out;
}

std::vector<Vertex> InducedSubgraph::lift(std::span<const Vertex> local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[v]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  require_valid(g, keep);
  InducedSubgraph sub;
  sub.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : keep) {
    sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : keep) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && keep.contains(w)) edges.emplace_back(sub.from_parent[v], sub.from_parent[w]);
    }
  }
  sub.graph = Graph::from_edges_dedup(static_cast<int>(sub.to_parent.size()), std::move(edges));
  return sub;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

VertexSet component_of(const Graph& g, Vertex v) {
  if (!g.valid_vertex(v)) throw Error(ErrorKind::invalid_input, "vertex out of range");
  VertexSet out(g.order());
  auto dist = bfs_distances(g, std::span<const Vertex>(&v, 1));
  for (Vertex w = 0; w < g.order(); ++w) {
    if (dist[w] >= 0) out.insert(w);
  }
  return out;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!g.valid_vertex(s)) throw Error(ErrorKind::invalid_input, "source out of range");
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int component_diameter(const Graph& g, Vertex v) {
  const VertexSet comp = component_of(g, v);
  int diameter = 0;
  for (Vertex s : comp) {
    auto dist = bfs_distances(g, std::span<const Vertex>(&s, 1));
    for (Vertex w : comp) diameter = std::max(diameter, dist[w]);
  }
  return diameter;
}

Graph subdivide(const Graph& g, int m) {
  if (m < 0) throw Error(ErrorKind::invalid_input, "subdivision count must be non-negative");
  const auto edges = g.edges();
  const int n = g.order();
  const long long total = n + static_cast<long long>(m) * static_cast<long long>(edges.size());
  if (total > std::numeric_limits<int>::max()) throw Error(ErrorKind::invalid_input, "subdivision too large");
  std::vector<Edge> out;
  out.reserve(edges.size() * static_cast<std::size_t>(m + 1));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    Vertex prev = u;
    for (int j = 0; j < m; ++j) {
      const Vertex fresh = n + static_cast<Vertex>(i) * m + j;
      out.emplace_back(prev, fresh);
      prev = fresh;
    }
    out.emplace_back(prev, v);
  }
  return Graph::from_edges(static_cast<int>(total), out);
}

Contraction contract_partition(const Graph& g, const std::vector<std::vector<Vertex>>& parts) {
  Contraction result;
  result.part_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw Error(ErrorKind::invalid_partition, "part " + std::to_string(i) + " is empty");
    for (Vertex v : parts[i]) {
      if (!g.valid_vertex(v)) throw Error(ErrorKind::invalid_partition, "vertex out of range in partition");
      if (result.part_of[v] >= 0) {
        throw Error(ErrorKind::invalid_partition, "vertex " + std::to_string(v) + " appears in two parts");
      }
      result.part_of[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (result.part_of[v] < 0) {
      throw Error(ErrorKind::invalid_partition, "vertex " + std::to_string(v) + " not covered by partition");
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    const int a = result.part_of[u];
    const int b = result.part_of[v];
    if (a != b) edges.emplace_back(a, b);
  }
  result.graph = Graph::from_edges_dedup(static_cast<int>(parts.size()), std::move(edges));
  return result;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), edges);
}

}  // namespace expcycles
