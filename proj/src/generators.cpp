#include "expcycles/generators.hpp"

#include <algorithm>
#include <string>

#include "expcycles/numeric.hpp"
#include "expcycles/rng.hpp"

namespace expcycles {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::invalid_input, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, spokes i - (i+5), inner pentagram on 5..9.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

Graph barbell_graph(int size) {
  std::vector<Edge> edges = complete_graph(size).edges();
  for (auto [u, v] : complete_graph(size).edges()) edges.emplace_back(u + size, v + size);
  edges.emplace_back(size - 1, size);
  return Graph::from_edges(2 * size, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::invalid_input, "complete_bipartite needs a, b >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(a + b, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0) {
    throw Error(ErrorKind::infeasible_degree,
                "no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
  }
  constexpr int kMaxRestarts = 10'000;
  Rng rng(seed);
  std::vector<Vertex> points(static_cast<std::size_t>(n) * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt <= kMaxRestarts; ++attempt) {
    std::vector<Vertex> pairing = points;
    rng.shuffle(std::span<Vertex>(pairing));
    edges.clear();
    bool ok = true;
    for (std::size_t i = 0; i < pairing.size(); i += 2) {
      const Vertex u = std::min(pairing[i], pairing[i + 1]);
      const Vertex v = std::max(pairing[i], pairing[i + 1]);
      if (u == v) {
        ok = false;
        break;
      }
      edges.emplace_back(u, v);
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph::from_edges(n, edges);
  }
  throw Error(ErrorKind::retry_limit, "random_regular: no simple pairing after 10^4 restarts");
}

Graph clique_plus_isolated(int n, double beta) {
  const int bn = ceil_tol(beta * n);
  if (bn < 1 || bn > n) throw Error(ErrorKind::invalid_input, "clique_plus_isolated needs 1 <= beta n <= n");
  const int clique = n + 1 - bn;
  std::vector<Edge> edges = complete_graph(clique).edges();
  return Graph::from_edges(n, edges);
}

Graph binomial_random(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::invalid_input, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace expcycles
