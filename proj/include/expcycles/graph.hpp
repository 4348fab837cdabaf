#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expcycles/error.hpp"
#include "expcycles/vertex_set.hpp"

namespace expcycles {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph in compressed adjacency form. Neighbor
/// lists are sorted ascending; there are no self-loops or parallel edges.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on `n` vertices.
  explicit Graph(int n);

  /// Throws invalid_input on self-loops, repeated edges or out-of-range ids.
  static Graph from_edges(int n, std::span<const Edge> edges);
  /// Like from_edges, but silently drops self-loops and repeated edges.
  static Graph from_edges_dedup(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

  /// Canonical edge list: pairs (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<int> offsets_{0};
  std::vector<Vertex> targets_;
};

/// A simple path; length is the number of edges.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? -1 : static_cast<int>(vertices.size()) - 1; }
  bool empty() const { return vertices.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const Path&) const = default;
};

/// True iff the vertices are distinct, in range and consecutive ones adjacent.
bool is_simple_path(const Graph& g, std::span<const Vertex> vertices);

/// A vertex sequence proven to be a simple cycle of the graph it was
/// validated against. Only validate_cycle creates these.
class CycleCertificate {
 public:
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  int length() const noexcept { return static_cast<int>(vertices_.size()); }
  bool operator==(const CycleCertificate&) const = default;

 private:
  friend CycleCertificate validate_cycle(const Graph& g, std::span<const Vertex> cycle);
  explicit CycleCertificate(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Vertex> vertices_;
};

enum class CycleDefect { too_short, out_of_range, repeated_vertex, missing_edge };

class NotACycle : public Error {
 public:
  NotACycle(CycleDefect defect, const std::string& message)
      : Error(ErrorKind::not_a_cycle, message), defect_(defect) {}
  CycleDefect defect() const noexcept { return defect_; }

 private:
  CycleDefect defect_;
};

/// The single gatekeeper for cycles. Throws NotACycle naming the first
/// violated condition.
CycleCertificate validate_cycle(const Graph& g, std::span<const Vertex> cycle);

/// External neighborhood N(U).
VertexSet neighborhood(const Graph& g, const VertexSet& u);
/// Vertices within distance r of U.
VertexSet ball(const Graph& g, const VertexSet& u, int r);

/// Checks that `u` is a set over the vertex universe of `g`.
void require_valid(const Graph& g, const VertexSet& u);

/// A subgraph induced on a vertex subset, with the id correspondence.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // local id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> local id, or -1

  VertexSet lift(const VertexSet& local, int parent_universe) const;
  VertexSet restrict(const VertexSet& parent) const;
  std::vector<Vertex> lift(std::span<const Vertex> local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Component index per vertex, components numbered by their minimum vertex.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
VertexSet component_of(const Graph& g, Vertex v);
bool is_connected(const Graph& g);

/// BFS distances from a set of sources; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources);

/// Exact diameter of the component containing v (all-source BFS).
int component_diameter(const Graph& g, Vertex v);

/// Replaces every edge by a path with m internal vertices. Fresh vertices of
/// the i-th canonical edge (u, v) are n + i*m, ..., n + i*m + m - 1 from u.
Graph subdivide(const Graph& g, int m);

struct Contraction {
  Graph graph;
  std::vector<int> part_of;  // original vertex -> part index
};

/// Contract each part to one vertex; multi-edges and loops are dropped.
Contraction contract_partition(const Graph& g, const std::vector<std::vector<Vertex>>& parts);

/// Disjoint union; the second graph's ids are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace expcycles
