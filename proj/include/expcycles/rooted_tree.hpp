#pragma once

#include <optional>
#include <span>
#include <vector>

#include "expcycles/graph.hpp"

namespace expcycles {

/// A rooted tree over a host vertex universe. Level 0 holds the root alone;
/// level i holds the vertices at depth i. Within a level, vertices keep the
/// order in which they were attached.
class RootedTree {
 public:
  class Builder {
   public:
    Builder(int universe, Vertex root);
    explicit Builder(const RootedTree& base);

    /// Attach `child` below `parent`. Throws invalid_input if the child is
    /// already present, the parent is absent, or an id is out of range.
    void attach(Vertex child, Vertex parent);
    bool contains(Vertex v) const { return v >= 0 && v < universe_ && depth_[v] >= 0; }
    int size() const { return static_cast<int>(order_.size()); }
    int depth(Vertex v) const { return depth_[v]; }

    RootedTree build(std::optional<int> degree_cap = std::nullopt) &&;

   private:
    int universe_;
    Vertex root_;
    std::vector<Vertex> parent_;
    std::vector<int> depth_;
    std::vector<Vertex> order_;
  };

  RootedTree() = default;

  Vertex root() const noexcept { return root_; }
  int universe() const noexcept { return static_cast<int>(parent_.size()); }
  int size() const noexcept { return static_cast<int>(order_.size()); }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < universe() && depth_[v] >= 0;
  }
  /// -1 for the root and for non-members.
  Vertex parent(Vertex v) const { return parent_[v]; }
  /// 0 for the root, -1 for non-members.
  int depth(Vertex v) const { return depth_[v]; }
  int level_count() const noexcept { return static_cast<int>(levels_.size()); }
  std::span<const Vertex> level(int index) const { return levels_[index]; }
  const std::vector<std::vector<Vertex>>& levels() const noexcept { return levels_; }
  /// Members in attachment order (BFS discovery order for BFS trees).
  const std::vector<Vertex>& members() const noexcept { return order_; }
  std::span<const Vertex> children(Vertex v) const;
  int tree_degree(Vertex v) const;
  /// Number of vertices of the subtree rooted at v (v included).
  int subtree_size(Vertex v) const { return subtree_size_[v]; }
  std::optional<int> degree_cap() const noexcept { return degree_cap_; }

  VertexSet vertex_set() const;
  /// Number of vertices on levels 0..count-1.
  int prefix_size(int count) const;

  /// v, parent(v), ..., root.
  std::vector<Vertex> path_to_root(Vertex v) const;
  /// The unique tree path from a to b.
  std::vector<Vertex> tree_path(Vertex a, Vertex b) const;
  Vertex lowest_common_ancestor(Vertex a, Vertex b) const;
  Vertex ancestor_at_depth(Vertex v, int depth) const;
  /// True iff `a` lies on the path from v to the root (a == v included).
  bool is_ancestor(Vertex a, Vertex v) const;
  /// Vertices of the subtree rooted at v, in preorder.
  std::vector<Vertex> subtree(Vertex v) const;

  /// Re-express the tree in another universe through `to_parent`.
  RootedTree relabel(std::span<const Vertex> to_parent, int parent_universe) const;

  /// True iff every tree edge is an edge of g (and ids fit g).
  bool edges_in(const Graph& g) const;

 private:
  Vertex root_ = -1;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> levels_;
  std::vector<int> child_offsets_;
  std::vector<Vertex> child_list_;
  std::vector<int> subtree_size_;
  std::optional<int> degree_cap_;
};

struct DegreeCap {
  int max_degree;       // tree-degree bound (children + parent link)
  int activation_size;  // cap applies once the tree first reaches this size
};

enum class StopMode {
  finish_batch,  // complete the neighbor batch of the vertex in progress
  exact,         // stop at exactly stop_size vertices
};

struct BfsOptions {
  /// Exploration priority; empty means ascending ids. When given it must be
  /// a permutation of the vertices starting at the root.
  std::vector<Vertex> order;
  std::optional<int> stop_size;
  StopMode stop_mode = StopMode::finish_batch;
  std::optional<DegreeCap> cap;
  std::optional<VertexSet> forbidden;
  /// Never attach vertices deeper than this.
  std::optional<int> max_depth;
};

/// BFS tree from `root`. Neighbors are explored in `order` priority; once the
/// cap is active every newly explored vertex attaches at most max_degree - 1
/// children.
RootedTree bfs_tree(const Graph& g, Vertex root, const BfsOptions& options = {});

}  // namespace expcycles
