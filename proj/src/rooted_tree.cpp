#include "expcycles/rooted_tree.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace expcycles {

RootedTree::Builder::Builder(int universe, Vertex root)
    : universe_(universe),
      root_(root),
      parent_(static_cast<std::size_t>(universe), -1),
      depth_(static_cast<std::size_t>(universe), -1) {
  if (root < 0 || root >= universe) {
    throw Error(ErrorKind::invalid_input, "tree root " + std::to_string(root) + " out of range");
  }
  depth_[root] = 0;
  order_.push_back(root);
}

RootedTree::Builder::Builder(const RootedTree& base)
    : universe_(base.universe()), root_(base.root_), parent_(base.parent_), depth_(base.depth_), order_(base.order_) {}

void RootedTree::Builder::attach(Vertex child, Vertex parent) {
  if (child < 0 || child >= universe_ || parent < 0 || parent >= universe_) {
    throw Error(ErrorKind::invalid_input, "tree attach with id out of range");
  }
  if (depth_[child] >= 0) throw Error(ErrorKind::invalid_input, "vertex " + std::to_string(child) + " already in tree");
  if (depth_[parent] < 0) throw Error(ErrorKind::invalid_input, "parent " + std::to_string(parent) + " not in tree");
  parent_[child] = parent;
  depth_[child] = depth_[parent] + 1;
  order_.push_back(child);
}

RootedTree RootedTree::Builder::build(std::optional<int> degree_cap) && {
  RootedTree t;
  t.root_ = root_;
  t.parent_ = std::move(parent_);
  t.depth_ = std::move(depth_);
  t.order_ = std::move(order_);
  t.degree_cap_ = degree_cap;

  for (Vertex v : t.order_) {
    const auto d = static_cast<std::size_t>(t.depth_[v]);
    if (t.levels_.size() <= d) t.levels_.resize(d + 1);
    t.levels_[d].push_back(v);
  }

  const auto n = static_cast<std::size_t>(universe_);
  std::vector<int> count(n, 0);
  for (Vertex v : t.order_) {
    if (t.parent_[v] >= 0) ++count[t.parent_[v]];
  }
  t.child_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) t.child_offsets_[v + 1] = t.child_offsets_[v] + count[v];
  t.child_list_.resize(t.order_.size() - 1);
  std::vector<int> cursor(t.child_offsets_.begin(), t.child_offsets_.end() - 1);
  for (Vertex v : t.order_) {
    if (t.parent_[v] >= 0) t.child_list_[cursor[t.parent_[v]]++] = v;
  }

  t.subtree_size_.assign(n, 0);
  for (auto it = t.order_.rbegin(); it != t.order_.rend(); ++it) {
    t.subtree_size_[*it] += 1;
    if (t.parent_[*it] >= 0) t.subtree_size_[t.parent_[*it]] += t.subtree_size_[*it];
  }
  return t;
}

std::span<const Vertex> RootedTree::children(Vertex v) const {
  if (!contains(v)) return {};
  return {child_list_.data() + child_offsets_[v], child_list_.data() + child_offsets_[v + 1]};
}

int RootedTree::tree_degree(Vertex v) const {
  if (!contains(v)) return 0;
  return static_cast<int>(children(v).size()) + (parent_[v] >= 0 ? 1 : 0);
}

VertexSet RootedTree::vertex_set() const { return VertexSet(universe(), std::span<const Vertex>(order_)); }

int RootedTree::prefix_size(int count) const {
  int total = 0;
  for (int i = 0; i < std::min(count, level_count()); ++i) total += static_cast<int>(levels_[i].size());
  return total;
}

std::vector<Vertex> RootedTree::path_to_root(Vertex v) const {
  if (!contains(v)) throw Error(ErrorKind::invalid_input, "vertex " + std::to_string(v) + " not in tree");
  std::vector<Vertex> out;
  for (Vertex x = v; x >= 0; x = parent_[x]) out.push_back(x);
  return out;
}

Vertex RootedTree::ancestor_at_depth(Vertex v, int d) const {
  if (!contains(v) || d < 0 || d > depth_[v]) {
    throw Error(ErrorKind::invalid_input, "no ancestor at depth " + std::to_string(d));
  }
  while (depth_[v] > d) v = parent_[v];
  return v;
}

Vertex RootedTree::lowest_common_ancestor(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) throw Error(ErrorKind::invalid_input, "lca of non-member");
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

std::vector<Vertex> RootedTree::tree_path(Vertex a, Vertex b) const {
  const Vertex top = lowest_common_ancestor(a, b);
  std::vector<Vertex> out;
  for (Vertex x = a; x != top; x = parent_[x]) out.push_back(x);
  out.push_back(top);
  std::vector<Vertex> tail;
  for (Vertex x = b; x != top; x = parent_[x]) tail.push_back(x);
  out.insert(out.end(), tail.rbegin(), tail.rend());
  return out;
}

bool RootedTree::is_ancestor(Vertex a, Vertex v) const {
  if (!contains(a) || !contains(v) || depth_[a] > depth_[v]) return false;
  while (depth_[v] > depth_[a]) v = parent_[v];
  return v == a;
}

std::vector<Vertex> RootedTree::subtree(Vertex v) const {
  if (!contains(v)) throw Error(ErrorKind::invalid_input, "vertex " + std::to_string(v) + " not in tree");
  std::vector<Vertex> out;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    auto ch = children(x);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

RootedTree RootedTree::relabel(std::span<const Vertex> to_parent, int parent_universe) const {
  Builder b(parent_universe, to_parent[root_]);
  for (std::size_t i = 1; i < order_.size(); ++i) {
    const Vertex v = order_[i];
    b.attach(to_parent[v], to_parent[parent_[v]]);
  }
  return std::move(b).build(degree_cap_);
}

bool RootedTree::edges_in(const Graph& g) const {
  if (universe() > g.order()) return false;
  for (Vertex v : order_) {
    if (parent_[v] >= 0 && !g.adjacent(v, parent_[v])) return false;
  }
  return true;
}

RootedTree bfs_tree(const Graph& g, Vertex root, const BfsOptions& options) {
  const int n = g.order();
  if (!g.valid_vertex(root)) throw Error(ErrorKind::invalid_input, "bfs root " + std::to_string(root) + " out of range");
  if (options.forbidden) {
    require_valid(g, *options.forbidden);
    if (options.forbidden->contains(root)) throw Error(ErrorKind::invalid_input, "bfs root is forbidden");
  }

  std::vector<int> rank(static_cast<std::size_t>(n));
  if (options.order.empty()) {
    for (int v = 0; v < n; ++v) rank[v] = v;
  } else {
    if (static_cast<int>(options.order.size()) != n || options.order.front() != root) {
      throw Error(ErrorKind::invalid_input, "bfs order must be a permutation starting at the root");
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      const Vertex v = options.order[i];
      if (!g.valid_vertex(v) || seen[v]) throw Error(ErrorKind::invalid_input, "bfs order is not a permutation");
      seen[v] = 1;
      rank[v] = i;
    }
  }

  RootedTree::Builder builder(n, root);
  const auto stop_reached = [&] { return options.stop_size && builder.size() >= *options.stop_size; };
  bool cap_active = options.cap && builder.size() >= options.cap->activation_size;

  std::deque<Vertex> queue{root};
  std::vector<Vertex> batch;
  while (!queue.empty() && !stop_reached()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (options.max_depth && builder.depth(v) >= *options.max_depth) continue;

    batch.clear();
    for (Vertex w : g.neighbors(v)) {
      if (builder.contains(w)) continue;
      if (options.forbidden && options.forbidden->contains(w)) continue;
      batch.push_back(w);
    }
    std::sort(batch.begin(), batch.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });

    // The cap applies to vertices whose exploration starts after activation.
    const bool capped = cap_active;
    int attached = 0;
    for (Vertex w : batch) {
      if (capped && attached >= options.cap->max_degree - 1) break;
      if (options.stop_mode == StopMode::exact && stop_reached()) break;
      builder.attach(w, v);
      queue.push_back(w);
      ++attached;
      if (options.cap && !cap_active && builder.size() >= options.cap->activation_size) cap_active = true;
    }
  }
  std::optional<int> cap;
  if (options.cap) cap = options.cap->max_degree;
  return std::move(builder).build(cap);
}

}  // namespace expcycles
