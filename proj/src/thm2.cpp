#include "expcycles/thm2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "expcycles/numeric.hpp"

namespace expcycles {

VertexSet reachable_on_path(const Graph& g, const VertexSet& t, const Path& p, int k) {
  require_valid(g, t);
  const int n = g.order();
  VertexSet on_p(n, p.vertices);
  if (on_p.intersects(t)) throw Error(ErrorKind::invalid_input, "tree and path must be disjoint");
  VertexSet out(n);
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  for (Vertex v : t) {
    dist[v] = 0;
    queue.push_back(v);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex x = queue[i];
    if (dist[x] >= k) continue;
    for (Vertex w : g.neighbors(x)) {
      if (on_p.contains(w)) {
        out.insert(w);
      } else if (dist[w] < 0) {
        dist[w] = dist[x] + 1;
        queue.push_back(w);
      }
    }
  }
  return out;
}

RootedTree minimal_subtree(const RootedTree& t2, const VertexSet& x1) {
  if (x1.size() < 2) throw Error(ErrorKind::invalid_input, "minimal subtree needs at least two vertices");
  for (Vertex x : x1) {
    if (!t2.contains(x)) throw Error(ErrorKind::invalid_input, "vertex " + std::to_string(x) + " is not in the tree");
  }
  Vertex root = x1.min();
  for (Vertex x : x1) root = t2.lowest_common_ancestor(root, x);

  std::vector<char> keep(static_cast<std::size_t>(t2.universe()), 0);
  for (Vertex x : x1) {
    for (Vertex a = x; !keep[a]; a = t2.parent(a)) {
      keep[a] = 1;
      if (a == root) break;
    }
  }
  RootedTree::Builder b(t2.universe(), root);
  for (Vertex v : t2.members()) {
    if (keep[v] && v != root) b.attach(v, t2.parent(v));
  }
  RootedTree out = std::move(b).build();
  if (out.children(root).size() < 2) {
    throw Error(ErrorKind::invalid_input, "minimal subtree does not branch at its root");
  }
  return out;
}

namespace {

Vertex min_neighbor_in(const Graph& g, Vertex x, const std::vector<char>& mark) {
  for (Vertex w : g.neighbors(x)) {
    if (mark[w]) return w;
  }
  return -1;
}

}  // namespace

Thm2Trace run_thm2(const Graph& g, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) throw Error(ErrorKind::invalid_input, "alpha must lie in (0, 1]");
  const int n = g.order();
  if (n < 3) throw Error(ErrorKind::invalid_input, "graph needs at least 3 vertices");

  Thm2Trace tr;
  tr.alpha = alpha;
  auto& log = tr.log;

  const int s = std::max(1, static_cast<int>(floor_tol(alpha * n / 4.0)));
  BfsOptions opt;
  opt.stop_size = s;
  opt.stop_mode = StopMode::exact;
  tr.t = bfs_tree(g, 0, opt);
  if (tr.t.size() < s || !is_connected(g)) {
    throw StageFailure("initial-bfs", "tree reached " + std::to_string(tr.t.size()) + " of " + std::to_string(s) +
                                          " vertices; graph is disconnected");
  }
  const VertexSet tset = tr.t.vertex_set();

  // Longest DFS path in the largest component of G - T.
  const auto rest = induced_subgraph(g, tset.complement());
  int count = 0;
  const auto comp = connected_components(rest.graph, &count);
  if (count == 0) throw StageFailure("long-path", "no vertices outside the tree");
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (int c : comp) ++sizes[c];
  const int big = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  const Vertex start = static_cast<Vertex>(std::find(comp.begin(), comp.end(), big) - comp.begin());
  tr.p.vertices = rest.lift(deepest_dfs_path(rest.graph, start).vertices);
  const int want = static_cast<int>(ceil_tol(alpha * n / 4.0)) - 1;
  if (tr.p.length() < want) {
    throw StageFailure("long-path", "dfs depth " + std::to_string(tr.p.length()) + " < " + std::to_string(want));
  }
  log.at_least("long-path", "length", tr.p.length(), want);

  tr.k = 2 * static_cast<int>(std::ceil(std::log(3.0 / alpha) / std::log(1.0 + alpha / 2.0) - kTolerance)) + 1;
  const int k = tr.k;
  tr.x0 = reachable_on_path(g, tset, tr.p, k);
  log.at_least("reachable-set", "|X0|", tr.x0.size(), alpha * alpha * n / 12.0);
  if (tr.x0.size() < 2) {
    throw StageFailure("reachable-set", "|X0| = " + std::to_string(tr.x0.size()) + ", need at least 2");
  }

  const VertexSet pset(n, tr.p.vertices);
  int tdepth = tr.t.level_count() - 1;
  BfsOptions ext;
  ext.forbidden = pset;
  ext.max_depth = tdepth + k - 1;
  tr.t1 = bfs_tree(g, 0, ext);
  for (Vertex v : tr.t.members()) {
    if (!tr.t1.contains(v) || tr.t1.parent(v) != tr.t.parent(v)) {
      throw Error(ErrorKind::assembly_violation, "tree extension does not contain the initial tree");
    }
  }

  // Pigeonhole over the last k + 1 levels of T1.
  const int levels = tr.t1.level_count();
  const int first = std::max(0, levels - (k + 1));
  std::vector<int> level_of(static_cast<std::size_t>(n), -1);
  for (int i = first; i < levels; ++i) {
    for (Vertex v : tr.t1.level(i)) level_of[v] = i;
  }
  std::vector<int> hits(static_cast<std::size_t>(levels), 0);
  int covered = 0;
  for (Vertex x : tr.x0) {
    std::vector<char> seen(static_cast<std::size_t>(levels), 0);
    for (Vertex w : g.neighbors(x)) {
      const int l = level_of[w];
      if (l >= 0 && !seen[l]) {
        seen[l] = 1;
        ++hits[l];
      }
    }
    if (std::find(seen.begin(), seen.end(), 1) != seen.end()) ++covered;
  }
  log.at_least("extension", "X0 adjacent to last levels", covered, tr.x0.size());
  tr.x1_level = static_cast<int>(std::max_element(hits.begin(), hits.end()) - hits.begin());

  std::vector<char> in_level(static_cast<std::size_t>(n), 0);
  for (Vertex v : tr.t1.level(tr.x1_level)) in_level[v] = 1;
  tr.x1 = VertexSet(n);
  RootedTree::Builder b2(tr.t1);
  for (Vertex x : tr.x0) {
    const Vertex parent = min_neighbor_in(g, x, in_level);
    if (parent < 0) continue;
    tr.x1.insert(x);
    b2.attach(x, parent);
  }
  tr.t2 = std::move(b2).build();
  log.at_least("level-selection", "|X1|", tr.x1.size(), static_cast<double>(tr.x0.size()) / (k + 1));
  if (tr.x1.size() < 2) throw StageFailure("level-selection", "|X1| = " + std::to_string(tr.x1.size()));

  try {
    tr.t3 = minimal_subtree(tr.t2, tr.x1);
  } catch (const Error& e) {
    throw StageFailure("minimal-subtree", e.what());
  }
  tr.v = tr.t3.root();

  // Branch with the fewest X1 members (first child on ties, children ascend by id).
  auto kids = std::vector<Vertex>(tr.t3.children(tr.v).begin(), tr.t3.children(tr.v).end());
  std::sort(kids.begin(), kids.end());
  Vertex branch = -1;
  int branch_count = 0;
  for (Vertex c : kids) {
    int cnt = 0;
    for (Vertex w : tr.t3.subtree(c)) cnt += tr.x1.contains(w);
    if (branch < 0 || cnt < branch_count) {
      branch = c;
      branch_count = cnt;
    }
  }
  tr.y = VertexSet(n);
  for (Vertex w : tr.t3.subtree(branch)) {
    if (tr.x1.contains(w)) tr.y.insert(w);
  }
  tr.x2 = tr.x1 - tr.y;
  tr.u = tr.y.min();
  log.at_least("split", "|X2|", tr.x2.size(), tr.x1.size() / 2.0);

  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < tr.p.vertices.size(); ++i) pos[tr.p.vertices[i]] = static_cast<int>(i);
  const int pu = pos[tr.u];
  std::vector<Vertex> before, after;
  for (Vertex w : tr.x2) (pos[w] > pu ? after : before).push_back(w);
  tr.x3_forward = after.size() >= before.size();
  tr.x3_order = tr.x3_forward ? after : before;
  std::sort(tr.x3_order.begin(), tr.x3_order.end(),
            [&](Vertex a, Vertex b) { return std::abs(pos[a] - pu) < std::abs(pos[b] - pu); });
  tr.x3 = VertexSet(n, tr.x3_order);

  for (Vertex w : tr.x3_order) {
    std::vector<Vertex> c = tr.t3.tree_path(tr.v, tr.u);
    const int step = tr.x3_forward ? 1 : -1;
    for (int i = pu + step; i != pos[w]; i += step) c.push_back(tr.p.vertices[i]);
    auto back = tr.t3.tree_path(w, tr.v);
    back.pop_back();
    c.insert(c.end(), back.begin(), back.end());
    tr.cycles.push_back(validate_cycle(g, c));
  }
  for (std::size_t i = 1; i < tr.cycles.size(); ++i) {
    if (tr.cycles[i].length() <= tr.cycles[i - 1].length()) {
      throw Error(ErrorKind::assembly_violation, "cycle lengths are not increasing along the path");
    }
  }

  const double promised = std::ceil(tr.x0.size() / (4.0 * (k + 1)) - kTolerance);
  const bool prior = log.all_hold();
  log.at_least("count", "|X3|", tr.x3.size(), promised);
  if (prior && tr.x3.size() < promised) {
    throw Error(ErrorKind::assembly_violation, "|X3| below the pigeonhole count although every prior check held");
  }
  return tr;
}

}  // namespace expcycles
