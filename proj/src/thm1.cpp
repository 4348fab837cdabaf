#include "expcycles/thm1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "expcycles/numeric.hpp"

namespace expcycles {

PipelineConstants paper_constants(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) throw Error(ErrorKind::invalid_input, "alpha must lie in (0, 1]");
  PipelineConstants c;
  c.mode = ConstantsMode::paper;
  c.alpha = alpha;
  const double a5 = std::pow(alpha, 5);
  c.delta = ceil_tol(1600.0 / a5);
  c.c0 = 15.0 / alpha;
  c.c1 = 201.0 / a5;
  c.c2 = 17.0 / alpha;
  c.log2_c3 = (c.c2 + 1.0) * std::log2(static_cast<double>(c.delta));
  c.c3 = c.log2_c3 < 1000.0 ? std::exp2(c.log2_c3) : std::numeric_limits<double>::infinity();
  c.mu = 200.0 / std::pow(alpha, 4);
  c.a = 3.0 * c.c2;
  c.a1 = 1000.0 / alpha + 2.0 * c.c0;
  c.log2_a2 = std::log2(alpha) - std::log2(1000.0) - 2.0 * c.log2_c3;
  c.a2 = std::exp2(c.log2_a2);
  c.skeleton_fraction = alpha * alpha / 16.0;
  c.absorb_fraction = std::pow(alpha, 3) / 32.0;
  c.stage_fraction = std::pow(alpha, 4) / 200.0;
  c.level_fraction = alpha / 12.0;
  c.eps = 0.2;
  return c;
}

PipelineConstants practical_constants() {
  PipelineConstants c;
  c.mode = ConstantsMode::practical;
  c.delta = 4;
  c.c0 = 10.0;
  c.c1 = 50.0;
  c.c2 = 8.0;
  c.log2_c3 = 18.0;  // delta^(c2 + 1)
  c.c3 = 262144.0;
  c.mu = 40.0;
  c.a = 24.0;
  c.a1 = 2.5;
  c.a2 = 0.25;
  c.log2_a2 = std::log2(c.a2);
  c.skeleton_fraction = 0.05;
  c.absorb_fraction = 0.01;
  c.stage_fraction = 0.02;
  c.level_fraction = 0.05;
  c.eps = 0.2;
  return c;
}

namespace {

bool practical(const PipelineConstants& c) { return c.mode == ConstantsMode::practical; }

// Runs a pruning step, turning a failed precondition into a stage failure.
template <class F>
PruneResult staged_prune(const std::string& stage, F&& f) {
  try {
    return f();
  } catch (const StageFailure&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::precondition_failed) throw StageFailure(stage, e.what());
    throw;
  }
}

int first_prefix_at_least(const RootedTree& t, double bound) {
  for (int i = 1; i <= t.level_count(); ++i) {
    if (t.prefix_size(i) >= bound - kTolerance) return i;
  }
  return -1;
}

}  // namespace

KeyTree key_tree(const Graph& g, Vertex v0, double alpha, const PipelineConstants& consts) {
  const int n = g.order();
  if (!(alpha > 0.0) || alpha > 1.0) throw Error(ErrorKind::invalid_input, "alpha must lie in (0, 1]");
  if (!g.valid_vertex(v0)) throw Error(ErrorKind::invalid_input, "key tree root out of range");
  if (consts.delta < 2) throw Error(ErrorKind::invalid_input, "degree cap must be at least 2");

  KeyTree kt;
  auto& log = kt.log;
  const double stage_bound = consts.stage_fraction * n;
  BfsOptions opt;
  opt.cap = DegreeCap{consts.delta, std::max(1, ceil_tol(stage_bound))};
  kt.tree = bfs_tree(g, v0, opt);
  const RootedTree& t = kt.tree;
  if (2 * t.size() < n) {
    throw StageFailure("key-tree", "tree spans " + std::to_string(t.size()) + " of " + std::to_string(n) +
                                       " vertices, fewer than half");
  }
  kt.k0 = first_prefix_at_least(t, stage_bound);
  kt.t1 = first_prefix_at_least(t, n / 4.0);
  kt.t2 = first_prefix_at_least(t, n / 2.0);

  const double thin = consts.level_fraction * n;
  const auto level_size = [&](int i) { return static_cast<int>(t.level(i - 1).size()); };
  kt.k1 = 1;
  for (int i = kt.t1 - 1; i >= 1; --i) {
    if (level_size(i) < thin - kTolerance) {
      kt.k1 = i + 1;
      break;
    }
  }
  kt.k2 = t.level_count();
  for (int i = kt.t2 + 1; i <= t.level_count(); ++i) {
    if (level_size(i) < thin - kTolerance) {
      kt.k2 = i - 1;
      break;
    }
  }

  log.at_most("key-tree", "k0 - C0 ln n", kt.k0, consts.c0 * std::log(static_cast<double>(n)));
  log.at_most("key-tree", "k1 - k0", kt.k1 - kt.k0, consts.c1);
  log.at_least("key-tree", "k1 >= k0", kt.k1, kt.k0);
  log.at_most("key-tree", "k2 - k1", kt.k2 - kt.k1, consts.c2);
  if (kt.k1 < 2) throw StageFailure("key-tree-levels", "k1 = 1 puts the root inside the cut");
  if (kt.k2 - kt.k1 > consts.c2 + kTolerance) {
    throw StageFailure("key-tree-levels",
                       "k2 - k1 = " + std::to_string(kt.k2 - kt.k1) + " exceeds C2 = " + std::to_string(consts.c2));
  }

  kt.x = VertexSet(n);
  kt.w = VertexSet(n);
  int max_cut_degree = 0;
  for (Vertex v : t.members()) {
    if (t.tree_degree(v) >= consts.delta) kt.x.insert(v);
    const int level = t.depth(v) + 1;
    if (level >= kt.k1 && level <= kt.k2) {
      max_cut_degree = std::max(max_cut_degree, t.tree_degree(v));
      if (!kt.x.contains(v)) kt.w.insert(v);
    }
  }
  log.at_most("key-tree", "cut tree-degree", max_cut_degree, consts.delta);
  log.at_least("interior-prune", "|W| > n/2", kt.w.size(), n / 2.0 + 0.5);
  log.at_most("interior-prune", "|N(W)|", neighborhood(g, kt.w).size(), alpha * consts.eps * n);

  PruneOptions po;
  po.force = practical(consts);
  const PruneResult pr =
      staged_prune("interior-prune", [&] { return prune_interior(g, kt.w, alpha, consts.eps, po); });
  kt.u2 = pr.survivors;
  kt.u2_exhaustive = pr.exhaustive;
  log.at_least("interior-prune", "|U2|", kt.u2.size(), n / 10.0);
  if (kt.u2.empty()) throw StageFailure("interior-prune", "every vertex of the cut was deleted");
  return kt;
}

namespace {

Vertex min_neighbor_in(const Graph& g, Vertex v, const VertexSet& s) {
  for (Vertex w : g.neighbors(v)) {
    if (s.contains(w)) return w;
  }
  return -1;
}

KeyTree lift_key(const KeyTree& local, const InducedSubgraph& sub, int universe) {
  KeyTree out;
  out.tree = local.tree.relabel(sub.to_parent, universe);
  out.k0 = local.k0;
  out.k1 = local.k1;
  out.k2 = local.k2;
  out.t1 = local.t1;
  out.t2 = local.t2;
  out.x = sub.lift(local.x, universe);
  out.w = sub.lift(local.w, universe);
  out.u2 = sub.lift(local.u2, universe);
  out.u2_exhaustive = local.u2_exhaustive;
  out.log = local.log;
  return out;
}

void append(CheckLog& into, const CheckLog& from) {
  for (const auto& c : from.checks()) {
    if (c.at_least) {
      into.at_least(c.stage, c.name, c.value, c.bound);
    } else {
      into.at_most(c.stage, c.name, c.value, c.bound);
    }
  }
}

}  // namespace

Thm1Trace build_thm1_trace(const Graph& g, double alpha, const PipelineConstants& consts) {
  if (!(alpha > 0.0) || alpha > 1.0) throw Error(ErrorKind::invalid_input, "alpha must lie in (0, 1]");
  const int n = g.order();
  if (n < 4) throw Error(ErrorKind::invalid_input, "graph needs at least 4 vertices");
  if (practical(consts) && (consts.delta < 2 || consts.mu <= 0 || consts.a <= 0 || consts.c2 <= 0)) {
    throw Error(ErrorKind::invalid_input, "practical constants must be supplied explicitly");
  }

  Thm1Trace tr;
  tr.alpha = alpha;
  tr.n = n;
  tr.key_constants = practical(consts) ? consts : paper_constants(alpha / 2.0);
  auto& log = tr.log;
  const double ln_n = std::log(static_cast<double>(n));

  // Skeleton.
  if (!is_connected(g)) throw StageFailure("skeleton", "graph is disconnected");
  tr.skeleton_size = std::max(1, ceil_tol(consts.skeleton_fraction * n));
  BfsOptions opt;
  opt.stop_size = tr.skeleton_size;
  opt.stop_mode = StopMode::exact;
  RootedTree skeleton = bfs_tree(g, 0, opt);
  log.at_most("skeleton", "levels", skeleton.level_count(), consts.c0 * ln_n);

  PruneOptions po;
  po.force = practical(consts);
  const int half = (n + 1) / 2;
  const PruneResult u1 = staged_prune(
      "skeleton", [&] { return prune_to_expander(g, skeleton.vertex_set(), half, alpha, po); });
  tr.u1 = u1.survivors;
  log.at_least("skeleton", "|U1|", tr.u1.size(), (1.0 - 3.0 * alpha / 16.0) * n);
  tr.z = (skeleton.vertex_set() | tr.u1).complement();

  // Absorb Z-neighbours of T while there are many of them.
  {
    const int threshold = std::max(1, ceil_tol(consts.absorb_fraction * n));
    RootedTree::Builder b(skeleton);
    VertexSet tset = skeleton.vertex_set();
    for (;;) {
      const VertexSet fresh = neighborhood(g, tset) & tr.z;
      if (fresh.empty() || fresh.size() < threshold) break;
      for (Vertex v : fresh) b.attach(v, min_neighbor_in(g, v, tset));
      tset |= fresh;
      tr.z -= fresh;
      ++tr.absorb_rounds;
    }
    tr.t = std::move(b).build();
    log.at_most("absorb", "|N(T) in Z|", (neighborhood(g, tset) & tr.z).size(), consts.absorb_fraction * n);
  }
  const VertexSet tset = tr.t.vertex_set();

  tr.x0 = neighborhood(g, tset) & tr.u1;
  log.at_least("x0", "|X0|", tr.x0.size(), std::pow(alpha, 3) * n / 32.0);
  if (tr.x0.size() < 2) throw StageFailure("x0", "T has " + std::to_string(tr.x0.size()) + " neighbours in U1");
  tr.y = tr.x0.min();
  tr.x1 = tr.x0;
  tr.x1.erase(tr.y);

  // Key tree inside G1 = G[U1].
  const InducedSubgraph g1 = induced_subgraph(g, tr.u1);
  const double key_alpha = alpha / 2.0;
  tr.key = lift_key(key_tree(g1.graph, g1.from_parent[tr.y], key_alpha, tr.key_constants), g1, n);
  append(log, tr.key.log);
  const RootedTree& tp = tr.key.tree;
  const PipelineConstants& kc = tr.key_constants;
  const int n1 = tr.u1.size();
  const int k1 = tr.key.k1;
  const int k2 = tr.key.k2;

  // Disjoint X1 - U2 paths; members of both are trivial paths.
  {
    const VertexSet both = tr.x1 & tr.key.u2;
    const VertexSet from = tr.x1 - both;
    const VertexSet to = tr.key.u2 - both;
    tr.q_family.sources = VertexSet(n);
    tr.q_family.targets = VertexSet(n);
    for (Vertex v : both) {
      tr.q_family.paths.push_back(Path{{v}});
      tr.q_family.sources.insert(v);
      tr.q_family.targets.insert(v);
    }
    if (!from.empty() && !to.empty()) {
      const InducedSubgraph h = induced_subgraph(g, tr.u1 - both);
      const PathFamily f = disjoint_paths(h.graph, h.restrict(from), h.restrict(to));
      for (const Path& p : f.paths) {
        Path q{h.lift(p.vertices)};
        if (!tr.x1.contains(q.front())) std::reverse(q.vertices.begin(), q.vertices.end());
        tr.q_family.sources.insert(q.front());
        tr.q_family.targets.insert(q.back());
        tr.q_family.paths.push_back(std::move(q));
      }
    }
    log.at_least("paths", "|Q|", tr.q_family.paths.size(), std::pow(alpha, 4) * n / 100.0);
  }

  std::map<Vertex, const Path*> q_of;
  tr.x2 = VertexSet(n);
  for (const Path& p : tr.q_family.paths) {
    if (static_cast<double>(p.vertices.size()) <= consts.mu + kTolerance) {
      tr.x2.insert(p.front());
      q_of[p.front()] = &p;
    }
  }
  log.at_least("paths", "|X2|", tr.x2.size(), n / consts.mu);
  if (tr.x2.empty()) throw StageFailure("short-paths", "no path of the family has at most mu vertices");

  // b_x, the pigeonhole level B' and x0.
  std::map<Vertex, Vertex> b_of;
  for (Vertex x : tr.x2) {
    Vertex best = -1;
    for (Vertex v : q_of[x]->vertices) {
      if (!tp.contains(v)) continue;
      if (best < 0 || tp.subtree_size(v) > tp.subtree_size(best) ||
          (tp.subtree_size(v) == tp.subtree_size(best) && v < best)) {
        best = v;
      }
    }
    b_of[x] = best;
  }
  {
    std::map<int, int> per_level;
    int in_range = 0;
    for (auto [x, b] : b_of) {
      const int level = tp.depth(b) + 1;
      if (level >= tr.key.k0 && level <= k2) {
        ++per_level[level];
        ++in_range;
      }
    }
    if (per_level.empty()) throw StageFailure("pigeonhole", "no b_x lies in levels [k0, k2]");
    for (auto [level, count] : per_level) {
      if (count > tr.b_count) {
        tr.b_level = level;
        tr.b_count = count;
      }
    }
    log.at_least("pigeonhole", "|B'|", tr.b_count, n / (2.0 * consts.mu * (kc.c1 + kc.c2 + 1.0)));
    log.at_least("pigeonhole", "|B'| (k2-k0+1)", static_cast<double>(tr.b_count) * (k2 - tr.key.k0 + 1), in_range);
  }
  for (auto [x, b] : b_of) {
    if (tp.depth(b) + 1 != tr.b_level) continue;
    if (tr.x0_vertex < 0 || tp.subtree_size(b) < tp.subtree_size(tr.b_x0)) {
      tr.x0_vertex = x;
      tr.b_x0 = b;
    }
  }
  log.at_most("pigeonhole", "|T'_b|", tp.subtree_size(tr.b_x0), static_cast<double>(n1) / tr.b_count);
  const Path& qx0 = *q_of[tr.x0_vertex];

  tr.y_elim = VertexSet(n);
  for (Vertex v : qx0.vertices) {
    if (!tp.contains(v)) continue;
    for (Vertex w : tp.subtree(v)) tr.y_elim.insert(w);
  }
  log.at_most("elimination", "|Y|", tr.y_elim.size(),
              static_cast<double>(qx0.vertices.size()) * tp.subtree_size(tr.b_x0));

  // Good and bad subtrees hanging from L_k1.
  tr.piece_of.assign(static_cast<std::size_t>(n), -1);
  tr.a_good = VertexSet(n);
  tr.a_bad = VertexSet(n);
  std::vector<Vertex> roots(tr.key.level(k1).begin(), tr.key.level(k1).end());
  std::sort(roots.begin(), roots.end());
  std::map<Vertex, std::vector<Vertex>> subtree_of;
  for (Vertex w : roots) {
    auto& sub = subtree_of[w];
    sub = tp.subtree(w);
    bool bad = false;
    for (Vertex v : sub) {
      tr.piece_of[v] = w;
      bad = bad || tr.y_elim.contains(v);
    }
    for (Vertex v : sub) {
      if (tp.depth(v) + 1 <= k2) (bad ? tr.a_bad : tr.a_good).insert(v);
    }
  }
  log.at_most("elimination", "|A_B|", tr.a_bad.size(), kc.c3 * tr.y_elim.size());

  // U3 inside v0's component of G[U2].
  tr.v0 = qx0.back();
  {
    const InducedSubgraph g2 = induced_subgraph(g, tr.key.u2);
    tr.k_component = g2.lift(component_of(g2.graph, g2.from_parent[tr.v0]), n);
  }
  const InducedSubgraph gk = induced_subgraph(g, tr.k_component);
  {
    const int k3 = std::max(1, floor_tol((0.5 - 2.0 * kc.eps) * n1));
    const PruneResult u3 = staged_prune("u3", [&] {
      return prune_to_expander(gk.graph, gk.restrict(tr.a_bad), k3, key_alpha / 2.0, po);
    });
    tr.u3 = gk.lift(u3.survivors, n);
  }
  log.at_least("u3", "|U3|", tr.u3.size(), tr.k_component.size() - 12.0 * kc.c3 * tr.y_elim.size() / alpha);
  if (tr.u3.empty()) throw StageFailure("u3", "pruning emptied the component of v0");
  if (tr.u3.intersects(tr.a_bad)) throw Error(ErrorKind::assembly_violation, "U3 meets a bad subtree");

  tr.d = VertexSet(n);
  std::vector<Vertex> d_roots;
  for (Vertex w : roots) {
    const auto& sub = subtree_of[w];
    if (std::any_of(sub.begin(), sub.end(), [&](Vertex v) { return tr.u3.contains(v); })) {
      d_roots.push_back(w);
      for (Vertex v : sub) tr.d.insert(v);
    }
  }

  // Q': shortest path from v0 to D inside K.
  {
    const Vertex s = gk.from_parent[tr.v0];
    std::vector<Vertex> parent(static_cast<std::size_t>(gk.graph.order()), -1);
    std::vector<Vertex> queue{s};
    parent[s] = s;
    Vertex hit = tr.d.contains(tr.v0) ? s : -1;
    for (std::size_t i = 0; i < queue.size() && hit < 0; ++i) {
      for (Vertex w : gk.graph.neighbors(queue[i])) {
        if (parent[w] >= 0) continue;
        parent[w] = queue[i];
        if (tr.d.contains(gk.to_parent[w])) {
          hit = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (hit < 0) throw StageFailure("connector", "D is unreachable from v0 inside K");
    std::vector<Vertex> rev;
    for (Vertex x = hit; x != s; x = parent[x]) rev.push_back(gk.to_parent[x]);
    rev.push_back(tr.v0);
    tr.q_prime.vertices.assign(rev.rbegin(), rev.rend());
  }
  tr.u0 = tr.q_prime.back();
  tr.w0 = tr.piece_of[tr.u0];

  // Long path through the contracted subtree pieces, then expanded.
  {
    const InducedSubgraph g3 = induced_subgraph(g, tr.u3);
    std::map<Vertex, int> part_index;
    for (Vertex w : d_roots) part_index.emplace(w, static_cast<int>(part_index.size()));
    std::vector<std::vector<Vertex>> parts(part_index.size());
    for (Vertex v = 0; v < g3.graph.order(); ++v) parts[part_index.at(tr.piece_of[g3.to_parent[v]])].push_back(v);
    const Contraction c = contract_partition(g3.graph, parts);
    const Path pp = deepest_dfs_path(c.graph, part_index.at(tr.w0));
    for (int idx : pp.vertices) tr.p_pieces.push_back(d_roots[idx]);

    Vertex cur = tr.u0;
    for (std::size_t i = 0; i < tr.p_pieces.size(); ++i) {
      if (i + 1 == tr.p_pieces.size()) {
        tr.p.vertices.push_back(cur);
        break;
      }
      const Vertex next = tr.p_pieces[i + 1];
      Vertex ba = -1, bb = -1;
      int bd = 0;
      for (Vertex a : subtree_of[tr.p_pieces[i]]) {
        if (!tr.u3.contains(a)) continue;
        for (Vertex b : g.neighbors(a)) {
          if (!tr.u3.contains(b) || tr.piece_of[b] != next) continue;
          const int dist = static_cast<int>(tp.tree_path(cur, a).size());
          if (ba < 0 || dist < bd || (dist == bd && (a < ba || (a == ba && b < bb)))) {
            ba = a;
            bb = b;
            bd = dist;
          }
        }
      }
      if (ba < 0) throw Error(ErrorKind::assembly_violation, "contracted path step has no host edge");
      for (Vertex v : tp.tree_path(cur, ba)) tr.p.vertices.push_back(v);
      cur = bb;
    }
    if (!is_simple_path(g, tr.p.vertices)) throw Error(ErrorKind::assembly_violation, "expanded P is not a path");
    std::map<Vertex, int> per_piece;
    for (Vertex v : tr.p.vertices) {
      if (!tr.d.contains(v)) throw Error(ErrorKind::assembly_violation, "P leaves D");
      ++per_piece[tr.piece_of[v]];
    }
    int most = 0;
    for (auto [w, count] : per_piece) most = std::max(most, count);
    if (per_piece.size() != tr.p_pieces.size() || most > 2 * (k2 - k1) + 1) {
      throw Error(ErrorKind::assembly_violation, "P revisits a subtree or stays too long in one");
    }
    log.at_most("long-path", "max |P in T'_w|", most, 2.0 * kc.c2);
    log.at_least("long-path", "|P|", tr.p.length(), consts.a2 * n);
  }

  // Connector Q: y -> T -> x0 -> Q_x0 -> v0 -> Q' -> u0.
  {
    const Vertex ty = min_neighbor_in(g, tr.y, tset);
    const Vertex tx = min_neighbor_in(g, tr.x0_vertex, tset);
    std::vector<Vertex> q{tr.y};
    for (Vertex v : tr.t.tree_path(ty, tx)) q.push_back(v);
    for (Vertex v : qx0.vertices) q.push_back(v);
    for (std::size_t i = 1; i < tr.q_prime.vertices.size(); ++i) q.push_back(tr.q_prime.vertices[i]);
    if (!is_simple_path(g, q)) throw StageFailure("connector", "Q repeats a vertex");
    tr.q.vertices = std::move(q);
    tr.m = tr.q.length();
    for (Vertex v : tr.q.vertices) {
      if (v != tr.u0 && tr.d.contains(v)) throw Error(ErrorKind::assembly_violation, "Q meets D outside u0");
    }
    log.at_most("connector", "m + k1", tr.m + k1, consts.a1 * ln_n);
  }
  return tr;
}

std::pair<int, int> thm1_target_range(int n, const PipelineConstants& consts) {
  const double ln_n = std::log(static_cast<double>(n));
  return {ceil_tol(consts.a1 * ln_n), floor_tol(consts.a2 * n)};
}

CycleCertificate assemble_cycle(const Graph& g, const Thm1Trace& tr, int ell, const PipelineConstants& consts) {
  const RootedTree& tp = tr.key.tree;
  const int k1 = tr.key.k1;
  const int s = ell - tr.m - k1;
  if (s < 0 || s > tr.p.length()) {
    throw Error(ErrorKind::precondition_failed,
                "ell - m - k1 = " + std::to_string(s) + " outside [0, " + std::to_string(tr.p.length()) + "]");
  }
  const auto& pv = tr.p.vertices;
  const Vertex here = tr.piece_of[pv[s]];
  int j = s + 1;
  while (j < static_cast<int>(pv.size()) && tr.piece_of[pv[j]] == here) ++j;
  if (j == static_cast<int>(pv.size())) {
    throw Error(ErrorKind::target_out_of_range, "P ends before leaving its subtree after " + std::to_string(s) +
                                                    " steps; ell = " + std::to_string(ell) + " is too long");
  }
  const Vertex e = pv[j];
  const int climb = tp.depth(e) - (k1 - 1);
  const auto violation = [&](const std::string& what) {
    return Error(ErrorKind::assembly_violation, what + " for ell = " + std::to_string(ell));
  };
  if (j - s < 1 || j - s > 2 * consts.c2 + 1 + kTolerance) throw violation("subtree exit step count");
  if (climb < 0 || climb > consts.c2 + kTolerance) throw violation("climb to L_k1");

  std::vector<Vertex> c = tr.q.vertices;
  for (int i = 1; i <= j; ++i) c.push_back(pv[i]);
  const auto up = tp.path_to_root(e);  // e, ..., y
  for (std::size_t i = 1; i + 1 < up.size(); ++i) c.push_back(up[i]);
  CycleCertificate cert = validate_cycle(g, c);
  if (cert.length() < ell || cert.length() > ell + consts.a + kTolerance) {
    throw violation("cycle length " + std::to_string(cert.length()) + " outside the window");
  }
  return cert;
}

Thm1Run run_thm1(const Graph& g, double alpha, const PipelineConstants& consts, const std::vector<int>& targets) {
  Thm1Run run{build_thm1_trace(g, alpha, consts), {}};
  const auto [lo, hi] = thm1_target_range(g.order(), consts);
  for (int ell : targets) {
    TargetOutcome out;
    out.ell = ell;
    if (ell < lo || ell > hi) {
      out.error = ErrorKind::target_out_of_range;
      out.message = "ell = " + std::to_string(ell) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    } else {
      try {
        out.cycle = assemble_cycle(g, run.trace, ell, consts);
      } catch (const Error& e) {
        out.error = e.kind();
        out.message = e.what();
      }
    }
    run.outcomes.push_back(std::move(out));
  }
  return run;
}

}  // namespace expcycles
