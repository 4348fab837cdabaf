#include "expcycles/thm3.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "expcycles/numeric.hpp"
#include "expcycles/rng.hpp"

namespace expcycles {

Thm3Params thm3_params(double beta, int n) {
  if (!(beta > 0.0) || beta >= 1.0 / 3.0) throw Error(ErrorKind::invalid_input, "beta must lie in (0, 1/3)");
  if (n < 1) throw Error(ErrorKind::invalid_input, "graph is empty");
  Thm3Params p;
  p.beta = beta;
  p.n = n;
  p.k = floor_tol(1.0 / (4.0 * beta));
  const double bn = beta * n;
  if (bn > 1.0 + kTolerance) {
    if (p.k >= 2) p.t = ceil_tol(std::log(bn) / std::log(static_cast<double>(p.k)));
    p.r = ceil_tol(std::log2(bn));
  }
  p.b1 = 25.0 / std::log2(1.0 / beta);
  p.b2 = 14.0 * beta;
  p.theorem_lo = ceil_tol(p.b1 * std::log2(static_cast<double>(n)));
  p.theorem_hi = floor_tol((1.0 - p.b2) * n);
  p.broad_ceiling = (0.5 - 10.0 * beta) * n;
  return p;
}

TreeShape double_broom(int k, int t, int p) {
  if (k < 1 || t < 0 || p < 1) throw Error(ErrorKind::invalid_input, "double broom needs k >= 1, t >= 0, p >= 1");
  // One broom in heap order: the children of i are k*i + 1, ..., k*i + k.
  std::vector<Edge> broom;
  std::vector<Vertex> last{0};
  int size = 1;
  for (int level = 0; level < t; ++level) {
    std::vector<Vertex> next;
    for (Vertex v : last) {
      for (int c = 0; c < k; ++c) {
        broom.emplace_back(v, size);
        next.push_back(size++);
      }
    }
    last = std::move(next);
  }
  const Vertex root2 = size + p - 1;
  std::vector<Edge> edges;
  for (auto [a, b] : broom) {
    edges.emplace_back(a, b);
    edges.emplace_back(a + root2, b + root2);
  }
  Vertex prev = 0;
  for (int i = 0; i < p - 1; ++i) {
    edges.emplace_back(prev, size + i);
    prev = size + i;
  }
  edges.emplace_back(prev, root2);

  TreeShape s;
  s.tree = Graph::from_edges(2 * size + p - 1, edges);
  s.root = 0;
  s.k = k;
  s.t = t;
  s.p = p;
  s.root2 = root2;
  s.leaves1 = last;
  for (Vertex v : last) s.leaves2.push_back(v + root2);
  return s;
}

TreeShape tree_shape(Graph tree, Vertex root) {
  if (!tree.valid_vertex(root)) throw Error(ErrorKind::invalid_input, "tree root out of range");
  if (static_cast<int>(tree.edge_count()) != tree.order() - 1 || !is_connected(tree)) {
    throw Error(ErrorKind::invalid_input, "shape is not a tree");
  }
  TreeShape s;
  s.tree = std::move(tree);
  s.root = root;
  return s;
}

namespace {

class Embedder {
 public:
  Embedder(const Graph& h, const TreeShape& shape) : h_(h), tree_(shape.tree) {
    const int m = tree_.order();
    parent_.assign(static_cast<std::size_t>(m), -1);
    kids_.assign(static_cast<std::size_t>(m), 0);
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    order_ = {shape.root};
    seen[shape.root] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex w : tree_.neighbors(order_[i])) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent_[w] = order_[i];
        ++kids_[order_[i]];
        order_.push_back(w);
      }
    }
  }

  std::optional<std::vector<Vertex>> run(Rng& rng, long long budget) {
    image_.assign(static_cast<std::size_t>(tree_.order()), -1);
    used_.assign(static_cast<std::size_t>(h_.order()), 0);
    key_.resize(static_cast<std::size_t>(h_.order()));
    for (auto& k : key_) k = rng.next();
    steps_ = 0;
    budget_ = budget;
    if (place(0)) return image_;
    return std::nullopt;
  }

 private:
  int residual(Vertex c) const {
    int r = 0;
    for (Vertex w : h_.neighbors(c)) r += !used_[w];
    return r;
  }

  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    const Vertex x = order_[i];
    std::vector<std::pair<int, Vertex>> cand;
    const auto consider = [&](Vertex c) {
      if (used_[c]) return;
      const int r = residual(c);
      if (r >= kids_[x]) cand.emplace_back(r, c);
    };
    if (parent_[x] < 0) {
      for (Vertex c = 0; c < h_.order(); ++c) consider(c);
    } else {
      for (Vertex c : h_.neighbors(image_[parent_[x]])) consider(c);
    }
    std::sort(cand.begin(), cand.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return key_[a.second] < key_[b.second];
    });
    for (auto [r, c] : cand) {
      if (++steps_ > budget_) return false;
      used_[c] = 1;
      image_[x] = c;
      if (place(i + 1)) return true;
      used_[c] = 0;
      image_[x] = -1;
      if (steps_ > budget_) return false;
    }
    return false;
  }

  const Graph& h_;
  const Graph& tree_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<int> kids_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<std::uint64_t> key_;
  long long steps_ = 0;
  long long budget_ = 0;
};

constexpr long long kEmbedSteps = 50'000;

}  // namespace

std::optional<std::vector<Vertex>> embed_tree(const Graph& h, const TreeShape& shape, std::uint64_t seed,
                                              int retries) {
  if (shape.vertex_count() > h.order()) return std::nullopt;
  if (shape.max_degree() > h.max_degree()) return std::nullopt;
  Embedder e(h, shape);
  for (int attempt = 0; attempt < std::max(1, retries); ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (auto out = e.run(rng, kEmbedSteps)) return out;
  }
  return std::nullopt;
}

HaxellTriple claim1_triple(const Thm3Params& params, int ell) {
  if (params.k < 2) throw Error(ErrorKind::invalid_input, "claim (1) needs k >= 2");
  const double bn = params.beta * params.n;
  HaxellTriple t;
  t.m = floor_tol(bn);
  t.d = params.k + 1;
  t.big_m = ceil_tol(ell + 2.0 * (params.k * bn - 1.0) / (params.k - 1) - 1.0);
  return t;
}

HaxellTriple claim2_triple(const Thm3Params& params, int ell) {
  const double bn = params.beta * params.n;
  HaxellTriple t;
  t.m = floor_tol(bn);
  t.d = 3;
  t.big_m = ceil_tol(ell + 4.0 * bn - 3.0);
  return t;
}

namespace {

int required(const HaxellTriple& t, int size) { return size <= t.m ? t.d * size + 1 : t.d * size + t.big_m; }

}  // namespace

HaxellCheck haxell_conditions(const Graph& h, const HaxellTriple& triple, int cutoff, int sample_trials,
                              std::uint64_t seed) {
  const int n = h.order();
  const int top = std::min(2 * triple.m, n);
  HaxellCheck out;
  if (n <= cutoff && n <= 63) {
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : h.edges()) {
      nb[u] |= std::uint64_t{1} << v;
      nb[v] |= std::uint64_t{1} << u;
    }
    for (int s = 1; s <= top; ++s) {
      // Gosper's hack: all s-subsets in increasing numeric order.
      for (std::uint64_t u = (std::uint64_t{1} << s) - 1; u < (std::uint64_t{1} << n);) {
        std::uint64_t bd = 0;
        for (std::uint64_t m = u; m; m &= m - 1) bd |= nb[std::countr_zero(m)];
        bd &= ~u;
        if (std::popcount(bd) < required(triple, s)) {
          out.holds = false;
          out.condition = s <= triple.m ? 1 : 2;
          VertexSet w(n);
          for (std::uint64_t m = u; m; m &= m - 1) w.insert(std::countr_zero(m));
          out.witness = std::move(w);
          return out;
        }
        const std::uint64_t c = u & -u;
        const std::uint64_t r = u + c;
        u = (((r ^ u) >> 2) / c) | r;
      }
    }
    return out;
  }
  if (sample_trials <= 0) {
    throw Error(ErrorKind::too_large, "exhaustive embedding-condition check limited to " + std::to_string(cutoff) +
                                          " vertices, graph has " + std::to_string(n));
  }
  out.exhaustive = false;
  Rng rng(seed);
  for (int trial = 0; trial < sample_trials; ++trial) {
    VertexSet u(n);
    u.insert(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
    for (int s = 1;; ++s) {
      if (neighborhood(h, u).size() < required(triple, s)) {
        out.holds = false;
        out.condition = s <= triple.m ? 1 : 2;
        out.witness = u;
        return out;
      }
      if (s == top) break;
      // Greedy growth: the boundary vertex keeping N(U) smallest, random ties.
      const VertexSet bd = neighborhood(h, u);
      Vertex best = -1;
      int best_size = 0;
      std::uint64_t best_key = 0;
      for (Vertex w : bd) {
        VertexSet grown = u;
        grown.insert(w);
        const int size = neighborhood(h, grown).size();
        const std::uint64_t key = rng.next();
        if (best < 0 || size < best_size || (size == best_size && key < best_key)) {
          best = w;
          best_size = size;
          best_key = key;
        }
      }
      if (best < 0) break;
      u.insert(best);
    }
  }
  return out;
}

namespace {

std::vector<Vertex> shape_path(const Graph& tree, Vertex a, Vertex b) {
  std::vector<Vertex> parent(static_cast<std::size_t>(tree.order()), -1);
  std::vector<Vertex> queue{a};
  parent[a] = a;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : tree.neighbors(queue[i])) {
      if (parent[w] < 0) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex x = b; x != a; x = parent[x]) path.push_back(x);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Thm3Result run_thm3(const Graph& g, double beta, int ell, const Thm3Options& options) {
  const Thm3Params params = thm3_params(beta, g.order());
  BroomVariant variant;
  if (options.variant) {
    variant = *options.variant;
  } else {
    variant = (params.k >= 2 && ell <= params.broad_ceiling + kTolerance) ? BroomVariant::broad : BroomVariant::binary;
  }
  if (variant == BroomVariant::broad && params.k < 2) {
    throw Error(ErrorKind::invalid_input, "broad variant needs beta <= 1/8");
  }
  const int arity = variant == BroomVariant::broad ? params.k : 2;
  const int depth = variant == BroomVariant::broad ? params.t : params.r;
  const int p = ell - 2 * depth - 1;
  const auto out_of_range = [&](const std::string& why) {
    return Error(ErrorKind::target_out_of_range, "ell = " + std::to_string(ell) + " " + why);
  };
  if (options.gate == RangeGate::theorem && (ell < params.theorem_lo || ell > params.theorem_hi)) {
    throw out_of_range("outside [" + std::to_string(params.theorem_lo) + ", " + std::to_string(params.theorem_hi) +
                       "]");
  }
  if (ell < 3 || p < 1) throw out_of_range("is below " + std::to_string(std::max(3, 2 * depth + 2)));

  const PruneResult pruned = prune_beta(g, beta, options.prune);
  TreeShape shape = double_broom(arity, depth, p);
  if (shape.vertex_count() > pruned.survivors.size()) {
    throw out_of_range("needs a " + std::to_string(shape.vertex_count()) + "-vertex broom but only " +
                       std::to_string(pruned.survivors.size()) + " vertices survive");
  }

  const auto hsub = induced_subgraph(g, pruned.survivors);
  auto local = embed_tree(hsub.graph, shape, options.seed, options.retries);
  if (!local) {
    throw Error(ErrorKind::embedding_failed, "no embedding of the " + std::to_string(shape.vertex_count()) +
                                                 "-vertex broom after " + std::to_string(options.retries) +
                                                 " restarts");
  }
  std::vector<Vertex> image = hsub.lift(*local);
  {
    VertexSet seen(g.order());
    for (Vertex v : image) {
      if (seen.contains(v)) throw Error(ErrorKind::assembly_violation, "embedding is not injective");
      seen.insert(v);
    }
    for (auto [a, b] : shape.tree.edges()) {
      if (!g.adjacent(image[a], image[b])) throw Error(ErrorKind::assembly_violation, "embedding drops a tree edge");
    }
  }

  Vertex la = -1, lb = -1;
  for (Vertex a : shape.leaves1) {
    for (Vertex b : shape.leaves2) {
      if (g.adjacent(image[a], image[b])) {
        la = a;
        lb = b;
        break;
      }
    }
    if (la >= 0) break;
  }
  if (la < 0) {
    VertexSet l1(g.order()), l2(g.order());
    for (Vertex a : shape.leaves1) l1.insert(image[a]);
    for (Vertex b : shape.leaves2) l2.insert(image[b]);
    throw NoClosingEdge("no edge between the two leaf layers", std::move(l1), std::move(l2));
  }

  std::vector<Vertex> cyc;
  for (Vertex x : shape_path(shape.tree, la, lb)) cyc.push_back(image[x]);
  CycleCertificate cert = validate_cycle(g, cyc);
  if (cert.length() != ell) {
    throw Error(ErrorKind::assembly_violation, "closed cycle has length " + std::to_string(cert.length()));
  }
  const Edge closing{std::min(image[la], image[lb]), std::max(image[la], image[lb])};
  return Thm3Result{params,           variant,          ell, pruned.survivors, pruned.exhaustive, std::move(shape),
                    std::move(image), closing,          std::move(cert)};
}

}  // namespace expcycles
