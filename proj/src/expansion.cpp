#include "expcycles/expansion.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "expcycles/numeric.hpp"
#include "expcycles/rng.hpp"

namespace expcycles {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> out(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) out[v] |= Mask{1} << w;
  }
  return out;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

VertexSet mask_to_set(Mask m, int universe) {
  VertexSet s(universe);
  while (m) {
    s.insert(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

// Visits every s-subset of [0, n) in lexicographic order, carrying the subset
// mask and the union of its neighbor masks. `visit(u, nbr)` returns true to stop.
template <class Visit>
bool for_each_subset(const std::vector<Mask>& nbr, int n, int s, Visit&& visit) {
  struct Frame {
    int next;
    Mask u;
    Mask nb;
  };
  if (s == 0 || s > n) return false;
  std::vector<Frame> stack;
  stack.reserve(static_cast<std::size_t>(s) + 1);
  stack.push_back({0, 0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const int depth = static_cast<int>(stack.size()) - 1;
    // Leave room for the remaining s - depth - 1 members.
    if (f.next > n - (s - depth)) {
      stack.pop_back();
      continue;
    }
    const int v = f.next++;
    const Mask u = f.u | (Mask{1} << v);
    const Mask nb = f.nb | nbr[v];
    if (depth + 1 == s) {
      if (visit(u, nb)) return true;
    } else {
      stack.push_back({v + 1, u, nb});
    }
  }
  return false;
}

double subset_count(int n, int max_size) {
  double total = 0.0;
  double c = 1.0;
  for (int s = 1; s <= max_size; ++s) {
    c = c * (n - s + 1) / s;
    total += c;
  }
  return total;
}

void check_exhaustive_size(const Graph& g, int cutoff, const char* what) {
  if (g.order() > std::min(cutoff, 64)) {
    throw Error(ErrorKind::too_large, std::string(what) + ": n=" + std::to_string(g.order()) +
                                          " exceeds exhaustive cutoff " + std::to_string(std::min(cutoff, 64)));
  }
}

// Smallest-first violator of |N(A)| < ratio |A| with |A| <= max_size in h.
std::optional<VertexSet> exhaustive_violator(const Graph& h, int max_size, double ratio) {
  const int n = h.order();
  const auto nbr = neighbor_masks(h);
  for (int s = 1; s <= std::min(max_size, n); ++s) {
    Mask found = 0;
    const double limit = ratio * s - kTolerance;
    for_each_subset(nbr, n, s, [&](Mask u, Mask nb) {
      if (std::popcount(nb & ~u) < limit) {
        found = u;
        return true;
      }
      return false;
    });
    if (found) return mask_to_set(found, n);
  }
  return std::nullopt;
}

// Violator search in h = g[alive]; returns the violator in h's local ids.
std::optional<VertexSet> find_violator(const Graph& h, int max_size, double ratio, const ViolatorSearch& search,
                                       bool& exhaustive) {
  if (h.order() == 0 || max_size < 1) return std::nullopt;
  if (h.order() <= 64 && subset_count(h.order(), std::min(max_size, h.order())) <= static_cast<double>(search.budget)) {
    return exhaustive_violator(h, max_size, ratio);
  }
  exhaustive = false;
  return refute_expansion(h, ratio, max_size, search.refuter_trials, search.seed);
}

PruneResult run_deletion(const Graph& g, VertexSet alive, int max_size, double ratio, const ViolatorSearch& search) {
  PruneResult result{alive, {}, true};
  while (!result.survivors.empty()) {
    auto sub = induced_subgraph(g, result.survivors);
    auto violator = find_violator(sub.graph, max_size, ratio, search, result.exhaustive);
    if (!violator) break;
    VertexSet removed = sub.lift(*violator, g.order());
    result.survivors -= removed;
    result.deleted.push_back(std::move(removed));
  }
  return result;
}

VertexSet first_members(const VertexSet& s, int count) {
  VertexSet out(s.universe());
  for (Vertex v : s) {
    if (out.size() >= count) break;
    out.insert(v);
  }
  return out;
}

}  // namespace

ExpansionCertificate exact_expansion(const Graph& g, int k, int cutoff) {
  const int n = g.order();
  if (n < 1) throw Error(ErrorKind::invalid_input, "exact_expansion on the empty graph");
  if (k < 1 || k > n) throw Error(ErrorKind::invalid_input, "exact_expansion needs 1 <= k <= n");
  check_exhaustive_size(g, cutoff, "exact_expansion");

  const auto nbr = neighbor_masks(g);
  std::int64_t best_num = 1;
  std::int64_t best_den = 0;  // infinity
  Mask best = 0;
  for (int s = 1; s <= k && !(best_den > 0 && best_num == 0); ++s) {
    for_each_subset(nbr, n, s, [&](Mask u, Mask nb) {
      const std::int64_t boundary = std::popcount(nb & ~u);
      if (best_den == 0 || boundary * best_den < best_num * s) {
        best_num = boundary;
        best_den = s;
        best = u;
        if (boundary == 0) return true;
      }
      return false;
    });
  }
  ExpansionCertificate cert;
  cert.kind = CertificateKind::exact;
  cert.exact_value = Rational(best_num, best_den);
  cert.value = cert.exact_value->to_double();
  cert.k = k;
  cert.witness = mask_to_set(best, n);
  return cert;
}

ExpansionCertificate spectral_alpha(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error(ErrorKind::invalid_input, "spectral_alpha needs at least 2 vertices");
  const int d = g.degree(0);
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) != d) throw Error(ErrorKind::invalid_input, "spectral_alpha: graph is not regular");
  }
  if (d == 0) throw Error(ErrorKind::invalid_input, "spectral_alpha: graph has no edges");

  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    adj(u, v) = 1.0;
    adj(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::invalid_input, "eigensolver did not converge");
  const auto& ev = solver.eigenvalues();  // ascending, ev[n-1] = d
  double lambda = std::max(std::abs(ev[0]), std::abs(ev[n - 2]));
  // Integral spectra (complete graphs, Petersen, ...) come out within 1e-9 of
  // an integer; snap so the certificate reports the exact ratio.
  if (std::abs(lambda - std::round(lambda)) < kTolerance) lambda = std::round(lambda);

  ExpansionCertificate cert;
  cert.kind = CertificateKind::spectral;
  cert.lambda = lambda;
  cert.value = std::max(0.0, (d - lambda) / (2.0 * d));
  cert.k = (n + 1) / 2;
  return cert;
}

std::optional<VertexSet> refute_expansion(const Graph& g, double alpha, int k, int trials, std::uint64_t seed) {
  const int n = g.order();
  if (trials < 1) throw Error(ErrorKind::invalid_input, "refute_expansion needs trials >= 1");
  if (n == 0 || k < 1) return std::nullopt;
  k = std::min(k, n);

  Rng rng(seed);
  std::vector<char> in_u(static_cast<std::size_t>(n), 0);
  std::vector<int> touch(static_cast<std::size_t>(n), 0);  // U-neighbors of each vertex
  std::vector<Vertex> order;
  std::vector<Vertex> frontier;
  std::vector<Vertex> ties;

  std::optional<VertexSet> best;
  double best_ratio = std::numeric_limits<double>::infinity();
  int best_size = 0;

  const auto boundary_of = [&](const std::vector<char>& member) {
    int count = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (member[v]) continue;
      for (Vertex w : g.neighbors(v)) {
        if (member[w]) {
          ++count;
          break;
        }
      }
    }
    return count;
  };
  const auto offer = [&](const std::vector<Vertex>& members, int boundary) {
    const int s = static_cast<int>(members.size());
    if (!(boundary < alpha * s - kTolerance)) return;
    const double ratio = static_cast<double>(boundary) / s;
    if (ratio < best_ratio - kTolerance || (std::abs(ratio - best_ratio) <= kTolerance && s < best_size)) {
      best_ratio = ratio;
      best_size = s;
      best = VertexSet(n, std::span<const Vertex>(members));
    }
  };

  for (int trial = 0; trial < trials; ++trial) {
    std::fill(in_u.begin(), in_u.end(), 0);
    std::fill(touch.begin(), touch.end(), 0);
    order.clear();
    frontier.clear();

    int boundary = 0;
    const auto add = [&](Vertex v) {
      if (touch[v] > 0) --boundary;
      in_u[v] = 1;
      order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!in_u[w] && touch[w]++ == 0) {
          ++boundary;
          frontier.push_back(w);
        }
      }
    };

    add(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
    int best_prefix = 1;
    double prefix_ratio = static_cast<double>(boundary);
    offer(order, boundary);

    while (static_cast<int>(order.size()) < k) {
      std::erase_if(frontier, [&](Vertex w) { return in_u[w] || touch[w] == 0; });
      if (frontier.empty()) break;
      int best_delta = std::numeric_limits<int>::max();
      ties.clear();
      for (Vertex w : frontier) {
        int delta = -1;
        for (Vertex x : g.neighbors(w)) {
          if (!in_u[x] && touch[x] == 0) ++delta;
        }
        if (delta < best_delta) {
          best_delta = delta;
          ties.clear();
        }
        if (delta == best_delta) ties.push_back(w);
      }
      add(ties[rng.below(ties.size())]);
      const double ratio = static_cast<double>(boundary) / static_cast<double>(order.size());
      if (ratio < prefix_ratio) {
        prefix_ratio = ratio;
        best_prefix = static_cast<int>(order.size());
      }
      offer(order, boundary);
    }

    // Local swaps on the best prefix: exchange a member for a boundary vertex
    // while that shrinks the boundary.
    if (best_prefix <= 32) {
      std::vector<char> member(static_cast<std::size_t>(n), 0);
      std::vector<Vertex> set(order.begin(), order.begin() + best_prefix);
      for (Vertex v : set) member[v] = 1;
      int current = boundary_of(member);
      for (int round = 0; round < 8; ++round) {
        bool improved = false;
        std::vector<Vertex> outside;
        for (Vertex v : set) {
          for (Vertex w : g.neighbors(v)) {
            if (!member[w]) outside.push_back(w);
          }
        }
        std::sort(outside.begin(), outside.end());
        outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
        for (std::size_t i = 0; i < set.size() && !improved; ++i) {
          for (Vertex w : outside) {
            member[set[i]] = 0;
            member[w] = 1;
            const int b = boundary_of(member);
            if (b < current) {
              current = b;
              set[i] = w;
              improved = true;
              break;
            }
            member[w] = 0;
            member[set[i]] = 1;
          }
        }
        if (!improved) break;
      }
      offer(set, current);
    }
  }
  return best;
}

ExpansionCertificate refuted_certificate(const Graph& g, const VertexSet& witness, int k) {
  require_valid(g, witness);
  if (witness.empty()) throw Error(ErrorKind::invalid_input, "refutation witness is empty");
  ExpansionCertificate cert;
  cert.kind = CertificateKind::refuted;
  cert.exact_value = Rational(neighborhood(g, witness).size(), witness.size());
  cert.value = cert.exact_value->to_double();
  cert.k = k;
  cert.witness = witness;
  return cert;
}

PruneResult prune_to_expander(const Graph& g, const VertexSet& v0, int k, double alpha, const PruneOptions& options) {
  require_valid(g, v0);
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorKind::invalid_input, "alpha must lie in (0, 1]");
  if (k < 1) throw Error(ErrorKind::invalid_input, "k must be positive");
  const double bound = alpha * alpha * k / 8.0;
  if (!options.force && v0.size() > bound + kTolerance) {
    throw Error(ErrorKind::precondition_failed, "prune_to_expander: |V0|=" + std::to_string(v0.size()) +
                                                    " exceeds alpha^2 k/8=" + std::to_string(bound));
  }
  return run_deletion(g, v0.complement(), k, alpha / 2.0, options.search);
}

PruneResult prune_interior(const Graph& g, const VertexSet& w, double alpha, double eps, const PruneOptions& options) {
  require_valid(g, w);
  const int n = g.order();
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorKind::invalid_input, "alpha must lie in (0, 1]");
  if (!options.force) {
    if (!(eps > 0.0 && eps < 0.25)) throw Error(ErrorKind::precondition_failed, "prune_interior: need 0 < eps < 1/4");
    if (!(2 * w.size() > n)) throw Error(ErrorKind::precondition_failed, "prune_interior: need |W| > n/2");
    const int boundary = neighborhood(g, w).size();
    if (boundary > alpha * eps * n + kTolerance) {
      throw Error(ErrorKind::precondition_failed, "prune_interior: |N(W)|=" + std::to_string(boundary) +
                                                      " exceeds alpha eps n=" + std::to_string(alpha * eps * n));
    }
  }
  const int max_size = floor_tol((0.5 - 2.0 * eps) * n);
  return run_deletion(g, w, max_size, alpha / 2.0, options.search);
}

PruneResult prune_beta(const Graph& g, double beta, const PruneOptions& options) {
  const int n = g.order();
  if (!(beta > 0.0 && beta < 1.0 / 3.0)) throw Error(ErrorKind::invalid_input, "prune_beta needs 0 < beta < 1/3");
  const double ratio = (1.0 - 3.0 * beta) / (2.0 * beta);
  const int max_size = floor_tol(beta * n);
  const int pair_size = std::max(1, ceil_tol(beta * n));

  PruneResult result{VertexSet::full(n), {}, true};
  VertexSet removed_total(n);
  const auto check_refuted = [&] {
    if (removed_total.size() < beta * n - kTolerance) return;
    const VertexSet rest = (removed_total | neighborhood(g, removed_total)).complement();
    std::optional<SetPair> pair;
    if (removed_total.size() >= pair_size && rest.size() >= pair_size) {
      pair = SetPair{first_members(removed_total, pair_size), first_members(rest, pair_size)};
    }
    throw BetaGraphRefuted("deleted " + std::to_string(removed_total.size()) + " vertices, at least beta n",
                           removed_total, std::move(pair));
  };

  while (!result.survivors.empty() && max_size >= 1) {
    auto sub = induced_subgraph(g, result.survivors);
    auto violator = find_violator(sub.graph, max_size, ratio, options.search, result.exhaustive);
    if (!violator) break;
    VertexSet removed = sub.lift(*violator, n);
    result.survivors -= removed;
    removed_total |= removed;
    result.deleted.push_back(std::move(removed));
    check_refuted();
  }

  // The survivor of a beta-graph cannot split into two pieces of size
  // >= beta n: there would be no edge between them.
  {
    auto sub = induced_subgraph(g, result.survivors);
    int count = 0;
    const auto comp = connected_components(sub.graph, &count);
    std::vector<int> sizes(static_cast<std::size_t>(count), 0);
    for (int c : comp) ++sizes[c];
    for (int c = 0; c < count; ++c) {
      if (sizes[c] >= pair_size && result.survivors.size() - sizes[c] >= pair_size) {
        VertexSet inside(n);
        for (Vertex v = 0; v < sub.graph.order(); ++v) {
          if (comp[v] == c) inside.insert(sub.to_parent[v]);
        }
        const VertexSet outside = result.survivors - inside;
        throw BetaGraphRefuted("survivor splits into disconnected pieces of size >= beta n", removed_total,
                               SetPair{first_members(inside, pair_size), first_members(outside, pair_size)});
      }
    }
  }
  if (result.survivors.size() < (1.0 - beta) * n - kTolerance) {
    throw BetaGraphRefuted("survivor smaller than (1 - beta) n", removed_total, std::nullopt);
  }
  return result;
}

BetaCheck is_beta_graph(const Graph& g, double beta, int cutoff, int sample_trials, std::uint64_t seed) {
  const int n = g.order();
  if (!(beta > 0.0)) throw Error(ErrorKind::invalid_input, "beta must be positive");
  const int s = std::max(1, ceil_tol(beta * n));
  BetaCheck result;
  if (2 * s > n) return result;  // no two disjoint s-sets exist

  if (n <= std::min(cutoff, 64)) {
    const auto nbr = neighbor_masks(g);
    const Mask all = full_mask(n);
    Mask wa = 0;
    Mask wb = 0;
    for_each_subset(nbr, n, s, [&](Mask u, Mask nb) {
      Mask rest = all & ~(u | nb);
      if (std::popcount(rest) >= s) {
        wa = u;
        for (int i = 0; i < s; ++i) {
          const Mask low = rest & (~rest + 1);
          wb |= low;
          rest &= rest - 1;
        }
        return true;
      }
      return false;
    });
    if (wa) {
      result.holds = false;
      result.witness = SetPair{mask_to_set(wa, n), mask_to_set(wb, n)};
    }
    return result;
  }
  if (sample_trials <= 0) {
    throw Error(ErrorKind::too_large, "is_beta_graph: n=" + std::to_string(n) + " exceeds exhaustive cutoff");
  }

  // Sampling: grow a connected-first set of size s and test its non-neighbors.
  result.exhaustive = false;
  Rng rng(seed);
  for (int trial = 0; trial < sample_trials; ++trial) {
    VertexSet a(n);
    std::vector<Vertex> frontier{static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)))};
    while (a.size() < s) {
      std::erase_if(frontier, [&](Vertex v) { return a.contains(v); });
      Vertex next;
      if (frontier.empty()) {
        do {
          next = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        } while (a.contains(next));
      } else {
        next = frontier[rng.below(frontier.size())];
      }
      a.insert(next);
      for (Vertex w : g.neighbors(next)) frontier.push_back(w);
    }
    const VertexSet rest = (a | neighborhood(g, a)).complement();
    if (rest.size() >= s) {
      result.holds = false;
      result.witness = SetPair{a, first_members(rest, s)};
      return result;
    }
  }
  return result;
}

namespace {

// Dinic max-flow over an arc list; arcs added in pairs (forward, reverse).
class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_arc(int from, int to) {
    arcs_.push_back({to, head_[from], 1});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  // Arcs are prepended, so callers add them in reverse of the desired order.
  int max_flow(int s, int t) {
    int total = 0;
    while (build_levels(s, t)) {
      cursor_ = head_;
      while (int pushed = augment(s, t)) total += pushed;
    }
    return total;
  }

  struct Arc {
    int to;
    int next;
    int cap;
  };
  const std::vector<int>& head() const { return head_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  bool build_levels(int s, int t) {
    level_.assign(head_.size(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (int a = head_[x]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int augment(int x, int t) {
    if (x == t) return 1;
    for (int& a = cursor_[x]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[x] + 1 && augment(arc.to, t)) {
        arc.cap -= 1;
        arcs_[a ^ 1].cap += 1;
        return 1;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace

PathFamily disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_valid(g, a);
  require_valid(g, b);
  if (a.empty() || b.empty()) throw Error(ErrorKind::invalid_input, "disjoint_paths needs nonempty endpoint sets");
  if (a.intersects(b)) throw Error(ErrorKind::invalid_input, "disjoint_paths needs disjoint endpoint sets");

  const int n = g.order();
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  const auto in = [](Vertex v) { return 2 * v; };
  const auto out = [](Vertex v) { return 2 * v + 1; };

  UnitFlow flow(2 * n + 2);
  // Reverse insertion so adjacency lists are scanned in ascending order.
  for (Vertex v = n - 1; v >= 0; --v) {
    if (b.contains(v)) {
      flow.add_arc(out(v), sink);
    } else {
      auto nb = g.neighbors(v);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
        if (!a.contains(*it)) flow.add_arc(out(v), in(*it));
      }
    }
    flow.add_arc(in(v), out(v));
  }
  for (Vertex v = n - 1; v >= 0; --v) {
    if (a.contains(v)) flow.add_arc(source, in(v));
  }
  flow.max_flow(source, sink);

  // Forward arcs sit at even indices; saturated ones carry the flow.
  const auto& arcs = flow.arcs();
  const auto& head = flow.head();
  const auto follow = [&](int node) {
    for (int e = head[node]; e >= 0; e = arcs[e].next) {
      if ((e & 1) == 0 && arcs[e].cap == 0) return arcs[e].to;
    }
    return -1;
  };

  PathFamily family{{}, a, b};
  for (Vertex start : a) {
    bool used = false;
    for (int e = head[source]; e >= 0; e = arcs[e].next) {
      if ((e & 1) == 0 && arcs[e].cap == 0 && arcs[e].to == in(start)) used = true;
    }
    if (!used) continue;
    Path p;
    int node = in(start);
    while (node != sink) {
      const Vertex v = node / 2;
      p.vertices.push_back(v);
      const int next = follow(out(v));
      node = next;
    }
    family.paths.push_back(std::move(p));
  }
  return family;
}

Path deepest_dfs_path(const Graph& g, Vertex v) {
  if (!g.valid_vertex(v)) throw Error(ErrorKind::invalid_input, "dfs start out of range");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{v};
  std::vector<std::size_t> next{0};
  seen[v] = 1;
  Path best{stack};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    auto nb = g.neighbors(x);
    std::size_t& i = next.back();
    while (i < nb.size() && seen[nb[i]]) ++i;
    if (i == nb.size()) {
      stack.pop_back();
      next.pop_back();
      continue;
    }
    const Vertex w = nb[i++];
    seen[w] = 1;
    stack.push_back(w);
    next.push_back(0);
    if (stack.size() > best.vertices.size()) best.vertices = stack;
  }
  return best;
}

Path long_path_from(const Graph& g, Vertex v, int k, int ell) {
  if (!g.valid_vertex(v)) throw Error(ErrorKind::invalid_input, "path start out of range");
  const int comp = component_of(g, v).size();
  if (comp < k) {
    throw Error(ErrorKind::component_too_small,
                "component of " + std::to_string(v) + " has " + std::to_string(comp) + " < k vertices");
  }
  Path p = deepest_dfs_path(g, v);
  if (ell >= 0 && p.length() > ell) p.vertices.resize(static_cast<std::size_t>(ell) + 1);
  return p;
}

}  // namespace expcycles
