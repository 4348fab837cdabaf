#include "expcycles/spectrum.hpp"

#include <algorithm>
#include <string>

namespace expcycles {

bool Spectrum::contains(int ell) const { return std::binary_search(lengths.begin(), lengths.end(), ell); }

VertexSet two_core(const Graph& g) {
  const int n = g.order();
  std::vector<int> degree(static_cast<std::size_t>(n));
  VertexSet alive = VertexSet::full(n);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < 2) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    if (!alive.contains(v)) continue;
    alive.erase(v);
    for (Vertex w : g.neighbors(v)) {
      if (alive.contains(w) && --degree[w] < 2) queue.push_back(w);
    }
  }
  return alive;
}

namespace {

// No cycle is longer than the largest connected piece of the 2-core.
int cycle_length_bound(const Graph& g, const VertexSet& core) {
  auto sub = induced_subgraph(g, core);
  int count = 0;
  const auto comp = connected_components(sub.graph, &count);
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (int c : comp) ++sizes[c];
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

struct Enumerator {
  const Graph& g;
  const VertexSet& core;
  long long budget;
  long long nodes = 0;
  bool exhausted = false;
  int needed = 0;  // lengths in [3, bound] still missing
  std::vector<char> found;
  std::map<int, std::vector<Vertex>> witnesses;
  std::vector<char> on_path;
  std::vector<Vertex> path;
  Vertex anchor = 0;

  bool done() const { return exhausted || needed == 0; }

  void extend(Vertex x) {
    if (done()) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    for (Vertex w : g.neighbors(x)) {
      if (w == anchor && path.size() >= 3) {
        const auto len = path.size();
        if (len < found.size() && !found[len]) {
          found[len] = 1;
          --needed;
          witnesses[static_cast<int>(len)] = path;
          if (done()) return;
        }
      }
      if (w <= anchor || on_path[w] || !core.contains(w)) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend(w);
      path.pop_back();
      on_path[w] = 0;
      if (done()) return;
    }
  }
};

}  // namespace

Spectrum cycle_spectrum(const Graph& g, long long budget) {
  const VertexSet core = two_core(g);
  const int bound = cycle_length_bound(g, core);
  Enumerator e{g, core, budget};
  e.found.assign(static_cast<std::size_t>(bound) + 1, 0);
  e.needed = std::max(0, bound - 2);
  e.on_path.assign(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : core) {
    if (e.done()) break;
    e.anchor = v;
    e.on_path[v] = 1;
    e.path = {v};
    e.extend(v);
    e.on_path[v] = 0;
  }
  Spectrum s;
  for (int len = 3; len <= bound; ++len) {
    if (e.found[len]) s.lengths.push_back(len);
  }
  s.complete = !e.exhausted;
  s.budget_used = std::min(e.nodes, budget);
  s.witnesses = std::move(e.witnesses);
  return s;
}

namespace {

struct LengthSearcher {
  const Graph& g;
  const VertexSet& core;
  int ell;
  long long budget;
  long long nodes = 0;
  bool exhausted = false;
  bool success = false;
  std::vector<int> dist;  // to the anchor inside vertices >= anchor
  std::vector<char> on_path;
  std::vector<Vertex> path;
  Vertex anchor = 0;

  void extend(Vertex x) {
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    const int have = static_cast<int>(path.size());
    if (have == ell) {
      success = g.adjacent(x, anchor);
      return;
    }
    for (Vertex w : g.neighbors(x)) {
      if (w <= anchor || on_path[w] || !core.contains(w)) continue;
      // After adding w, ell - have edges remain, one of them closing.
      if (dist[w] < 0 || dist[w] > ell - have) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend(w);
      if (success || exhausted) return;
      path.pop_back();
      on_path[w] = 0;
    }
  }
};

}  // namespace

LengthSearch has_cycle_length(const Graph& g, int ell, long long budget) {
  if (ell < 3) throw Error(ErrorKind::invalid_input, "cycle length must be at least 3");
  const VertexSet core = two_core(g);
  LengthSearcher s{g, core, ell, budget};
  s.on_path.assign(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : core) {
    // At least ell vertices >= v must remain for v to anchor an ell-cycle.
    s.anchor = v;
    s.dist.assign(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue{v};
    s.dist[v] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : g.neighbors(queue[i])) {
        if (w > v && core.contains(w) && s.dist[w] < 0) {
          s.dist[w] = s.dist[queue[i]] + 1;
          queue.push_back(w);
        }
      }
    }
    if (static_cast<int>(queue.size()) < ell) continue;
    s.on_path[v] = 1;
    s.path = {v};
    s.extend(v);
    if (s.success) {
      LengthSearch out;
      out.status = SearchStatus::found;
      out.cycle = validate_cycle(g, s.path);
      out.nodes = s.nodes;
      return out;
    }
    s.on_path[v] = 0;
    if (s.exhausted) break;
  }
  LengthSearch out;
  out.status = s.exhausted ? SearchStatus::unknown : SearchStatus::absent;
  out.nodes = std::min(s.nodes, budget);
  return out;
}

int max_gap(const Spectrum& s, int lo, int hi) {
  std::vector<int> inside;
  for (int len : s.lengths) {
    if (len >= lo && len <= hi) inside.push_back(len);
  }
  if (inside.size() < 2) {
    throw Error(ErrorKind::insufficient_data,
                "fewer than two cycle lengths in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  int gap = 0;
  for (std::size_t i = 1; i < inside.size(); ++i) gap = std::max(gap, inside[i] - inside[i - 1]);
  return gap;
}

}  // namespace expcycles
