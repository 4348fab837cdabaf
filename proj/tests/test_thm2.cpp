#include <doctest.h>

#include <set>

#include "expcycles/generators.hpp"
#include "expcycles/thm2.hpp"
#include "oracles.hpp"

using namespace expcycles;

TEST_CASE("reachable_on_path counts steps from the tree") {
  const Graph g = path_graph(6);
  const VertexSet t(6, {0});
  const Path p{{3, 4, 5}};
  CHECK(reachable_on_path(g, t, p, 2).empty());
  CHECK(reachable_on_path(g, t, p, 3).to_vector() == std::vector<Vertex>{3});
  CHECK(reachable_on_path(g, t, Path{{1, 2}}, 1).to_vector() == std::vector<Vertex>{1});

  // Exhaustion: every path vertex in the tree's component is reached.
  const Graph c = cycle_graph(10);
  const Path q{{4, 5, 6}};
  CHECK(reachable_on_path(c, VertexSet(10, {0}), q, 10).to_vector() == std::vector<Vertex>{4, 6});
  CHECK_THROWS_AS(reachable_on_path(c, VertexSet(10, {4}), q, 3), Error);
}

TEST_CASE("minimal_subtree") {
  const Graph star = star_graph(3);
  const RootedTree t = bfs_tree(star, 0);
  const RootedTree m = minimal_subtree(t, VertexSet(4, {1, 2}));
  CHECK(m.root() == 0);
  CHECK(m.size() == 3);
  CHECK(m.tree_path(1, 2) == std::vector<Vertex>{1, 0, 2});
  CHECK_THROWS_AS(minimal_subtree(t, VertexSet(4, {1})), Error);

  // Two leaves in different branches of a path rooted in its middle.
  const RootedTree mid = bfs_tree(path_graph(7), 3);
  const RootedTree j = minimal_subtree(mid, VertexSet(7, {0, 6}));
  CHECK(j.root() == 3);
  CHECK(j.size() == 7);

  const Graph g = random_regular(20, 3, 2);
  const RootedTree bt = bfs_tree(g, 0);
  std::vector<Vertex> leaves;
  for (Vertex v : bt.members()) {
    if (bt.children(v).empty()) leaves.push_back(v);
  }
  REQUIRE(leaves.size() >= 4);
  const VertexSet x1(20, std::vector<Vertex>{leaves[0], leaves[1], leaves[leaves.size() / 2], leaves.back()});
  const RootedTree s = minimal_subtree(bt, x1);
  CHECK(x1.is_subset_of(s.vertex_set()));
  CHECK(s.children(s.root()).size() >= 2);
  for (Vertex v : s.members()) {
    if (s.children(v).empty()) CHECK(x1.contains(v));
    if (v != s.root()) CHECK(s.parent(v) == bt.parent(v));
  }
}

namespace {
void check_trace(const Graph& g, const Thm2Trace& tr) {
  REQUIRE(!tr.cycles.empty());
  std::set<int> lengths;
  for (std::size_t i = 0; i < tr.cycles.size(); ++i) {
    CHECK(oracle::is_cycle(g, tr.cycles[i].vertices()));
    if (i > 0) CHECK(tr.cycles[i].length() > tr.cycles[i - 1].length());
    lengths.insert(tr.cycles[i].length());
  }
  CHECK(lengths.size() == tr.cycles.size());
  CHECK(tr.t3.children(tr.v).size() >= 2);
  CHECK(tr.y.contains(tr.u));
  CHECK(tr.x3.is_subset_of(tr.x2));
}
}  // namespace

TEST_CASE("run_thm2 on a random cubic graph") {
  const Graph g = random_regular(100, 3, 5);
  const double alpha = spectral_alpha(g).value;
  const Thm2Trace tr = run_thm2(g, alpha);
  check_trace(g, tr);
  MESSAGE("random_regular(100,3,5): " << tr.cycles.size() << " cycles, alpha " << alpha);
}

TEST_CASE("run_thm2 on K30 stays inside the spectrum") {
  const Graph g = complete_graph(30);
  const Thm2Trace tr = run_thm2(g, 1.0);
  check_trace(g, tr);
  for (const auto& c : tr.cycles) {
    CHECK(c.length() >= 3);
    CHECK(c.length() <= 30);
  }
}

TEST_CASE("run_thm2 small instances agree with the oracle spectrum") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = random_regular(16, 3, seed);
    const auto lengths = oracle::cycle_lengths(g);
    try {
      const Thm2Trace tr = run_thm2(g, spectral_alpha(g).value);
      check_trace(g, tr);
      for (const auto& c : tr.cycles) CHECK(lengths.count(c.length()) == 1);
    } catch (const StageFailure& e) {
      MESSAGE("seed " << seed << ": " << e.what());
    }
  }
}

TEST_CASE("run_thm2 rejects disconnected graphs at the first stage") {
  const Graph g = disjoint_union(complete_graph(10), complete_graph(10));
  try {
    run_thm2(g, 0.9);
    FAIL("expected a stage failure");
  } catch (const StageFailure& e) {
    CHECK(e.stage() == "initial-bfs");
  }
  CHECK_THROWS_AS(run_thm2(g, 0.0), Error);
}
