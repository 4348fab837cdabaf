#include <doctest.h>

#include "expcycles/generators.hpp"
#include "expcycles/spectrum.hpp"
#include "expcycles/thm3.hpp"
#include "oracles.hpp"

using namespace expcycles;

TEST_CASE("double broom shapes") {
  const TreeShape a = double_broom(2, 1, 1);
  CHECK(a.vertex_count() == 6);
  CHECK(a.leaves1.size() == 2);
  CHECK(a.tree.adjacent(a.root, a.root2));

  const TreeShape b = double_broom(2, 2, 3);
  CHECK(b.vertex_count() == 16);
  CHECK(b.max_degree() == 3);

  const TreeShape c = double_broom(3, 1, 2);
  CHECK(c.vertex_count() == 9);
  CHECK(c.leaves1.size() + c.leaves2.size() == 6);
  CHECK(c.max_degree() == 4);

  for (int k = 1; k <= 4; ++k) {
    for (int t = 0; t <= 3; ++t) {
      for (int p = 1; p <= 4; ++p) {
        const TreeShape s = double_broom(k, t, p);
        int broom = 0;
        for (int i = 0, w = 1; i <= t; ++i, w *= k) broom += w;
        CHECK(s.vertex_count() == 2 * broom + p - 1);
        CHECK(s.tree.edge_count() == static_cast<std::size_t>(s.vertex_count() - 1));
        CHECK(is_connected(s.tree));
        const auto d = bfs_distances(s.tree, std::vector<Vertex>{s.leaves1.front()});
        for (Vertex l : s.leaves2) CHECK(d[l] == 2 * t + p);
      }
    }
  }
  CHECK_THROWS_AS(double_broom(2, 1, 0), Error);
}

TEST_CASE("embed_tree") {
  const TreeShape broom = double_broom(2, 1, 1);
  const auto e = embed_tree(complete_graph(6), broom, 1, 4);
  REQUIRE(e);
  CHECK(VertexSet(6, *e).size() == 6);

  CHECK_FALSE(embed_tree(cycle_graph(5), tree_shape(star_graph(4)), 1, 4));

  const Graph pet = petersen_graph();
  const TreeShape path = tree_shape(path_graph(5));
  const auto q = embed_tree(pet, path, 3, 4);
  REQUIRE(q);
  CHECK(is_simple_path(pet, *q));

  CHECK_THROWS_AS(tree_shape(cycle_graph(4)), Error);
}

TEST_CASE("haxell conditions") {
  // |N(U)| = 20 - |U| meets 2|U| + 5 only up to |U| = 5, so |U| = 6 fails.
  const auto k20 = haxell_conditions(complete_graph(20), {2, 3, 5});
  CHECK_FALSE(k20.holds);
  CHECK(k20.condition == 2);
  CHECK(k20.witness->size() == 6);
  CHECK_FALSE(oracle::haxell(complete_graph(20), 2, 3, 5));
  CHECK(haxell_conditions(complete_graph(20), {2, 3, 2}).holds);
  CHECK_FALSE(haxell_conditions(complete_graph(20), {2, 3, 3}).holds);

  const auto c8 = haxell_conditions(cycle_graph(8), {2, 2, 2});
  CHECK_FALSE(c8.holds);
  CHECK(c8.condition == 1);
  CHECK(c8.witness->size() == 1);

  for (std::uint64_t seed = 9; seed <= 12; ++seed) {
    const Graph g = binomial_random(20, 0.5, seed);
    CHECK(haxell_conditions(g, {3, 2, 4}).holds == oracle::haxell(g, 3, 2, 4));
  }
  CHECK_THROWS_AS(haxell_conditions(complete_graph(21), {1, 1, 1}), Error);
  const auto sampled = haxell_conditions(cycle_graph(30), {2, 2, 2}, 20, 8);
  CHECK_FALSE(sampled.exhaustive);
  CHECK_FALSE(sampled.holds);
}

TEST_CASE("claim (2) conditions hold on pruned beta-graphs") {
  // At n <= 20 and beta = 0.05 the beta-graph property forces adjacency of
  // every pair, so the corpus is cliques plus dense graphs that get filtered.
  const double beta = 0.05;
  int tested = 0;
  for (int n = 16; n <= 20; ++n) {
    for (std::uint64_t seed = 0; seed <= 3; ++seed) {
      const Graph g = seed == 0 ? complete_graph(n) : binomial_random(n, 0.97, seed);
      if (!is_beta_graph(g, beta).holds) continue;
      const PruneResult pr = prune_beta(g, beta);
      const auto h = induced_subgraph(g, pr.survivors);
      const Thm3Params params = thm3_params(beta, n);
      for (int ell = 2 * params.r + 1; ell <= params.theorem_hi; ++ell) {
        const HaxellTriple t = claim2_triple(params, ell);
        CHECK(haxell_conditions(h.graph, t).holds);
      }
      ++tested;
    }
  }
  CHECK(tested >= 5);
}

TEST_CASE("thm3 parameters") {
  const Thm3Params p = thm3_params(0.1, 60);
  CHECK(p.k == 2);
  CHECK(p.t == 3);
  CHECK(p.r == 3);
  CHECK(p.b2 == doctest::Approx(1.4));
  CHECK(p.theorem_lo == 45);
  CHECK(p.theorem_hi == -24);
  const Thm3Params q = thm3_params(0.01, 1000);
  CHECK(q.k == 25);
  CHECK(q.t == 1);
  CHECK(q.r == 4);
}

TEST_CASE("run_thm3 exact lengths") {
  Thm3Options opt;
  opt.gate = RangeGate::structural;
  const Graph k20 = complete_graph(20);
  const Thm3Result r = run_thm3(k20, 0.05, 7, opt);
  CHECK(r.cycle.length() == 7);
  CHECK(oracle::is_cycle(k20, r.cycle.vertices()));

  const Graph g = binomial_random(60, 0.5, 7);
  for (int ell : {8, 12, 20, 30}) {
    const Thm3Result s = run_thm3(g, 0.1, ell, opt);
    CHECK(s.cycle.length() == ell);
    CHECK(oracle::is_cycle(g, s.cycle.vertices()));
    CHECK(s.variant == BroomVariant::binary);
  }
  CHECK_THROWS_AS(run_thm3(g, 0.1, 12), Error);  // theorem window is empty here
  CHECK_THROWS_AS(run_thm3(g, 0.1, 7, opt), Error);

  const Graph two = disjoint_union(complete_graph(30), complete_graph(30));
  try {
    run_thm3(two, 0.1, 12, opt);
    FAIL("expected a refutation");
  } catch (const BetaGraphRefuted& e) {
    REQUIRE(e.witness());
    CHECK(e.witness()->a.size() >= 6);
    for (Vertex a : e.witness()->a) {
      for (Vertex b : e.witness()->b) CHECK_FALSE(two.adjacent(a, b));
    }
  }
}
