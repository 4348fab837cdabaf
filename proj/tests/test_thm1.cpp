#include <doctest.h>

#include <cmath>

#include "expcycles/generators.hpp"
#include "expcycles/rng.hpp"
#include "expcycles/spectrum.hpp"
#include "expcycles/thm1.hpp"

using namespace expcycles;

TEST_CASE("closed-form constants follow their formulas") {
  struct Row {
    double alpha;
    int delta;
    double mu, a1, a;
  };
  for (const Row r : {Row{1.0, 1600, 200.0, 1030.0, 51.0}, Row{0.5, 51200, 3200.0, 2060.0, 102.0},
                      Row{0.25, 1638400, 51200.0, 4120.0, 204.0}}) {
    const PipelineConstants c = paper_constants(r.alpha);
    CHECK(c.mode == ConstantsMode::paper);
    CHECK(c.delta == r.delta);
    CHECK(c.mu == doctest::Approx(r.mu));
    CHECK(c.a1 == doctest::Approx(r.a1));
    CHECK(c.a1 == doctest::Approx(1000.0 / r.alpha + 2.0 * c.c0));
    CHECK(c.c0 == doctest::Approx(15.0 / r.alpha));
    CHECK(c.c1 == doctest::Approx(201.0 / std::pow(r.alpha, 5)));
    CHECK(c.c2 == doctest::Approx(17.0 / r.alpha));
    CHECK(c.a == doctest::Approx(r.a));
    CHECK(c.log2_c3 == doctest::Approx((c.c2 + 1.0) * std::log2(r.delta)));
    CHECK(c.log2_a2 == doctest::Approx(std::log2(r.alpha / 1000.0) - 2.0 * c.log2_c3));
  }
  CHECK(paper_constants(1.0).c3 == doctest::Approx(std::pow(1600.0, 18)));
  CHECK_THROWS_AS(paper_constants(0.0), Error);
}

TEST_CASE("key tree on K50 honours the cap") {
  PipelineConstants c = practical_constants();
  c.delta = 5;
  const KeyTree kt = key_tree(complete_graph(50), 0, 1.0, c);
  CHECK(kt.tree.size() == 50);
  for (Vertex v : kt.tree.members()) CHECK(kt.tree.tree_degree(v) <= 5);
  CHECK(kt.k0 <= kt.k1);
  CHECK(kt.k1 <= kt.k2);
  CHECK(kt.u2.is_subset_of(kt.w));
}

TEST_CASE("key tree on a random cubic graph") {
  const Graph g = random_regular(200, 3, 1);
  const double alpha = spectral_alpha(g).value;
  const PipelineConstants c = practical_constants();
  const KeyTree kt = key_tree(g, 0, alpha, c);
  for (Vertex v : kt.w) {
    const int level = kt.tree.depth(v) + 1;
    CHECK(level >= kt.k1);
    CHECK(level <= kt.k2);
    CHECK(kt.tree.tree_degree(v) < c.delta);
  }
  CHECK(kt.u2.is_subset_of(kt.w));
  CHECK(kt.k0 == [&] {
    for (int i = 1; i <= kt.tree.level_count(); ++i) {
      if (kt.tree.prefix_size(i) >= c.stage_fraction * 200) return i;
    }
    return -1;
  }());

  // Sampled re-certification: BFS balls and random walks inside G[U2].
  const auto h = induced_subgraph(g, kt.u2);
  const int max_size = static_cast<int>(std::floor((0.5 - 2 * c.eps) * 200));
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet s(h.graph.order());
    Vertex x = static_cast<Vertex>(rng.below(h.graph.order()));
    const int want = 1 + static_cast<int>(rng.below(max_size));
    for (int step = 0; step < 4 * want && s.size() < want; ++step) {
      s.insert(x);
      const auto nb = h.graph.neighbors(x);
      if (nb.empty()) break;
      x = nb[rng.below(nb.size())];
    }
    CHECK(neighborhood(h.graph, s).size() >= alpha / 4.0 * s.size() - 1e-9);
  }
}

TEST_CASE("thm1 trace invariants and target window") {
  const Graph g = random_regular(200, 3, 3);
  const double alpha = spectral_alpha(g).value;
  const PipelineConstants c = practical_constants();
  const Thm1Run run = run_thm1(g, alpha, c, {20, 5, 21});
  const Thm1Trace& tr = run.trace;

  VertexSet q(200, tr.q.vertices), p(200, tr.p.vertices);
  CHECK((q & tr.d).to_vector() == std::vector<Vertex>{tr.u0});
  CHECK((q & p).to_vector() == std::vector<Vertex>{tr.u0});
  CHECK(tr.q.front() == tr.y);
  CHECK(tr.p.front() == tr.u0);
  CHECK(tr.m == tr.q.length());
  CHECK_FALSE(tr.a_good.intersects(tr.a_bad));
  VertexSet cut(200);
  for (Vertex v : tr.key.tree.members()) {
    const int level = tr.key.tree.depth(v) + 1;
    if (level >= tr.key.k1 && level <= tr.key.k2) cut.insert(v);
  }
  CHECK((tr.a_good | tr.a_bad) == cut);
  CHECK(tr.key.u2.is_subset_of(cut));
  CHECK(tr.u3.is_subset_of(tr.a_good));
  CHECK_FALSE(tr.d.intersects(tr.a_bad));

  REQUIRE(run.outcomes.size() == 3);
  REQUIRE(run.outcomes[0].cycle);
  const int len = run.outcomes[0].cycle->length();
  CHECK(len >= 20);
  CHECK(len <= 20 + c.a);
  CHECK(has_cycle_length(g, len).status == SearchStatus::found);
  CHECK(run.outcomes[1].error == ErrorKind::target_out_of_range);
  REQUIRE(run.outcomes[2].cycle);
  CHECK(std::abs(run.outcomes[2].cycle->length() - len) <= c.a + 1);

  CHECK_THROWS_AS(assemble_cycle(g, tr, tr.m + tr.key.k1 - 1, c), Error);

  const Thm1Trace again = build_thm1_trace(g, alpha, c);
  CHECK(again.p == tr.p);
  CHECK(again.q == tr.q);
  CHECK(again.u3 == tr.u3);
}

TEST_CASE("thm1 with closed-form constants fails at the skeleton") {
  const Graph k = complete_graph(100);
  try {
    build_thm1_trace(k, 1.0, paper_constants(1.0));
    FAIL("expected a stage failure");
  } catch (const StageFailure& e) {
    CHECK(e.stage() == "skeleton");
  }
  const Graph g = random_regular(100, 3, 2);
  const double alpha = spectral_alpha(g).value;
  CHECK_THROWS_AS(build_thm1_trace(g, alpha, paper_constants(alpha)), StageFailure);
}
