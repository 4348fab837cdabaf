#include <doctest.h>

#include "expcycles/generators.hpp"
#include "expcycles/spectrum.hpp"
#include "oracles.hpp"

using namespace expcycles;

TEST_CASE("cycle spectrum of small families") {
  auto k4 = cycle_spectrum(complete_graph(4));
  CHECK(k4.lengths == std::vector<int>{3, 4});
  CHECK(k4.complete);
  CHECK(cycle_spectrum(complete_bipartite(2, 3)).lengths == std::vector<int>{4});
  auto pet = cycle_spectrum(petersen_graph());
  CHECK(pet.lengths == std::vector<int>{5, 6, 8, 9});
  CHECK(pet.complete);
  for (const auto& [len, cyc] : pet.witnesses) CHECK(validate_cycle(petersen_graph(), cyc).length() == len);
  CHECK(cycle_spectrum(path_graph(5)).lengths.empty());
}

TEST_CASE("budget exhaustion is flagged") {
  auto s = cycle_spectrum(petersen_graph(), 10);
  CHECK_FALSE(s.complete);
  auto l = has_cycle_length(petersen_graph(), 9, 5);
  CHECK(l.status == SearchStatus::unknown);
}

TEST_CASE("per-length search") {
  CHECK(has_cycle_length(cycle_graph(6), 6).status == SearchStatus::found);
  CHECK(has_cycle_length(cycle_graph(6), 5).status == SearchStatus::absent);
  CHECK(has_cycle_length(petersen_graph(), 7).status == SearchStatus::absent);
  auto nine = has_cycle_length(petersen_graph(), 9);
  REQUIRE(nine.cycle);
  CHECK(nine.cycle->length() == 9);
  CHECK_THROWS_AS(has_cycle_length(cycle_graph(6), 2), Error);
}

TEST_CASE("spectrum matches the oracle and the per-length search") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = binomial_random(10, 0.35, seed);
    auto s = cycle_spectrum(g);
    REQUIRE(s.complete);
    const auto truth = oracle::cycle_lengths(g);
    CHECK(std::set<int>(s.lengths.begin(), s.lengths.end()) == truth);
    for (int ell = 3; ell <= 10; ++ell) {
      const bool found = has_cycle_length(g, ell).status == SearchStatus::found;
      CHECK(found == s.contains(ell));
    }
  }
}

TEST_CASE("max gap") {
  Spectrum s;
  s.lengths = {3, 4, 5, 6, 7, 8, 9, 10};
  CHECK(max_gap(s, 3, 10) == 1);
  const Graph g = disjoint_union(disjoint_union(cycle_graph(6), cycle_graph(12)), cycle_graph(18));
  auto arith = cycle_spectrum(g);
  CHECK(arith.lengths == std::vector<int>{6, 12, 18});
  CHECK(max_gap(arith, 6, 18) == 6);
  CHECK_THROWS_AS(max_gap(arith, 7, 12), Error);
}

TEST_CASE("subdivision multiplies the spectrum") {
  const Graph base = random_regular(12, 3, 5);
  const auto bs = cycle_spectrum(base);
  for (int m = 1; m <= 2; ++m) {
    auto sub = cycle_spectrum(subdivide(base, m));
    std::vector<int> scaled;
    for (int len : bs.lengths) scaled.push_back((m + 1) * len);
    CHECK(sub.lengths == scaled);
    if (bs.lengths.back() - bs.lengths.front() + 1 == static_cast<int>(bs.lengths.size())) {
      CHECK(max_gap(sub, sub.girth(), sub.circumference()) == m + 1);
    }
  }
}
