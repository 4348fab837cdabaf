#pragma once

#include <cstdint>

#include "expcycles/graph.hpp"

namespace expcycles {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();
/// Two copies of K_size joined by a single edge between vertex size-1 and size.
Graph barbell_graph(int size);

/// K_{a,b} with sides [0, a) and [a, a + b).
Graph complete_bipartite(int a, int b);

/// Configuration-model pairing with full restarts on loops or repeated
/// edges. Throws infeasible_degree or retry_limit (after 10^4 restarts).
Graph random_regular(int n, int d, std::uint64_t seed);

/// K_{n + 1 - ceil(beta n)} on the first ids plus ceil(beta n) - 1 isolated vertices.
Graph clique_plus_isolated(int n, double beta);

/// G(n, p): pairs (u, v), u < v, in canonical order each flip one uniform01 draw.
Graph binomial_random(int n, double p, std::uint64_t seed);

}  // namespace expcycles
