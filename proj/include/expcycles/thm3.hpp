#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "expcycles/expansion.hpp"

namespace expcycles {

enum class BroomVariant { broad, binary };

/// Which ell are accepted. `theorem` is the window [ceil(b1 log n),
/// floor((1 - b2) n)]; `structural` accepts every ell whose broom has p >= 1
/// and fits inside the pruned graph.
enum class RangeGate { theorem, structural };

struct Thm3Params {
  double beta = 0.0;
  int n = 0;
  int k = 0;  // floor(1 / (4 beta))
  int t = 0;  // ceil(log_k(beta n)), 0 when beta n <= 1
  int r = 0;  // ceil(log2(beta n)), 0 when beta n <= 1
  double b1 = 0.0;  // 25 / log2(1 / beta)
  double b2 = 0.0;  // 14 beta
  int theorem_lo = 0;
  int theorem_hi = 0;
  /// Largest ell the broad variant is used for: (1/2 - 10 beta) n.
  double broad_ceiling = 0.0;
};

Thm3Params thm3_params(double beta, int n);

/// A tree to embed. For double brooms vertex 0 is the first root, the
/// bridge runs root1 -> root2 and leaves1 / leaves2 are the two depth-t
/// layers; a generic shape leaves those empty.
struct TreeShape {
  Graph tree;
  Vertex root = 0;
  int k = 0, t = 0, p = 0;
  Vertex root2 = -1;
  std::vector<Vertex> leaves1;
  std::vector<Vertex> leaves2;
  int vertex_count() const { return tree.order(); }
  int max_degree() const { return tree.max_degree(); }
};

/// Two complete k-ary trees of depth t with roots joined by a path of length p.
TreeShape double_broom(int k, int t, int p);
/// Wraps an arbitrary tree; throws invalid_input if it is not one.
TreeShape tree_shape(Graph tree, Vertex root = 0);

/// BFS-order backtracking embedder: children go to unused host neighbours of
/// their parent's image, highest residual degree first, seeded tie-breaks,
/// with a step budget per restart. Returns tree vertex -> host vertex.
std::optional<std::vector<Vertex>> embed_tree(const Graph& h, const TreeShape& shape, std::uint64_t seed,
                                              int retries);

struct HaxellTriple {
  int d = 0;
  int m = 0;
  int big_m = 0;
};

/// Claim (1): m = floor(beta n), d = k + 1, M = ceil(ell + 2(k beta n - 1)/(k - 1) - 1).
HaxellTriple claim1_triple(const Thm3Params& params, int ell);
/// Claim (2): m = floor(beta n), d = 3, M = ceil(ell + 4 beta n - 3).
HaxellTriple claim2_triple(const Thm3Params& params, int ell);

struct HaxellCheck {
  bool holds = true;
  bool exhaustive = true;
  int condition = 0;  // 1 or 2 for the violated condition
  std::optional<VertexSet> witness;
};

/// Condition 1: |N(U)| >= d|U| + 1 for 0 < |U| <= m. Condition 2:
/// |N(U)| >= d|U| + M for m < |U| <= 2m. Exhaustive up to `cutoff` vertices
/// (too_large beyond unless sample_trials > 0).
HaxellCheck haxell_conditions(const Graph& h, const HaxellTriple& triple, int cutoff = 20, int sample_trials = 0,
                              std::uint64_t seed = 1);

/// The pruned graph held a broom but no host edge joins its two leaf layers.
class NoClosingEdge : public Error {
 public:
  NoClosingEdge(const std::string& message, VertexSet leaves1, VertexSet leaves2)
      : Error(ErrorKind::no_closing_edge, message), leaves1_(std::move(leaves1)), leaves2_(std::move(leaves2)) {}
  const VertexSet& leaves1() const noexcept { return leaves1_; }
  const VertexSet& leaves2() const noexcept { return leaves2_; }

 private:
  VertexSet leaves1_;
  VertexSet leaves2_;
};

struct Thm3Options {
  std::optional<BroomVariant> variant;  // nothing: pick by the broad ceiling
  RangeGate gate = RangeGate::theorem;
  std::uint64_t seed = 1;
  int retries = 8;
  PruneOptions prune;
};

struct Thm3Result {
  Thm3Params params;
  BroomVariant variant = BroomVariant::binary;
  int ell = 0;
  VertexSet h;  // survivors of the pruning
  bool h_exhaustive = true;
  TreeShape shape;
  std::vector<Vertex> embedding;  // shape vertex -> g vertex
  Edge closing{-1, -1};
  CycleCertificate cycle;
};

/// Prune, embed the double broom for ell and close it through a leaf-leaf
/// edge. Errors: target_out_of_range, embedding_failed, NoClosingEdge,
/// BetaGraphRefuted from the pruning.
Thm3Result run_thm3(const Graph& g, double beta, int ell, const Thm3Options& options = {});

}  // namespace expcycles
