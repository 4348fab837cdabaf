#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "expcycles/graph.hpp"
#include "expcycles/rational.hpp"

namespace expcycles {

inline constexpr int kDefaultExhaustiveCutoff = 24;

enum class CertificateKind { exact, spectral, refuted };

struct ExpansionCertificate {
  CertificateKind kind = CertificateKind::exact;
  double value = 0.0;
  /// Present for exact certificates: min |N(U)|/|U| as a fraction.
  std::optional<Rational> exact_value;
  int k = 0;
  std::optional<VertexSet> witness;
  std::optional<double> lambda;
};

/// min |N(U)|/|U| over nonempty U with |U| <= k, with the first minimiser in
/// size-then-lexicographic order. Throws too_large when n exceeds the cutoff.
ExpansionCertificate exact_expansion(const Graph& g, int k, int cutoff = kDefaultExhaustiveCutoff);

/// (d - lambda) / (2d) floored at 0, lambda the largest absolute non-Perron
/// adjacency eigenvalue. Throws invalid_input if g is not regular or d = 0.
ExpansionCertificate spectral_alpha(const Graph& g);

/// Randomised search for |U| <= k with |N(U)| < alpha |U|. Returns the
/// smallest-ratio verified violator seen, or nothing. One-sided.
std::optional<VertexSet> refute_expansion(const Graph& g, double alpha, int k, int trials, std::uint64_t seed);

/// Wrap a verified violator into a refuted certificate.
ExpansionCertificate refuted_certificate(const Graph& g, const VertexSet& witness, int k);

/// Violator search inside g[alive]: smallest |A| <= max_size first, N taken
/// in g[alive]. Exhaustive when alive fits a machine word and the subset count
/// stays under `budget`; the randomised refuter otherwise.
struct ViolatorSearch {
  long long budget = 20'000'000;
  int refuter_trials = 64;
  std::uint64_t seed = 1;
};

struct PruneResult {
  VertexSet survivors;
  std::vector<VertexSet> deleted;  // in deletion order
  /// Every violator search was exhaustive, so survivors provably have no
  /// violating set left.
  bool exhaustive = true;
};

struct PruneOptions {
  bool force = false;  // skip the precondition check
  ViolatorSearch search;
};

/// Deletion process on g minus v0 with sets |A| <= k violating alpha/2
/// expansion. Precondition |v0| <= alpha^2 k / 8.
PruneResult prune_to_expander(const Graph& g, const VertexSet& v0, int k, double alpha,
                              const PruneOptions& options = {});

/// Deletion process inside g[w] with sets |A| <= (1/2 - 2 eps) n violating
/// alpha/2 expansion. Preconditions |w| > n/2, |N(w)| <= alpha eps n,
/// 0 < eps < 1/4.
PruneResult prune_interior(const Graph& g, const VertexSet& w, double alpha, double eps,
                           const PruneOptions& options = {});

struct SetPair {
  VertexSet a;
  VertexSet b;
};

/// Thrown by prune_beta when the deletion evidence shows g is no beta-graph.
class BetaGraphRefuted : public Error {
 public:
  BetaGraphRefuted(std::string message, VertexSet deleted, std::optional<SetPair> witness)
      : Error(ErrorKind::beta_graph_refuted, message), deleted_(std::move(deleted)), witness_(std::move(witness)) {}
  const VertexSet& deleted() const noexcept { return deleted_; }
  /// Two disjoint sets of size >= ceil(beta n) with no edge between them.
  const std::optional<SetPair>& witness() const noexcept { return witness_; }

 private:
  VertexSet deleted_;
  std::optional<SetPair> witness_;
};

/// Deletes |U| <= beta n with |N(U)| < (1 - 3 beta) / (2 beta) |U| until none
/// remain. Throws BetaGraphRefuted when the deleted total reaches beta n or
/// the survivor splits into two large pieces.
PruneResult prune_beta(const Graph& g, double beta, const PruneOptions& options = {});

struct BetaCheck {
  bool holds = true;
  bool exhaustive = true;
  std::optional<SetPair> witness;
};

/// Exhaustive over all ceil(beta n)-sets when n <= cutoff (throws too_large
/// otherwise unless sample_trials > 0, which switches to one-sided sampling).
BetaCheck is_beta_graph(const Graph& g, double beta, int cutoff = kDefaultExhaustiveCutoff, int sample_trials = 0,
                        std::uint64_t seed = 1);

struct PathFamily {
  std::vector<Path> paths;
  VertexSet sources;
  VertexSet targets;
};

/// Maximum family of vertex-disjoint a-b paths, internally avoiding a and b.
/// Unit-capacity max-flow on the vertex-split digraph.
PathFamily disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Active root-to-current path of greatest depth over a DFS from v
/// (neighbors ascending).
Path deepest_dfs_path(const Graph& g, Vertex v);
/// deepest_dfs_path truncated to ell edges. Throws component_too_small when
/// v's component has fewer than k vertices.
Path long_path_from(const Graph& g, Vertex v, int k, int ell);

}  // namespace expcycles
