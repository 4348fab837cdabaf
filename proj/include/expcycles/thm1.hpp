#pragma once

#include <optional>
#include <string>
#include <span>
#include <utility>
#include <vector>

#include "expcycles/expansion.hpp"
#include "expcycles/rooted_tree.hpp"
#include "expcycles/stage_check.hpp"

namespace expcycles {

enum class ConstantsMode { paper, practical };

struct PipelineConstants {
  ConstantsMode mode = ConstantsMode::practical;
  double alpha = 0.0;  // the alpha the closed forms were evaluated at
  int delta = 0;
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  double c3 = 0.0;       // may be +inf in paper mode
  double log2_c3 = 0.0;  // finite even when c3 overflows
  double mu = 0.0;
  double a = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double log2_a2 = 0.0;

  // Size thresholds as fractions of the current graph order. Paper mode
  // fills them from alpha, practical mode takes them as given.
  double skeleton_fraction = 0.0;  // alpha^2 / 16
  double absorb_fraction = 0.0;    // alpha^3 / 32
  double stage_fraction = 0.0;     // alpha^4 / 200, the key tree's first stage
  double level_fraction = 0.0;     // alpha / 12, the thin-level cut
  double eps = 0.2;                // interior pruning parameter
};

/// Evaluate every constant of the construction at alpha.
PipelineConstants paper_constants(double alpha);
/// The documented desk-scale preset used by the acceptance runs.
PipelineConstants practical_constants();

/// Level indices are 1-based: L_1 = {root} is tree level 0.
struct KeyTree {
  RootedTree tree;
  int k0 = 0, k1 = 0, k2 = 0, t1 = 0, t2 = 0;
  VertexSet x;   // tree-degree >= delta
  VertexSet w;   // levels [k1, k2] minus x
  VertexSet u2;  // the expander inside levels [k1, k2]
  bool u2_exhaustive = true;
  CheckLog log;

  std::span<const Vertex> level(int i) const { return tree.level(i - 1); }
};

/// The staged tree around v0: BFS to the first-stage size, finish the batch,
/// continue with tree-degree cap delta; then the thin-level cut [k1, k2] and
/// the interior pruning. Throws StageFailure.
KeyTree key_tree(const Graph& g, Vertex v0, double alpha, const PipelineConstants& consts);

struct Thm1Trace {
  double alpha = 0.0;
  int n = 0;
  RootedTree t;  // skeleton after absorption
  int skeleton_size = 0;
  int absorb_rounds = 0;
  VertexSet u1;
  VertexSet z;
  VertexSet x0;
  VertexSet x1;
  Vertex y = -1;
  KeyTree key;  // ids of g
  PathFamily q_family;
  VertexSet x2;
  Vertex x0_vertex = -1;  // the chosen x_0
  Vertex b_x0 = -1;
  int b_level = 0;  // 1-based level holding B'
  int b_count = 0;  // |B'|
  VertexSet y_elim;
  VertexSet a_good;
  VertexSet a_bad;
  Vertex v0 = -1;
  VertexSet k_component;
  VertexSet u3;
  VertexSet d;
  Vertex u0 = -1;
  Vertex w0 = -1;
  Path q_prime;
  std::vector<Vertex> p_pieces;  // L_k1 roots visited by P', in order
  Path p;
  Path q;
  int m = 0;
  /// Level-k1 ancestor per vertex of g, -1 outside levels >= k1.
  std::vector<Vertex> piece_of;
  /// In paper mode the key tree runs at alpha/2 with paper_constants(alpha/2).
  PipelineConstants key_constants;
  CheckLog log;
};

/// Every stage up to the connector Q and the long path P.
Thm1Trace build_thm1_trace(const Graph& g, double alpha, const PipelineConstants& consts);

/// Close a cycle of length in [ell, ell + A] from a finished trace.
/// precondition_failed if ell - m - k1 lies outside [0, |P|],
/// target_out_of_range if P ends before leaving the current subtree,
/// assembly_violation if a step leaves its promised range.
CycleCertificate assemble_cycle(const Graph& g, const Thm1Trace& trace, int ell, const PipelineConstants& consts);

/// [ceil(a1 ln n), floor(a2 n)].
std::pair<int, int> thm1_target_range(int n, const PipelineConstants& consts);

struct TargetOutcome {
  int ell = 0;
  std::optional<CycleCertificate> cycle;
  std::optional<ErrorKind> error;
  std::string message;
};

struct Thm1Run {
  Thm1Trace trace;
  std::vector<TargetOutcome> outcomes;
};

/// build_thm1_trace then one assembly per target; per-target errors are
/// recorded, stage failures of the trace propagate.
Thm1Run run_thm1(const Graph& g, double alpha, const PipelineConstants& consts, const std::vector<int>& targets);

}  // namespace expcycles
