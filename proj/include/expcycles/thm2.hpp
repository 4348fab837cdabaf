#pragma once

#include <vector>

#include "expcycles/expansion.hpp"
#include "expcycles/rooted_tree.hpp"
#include "expcycles/stage_check.hpp"

namespace expcycles {

/// Vertices of p reachable from t by a path of at most k edges whose
/// internal vertices avoid t and V(p).
VertexSet reachable_on_path(const Graph& g, const VertexSet& t, const Path& p, int k);

/// Union of the tree paths between members of x1, rooted at their common
/// ancestor. Throws invalid_input if |x1| < 2, x1 leaves the tree, or the
/// root does not branch.
RootedTree minimal_subtree(const RootedTree& t2, const VertexSet& x1);

struct Thm2Trace {
  double alpha = 0.0;
  int k = 0;
  RootedTree t;
  Path p;
  VertexSet x0;
  RootedTree t1;
  int x1_level = -1;  // depth in t1 of the level X1 attaches to
  VertexSet x1;
  RootedTree t2;
  RootedTree t3;
  Vertex v = -1;
  VertexSet y;
  VertexSet x2;
  Vertex u = -1;
  VertexSet x3;
  bool x3_forward = true;  // X3 lies after u along P
  std::vector<Vertex> x3_order;  // X3 in P-order moving away from u
  std::vector<CycleCertificate> cycles;  // aligned with x3_order
  CheckLog log;
};

/// Distinct cycle lengths from the BFS tree / long path / minimal subtree
/// construction. Throws StageFailure naming the step that could not be met.
Thm2Trace run_thm2(const Graph& g, double alpha);

}  // namespace expcycles
