#pragma once

#include <map>
#include <optional>
#include <vector>

#include "expcycles/graph.hpp"

namespace expcycles {

inline constexpr long long kDefaultOracleBudget = 100'000'000;

struct Spectrum {
  std::vector<int> lengths;  // ascending
  bool complete = true;
  long long budget_used = 0;
  std::map<int, std::vector<Vertex>> witnesses;  // one cycle per length

  bool contains(int ell) const;
  int girth() const { return lengths.empty() ? -1 : lengths.front(); }
  int circumference() const { return lengths.empty() ? -1 : lengths.back(); }
};

/// All cycle lengths by backtracking anchored at each cycle's minimum vertex.
/// The budget counts search-tree nodes; complete = false once it runs out.
Spectrum cycle_spectrum(const Graph& g, long long budget = kDefaultOracleBudget);

enum class SearchStatus { found, absent, unknown };

struct LengthSearch {
  SearchStatus status = SearchStatus::unknown;
  std::optional<CycleCertificate> cycle;
  long long nodes = 0;
};

/// Searches for one cycle of length ell, pruning on the distance back to
/// the anchor. absent is a proof; unknown means the budget ran out.
LengthSearch has_cycle_length(const Graph& g, int ell, long long budget = kDefaultOracleBudget);

/// Largest difference between consecutive lengths of s inside [lo, hi].
/// Throws insufficient_data when fewer than two lengths fall in the range.
int max_gap(const Spectrum& s, int lo, int hi);

/// Vertices of the 2-core (the only vertices that can lie on cycles).
VertexSet two_core(const Graph& g);

}  // namespace expcycles
