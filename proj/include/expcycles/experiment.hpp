#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expcycles/serialize.hpp"

namespace expcycles {

using FamilyParams = std::map<std::string, double>;

/// Family names: complete, cycle, path, star, petersen, barbell,
/// complete-bipartite, random-regular, clique-plus-isolated, binomial.
/// Parameters by name (n, d, a, b, p, beta, size, leaves); seed feeds the
/// random families only. Throws invalid_input on unknown names or params.
Graph generate_family(const std::string& family, const FamilyParams& params, std::uint64_t seed);
const std::vector<std::string>& family_names();

/// "a=2;b=3", keys sorted.
std::string params_key(const FamilyParams& params);

enum class AlphaSource { automatic, exact, spectral };

struct FamilyGrid {
  std::string family;
  std::map<std::string, std::vector<double>> params;  // cartesian product
};

struct ExperimentSpec {
  std::string name = "experiment";
  std::uint64_t seed = 1;
  std::vector<FamilyGrid> grid;
  std::vector<std::uint64_t> seeds{1};
  std::vector<int> subdivide{0};
  std::vector<std::string> checks;  // spectrum, expansion, beta, thm1, thm2, thm3

  long long spectrum_budget = kDefaultOracleBudget;
  int exact_cutoff = kDefaultExhaustiveCutoff;
  int beta_samples = 2000;
  AlphaSource alpha = AlphaSource::automatic;

  double beta = 0.1;  // beta check and thm3
  RangeGate thm3_gate = RangeGate::structural;
  std::optional<std::pair<int, int>> thm3_range;  // default [3, n]
  int thm3_retries = 8;

  ConstantsMode thm1_mode = ConstantsMode::practical;
  std::optional<std::pair<int, int>> thm1_range;  // default thm1_target_range

  std::string csv_path, summary_path, svg_path, metadata_path;
};

/// Throws invalid_input on malformed specs. `seeds` accepts a list or
/// {"count": c}, the latter expanding to derive_seed(seed, i), i < c.
ExperimentSpec parse_experiment_spec(const nlohmann::json& j);
Json to_json(const ExperimentSpec& spec);

/// One grid point. Optional fields stay empty when their check did not run.
struct ExperimentRow {
  std::string family;
  std::string params;
  std::uint64_t seed = 0;
  int subdivide = 0;
  std::uint64_t run_seed = 0;  // derive_seed(spec.seed, seed), for the randomised steps
  int n = 0;
  int edges = 0;
  std::string error;  // generation or check failure outside the pipelines

  std::optional<double> alpha;
  std::string alpha_kind;
  std::optional<int> lengths;
  std::optional<bool> complete;
  std::optional<int> girth, circumference, max_gap;

  std::optional<bool> beta_holds;
  std::optional<bool> beta_exhaustive;

  std::optional<int> thm1_targets, thm1_successes, thm1_invalid;
  std::string thm1_stage;
  std::optional<int> thm2_cycles, thm2_invalid;
  std::string thm2_stage;
  std::optional<int> thm3_targets, thm3_successes, thm3_out_of_range, thm3_invalid;
  std::string thm3_failure;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;  // sorted on (family, params, seed, subdivide)
  Json summary;
  std::string csv;
  std::string svg;
  int workers = 1;
};

/// Worker count: explicit > 0, else EXPCYCLES_WORKERS, else hardware
/// concurrency, always capped by EXPCYCLES_WORKERS when set.
int experiment_workers(int requested = 0);

/// Rows run independently; a failing row records its error and the sweep goes on.
ExperimentReport run_experiment(const ExperimentSpec& spec, int workers = 0);

std::string csv_header();
std::string to_csv(const std::vector<ExperimentRow>& rows);
/// |L|/n against alpha, plus max gap against m when subdivided rows exist.
std::string scatter_svg(const std::vector<ExperimentRow>& rows);

/// Writes the spec's output paths; timestamps go only to the metadata file.
void write_report(const ExperimentSpec& spec, const ExperimentReport& report, double elapsed_seconds);

}  // namespace expcycles
