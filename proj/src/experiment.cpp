#include "expcycles/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <tuple>

#include "expcycles/generators.hpp"
#include "expcycles/rng.hpp"

namespace expcycles {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

int int_param(const FamilyParams& p, const std::string& name) {
  const auto it = p.find(name);
  if (it == p.end()) throw Error(ErrorKind::invalid_input, "missing parameter \"" + name + "\"");
  if (it->second != std::floor(it->second)) {
    throw Error(ErrorKind::invalid_input, "parameter \"" + name + "\" must be an integer");
  }
  return static_cast<int>(it->second);
}

double real_param(const FamilyParams& p, const std::string& name) {
  const auto it = p.find(name);
  if (it == p.end()) throw Error(ErrorKind::invalid_input, "missing parameter \"" + name + "\"");
  return it->second;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"complete", "cycle", "path", "star", "petersen", "barbell",
                                              "complete-bipartite", "random-regular", "clique-plus-isolated",
                                              "binomial"};
  return names;
}

Graph generate_family(const std::string& family, const FamilyParams& p, std::uint64_t seed) {
  if (family == "complete") return complete_graph(int_param(p, "n"));
  if (family == "cycle") return cycle_graph(int_param(p, "n"));
  if (family == "path") return path_graph(int_param(p, "n"));
  if (family == "star") return star_graph(int_param(p, "leaves"));
  if (family == "petersen") return petersen_graph();
  if (family == "barbell") return barbell_graph(int_param(p, "size"));
  if (family == "complete-bipartite") return complete_bipartite(int_param(p, "a"), int_param(p, "b"));
  if (family == "random-regular") return random_regular(int_param(p, "n"), int_param(p, "d"), seed);
  if (family == "clique-plus-isolated") return clique_plus_isolated(int_param(p, "n"), real_param(p, "beta"));
  if (family == "binomial") return binomial_random(int_param(p, "n"), real_param(p, "p"), seed);
  throw Error(ErrorKind::invalid_input, "unknown family \"" + family + "\"");
}

std::string params_key(const FamilyParams& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + fmt(v);
  }
  return out;
}

// ---------------------------------------------------------------- spec json

namespace {

std::pair<int, int> range_of(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error(ErrorKind::invalid_input, std::string(what) + ": expected [lo, hi]");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

const std::vector<std::string> kChecks{"spectrum", "expansion", "beta", "thm1", "thm2", "thm3"};

}  // namespace

ExperimentSpec parse_experiment_spec(const nlohmann::json& j) {
  ExperimentSpec s;
  try {
    if (!j.is_object()) throw Error(ErrorKind::invalid_input, "experiment spec must be an object");
    s.name = j.value("name", s.name);
    s.seed = j.value("seed", s.seed);
    for (const auto& f : j.value("families", nlohmann::json::array())) {
      FamilyGrid g;
      g.family = f.at("family").get<std::string>();
      if (std::find(family_names().begin(), family_names().end(), g.family) == family_names().end()) {
        throw Error(ErrorKind::invalid_input, "unknown family \"" + g.family + "\"");
      }
      const auto params = f.value("params", nlohmann::json::object());
      for (const auto& [k, v] : params.items()) {
        g.params[k] = v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()};
      }
      s.grid.push_back(std::move(g));
    }
    if (j.contains("seeds")) {
      const auto& sj = j["seeds"];
      s.seeds.clear();
      if (sj.is_object()) {
        const int count = sj.at("count").get<int>();
        for (int i = 0; i < count; ++i) s.seeds.push_back(derive_seed(s.seed, static_cast<std::uint64_t>(i)));
      } else {
        s.seeds = sj.get<std::vector<std::uint64_t>>();
      }
    }
    if (j.contains("subdivide")) s.subdivide = j["subdivide"].get<std::vector<int>>();
    if (s.subdivide.empty()) s.subdivide = {0};
    for (int m : s.subdivide) {
      if (m < 0) throw Error(ErrorKind::invalid_input, "subdivide values must be >= 0");
    }
    s.checks = j.value("checks", std::vector<std::string>{});
    for (const auto& c : s.checks) {
      if (std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end()) {
        throw Error(ErrorKind::invalid_input, "unknown check \"" + c + "\"");
      }
    }
    const auto budgets = j.value("budgets", nlohmann::json::object());
    s.spectrum_budget = budgets.value("spectrum", s.spectrum_budget);
    s.exact_cutoff = budgets.value("exact_cutoff", s.exact_cutoff);
    s.beta_samples = budgets.value("beta_samples", s.beta_samples);

    const std::string alpha = j.value("alpha", std::string("auto"));
    if (alpha == "auto") s.alpha = AlphaSource::automatic;
    else if (alpha == "exact") s.alpha = AlphaSource::exact;
    else if (alpha == "spectral") s.alpha = AlphaSource::spectral;
    else throw Error(ErrorKind::invalid_input, "alpha must be auto, exact or spectral");

    s.beta = j.value("beta", s.beta);
    const auto t3 = j.value("thm3", nlohmann::json::object());
    s.beta = t3.value("beta", s.beta);
    const std::string gate = t3.value("gate", std::string("structural"));
    if (gate != "structural" && gate != "theorem") throw Error(ErrorKind::invalid_input, "thm3 gate");
    s.thm3_gate = gate == "theorem" ? RangeGate::theorem : RangeGate::structural;
    if (t3.contains("ell")) s.thm3_range = range_of(t3["ell"], "thm3.ell");
    s.thm3_retries = t3.value("retries", s.thm3_retries);

    const auto t1 = j.value("thm1", nlohmann::json::object());
    const std::string preset = t1.value("preset", std::string("practical"));
    if (preset != "practical" && preset != "paper") throw Error(ErrorKind::invalid_input, "thm1 preset");
    s.thm1_mode = preset == "paper" ? ConstantsMode::paper : ConstantsMode::practical;
    if (t1.contains("ell")) s.thm1_range = range_of(t1["ell"], "thm1.ell");

    const auto out = j.value("outputs", nlohmann::json::object());
    s.csv_path = out.value("csv", "");
    s.summary_path = out.value("summary", "");
    s.svg_path = out.value("svg", "");
    s.metadata_path = out.value("metadata", "");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("experiment spec: ") + e.what());
  }
  return s;
}

Json to_json(const ExperimentSpec& s) {
  Json families = Json::array();
  for (const auto& g : s.grid) {
    Json params = Json::object();
    for (const auto& [k, v] : g.params) params[k] = v;
    families.push_back({{"family", g.family}, {"params", std::move(params)}});
  }
  Json thm3{{"beta", s.beta}, {"gate", s.thm3_gate == RangeGate::theorem ? "theorem" : "structural"},
            {"retries", s.thm3_retries}};
  if (s.thm3_range) thm3["ell"] = {s.thm3_range->first, s.thm3_range->second};
  Json thm1{{"preset", s.thm1_mode == ConstantsMode::paper ? "paper" : "practical"}};
  if (s.thm1_range) thm1["ell"] = {s.thm1_range->first, s.thm1_range->second};
  const char* alpha = s.alpha == AlphaSource::exact ? "exact" : s.alpha == AlphaSource::spectral ? "spectral" : "auto";
  return Json{{"name", s.name},
              {"seed", s.seed},
              {"families", std::move(families)},
              {"seeds", s.seeds},
              {"subdivide", s.subdivide},
              {"checks", s.checks},
              {"budgets",
               {{"spectrum", s.spectrum_budget}, {"exact_cutoff", s.exact_cutoff}, {"beta_samples", s.beta_samples}}},
              {"alpha", alpha},
              {"beta", s.beta},
              {"thm1", std::move(thm1)},
              {"thm3", std::move(thm3)},
              {"outputs",
               {{"csv", s.csv_path}, {"summary", s.summary_path}, {"svg", s.svg_path}, {"metadata", s.metadata_path}}}};
}

// ---------------------------------------------------------------- sweep

namespace {

struct Instance {
  std::string family;
  FamilyParams params;
  std::string key;
  std::uint64_t seed;
  int subdivide;
};

bool wants(const ExperimentSpec& s, const char* check) {
  return std::find(s.checks.begin(), s.checks.end(), check) != s.checks.end();
}

std::vector<Instance> instances(const ExperimentSpec& spec) {
  std::vector<Instance> out;
  for (const auto& g : spec.grid) {
    std::vector<FamilyParams> points{{}};
    for (const auto& [name, values] : g.params) {
      std::vector<FamilyParams> next;
      for (const auto& pt : points) {
        for (double v : values) {
          auto q = pt;
          q[name] = v;
          next.push_back(std::move(q));
        }
      }
      points = std::move(next);
    }
    for (const auto& pt : points) {
      for (auto seed : spec.seeds) {
        for (int m : spec.subdivide) out.push_back({g.family, pt, params_key(pt), seed, m});
      }
    }
  }
  auto key = [](const Instance& i) { return std::tie(i.family, i.key, i.seed, i.subdivide); };
  std::stable_sort(out.begin(), out.end(), [&](const Instance& a, const Instance& b) { return key(a) < key(b); });
  out.erase(std::unique(out.begin(), out.end(), [&](const Instance& a, const Instance& b) { return key(a) == key(b); }),
            out.end());
  return out;
}

std::optional<ExpansionCertificate> find_alpha(const Graph& g, const ExperimentSpec& spec) {
  const int n = g.order();
  const bool exact_ok = n >= 2 && n <= spec.exact_cutoff;
  const int k = (n + 1) / 2;
  if (spec.alpha == AlphaSource::exact) return exact_expansion(g, k, spec.exact_cutoff);
  if (spec.alpha == AlphaSource::spectral) return spectral_alpha(g);
  if (exact_ok) return exact_expansion(g, k, spec.exact_cutoff);
  try {
    return spectral_alpha(g);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool revalidates(const Graph& g, const CycleCertificate& c) {
  try {
    return validate_cycle(g, c.vertices()) == c;
  } catch (const NotACycle&) {
    return false;
  }
}

ExperimentRow run_row(const ExperimentSpec& spec, const Instance& inst) {
  ExperimentRow row;
  row.family = inst.family;
  row.params = inst.key;
  row.seed = inst.seed;
  row.subdivide = inst.subdivide;
  row.run_seed = derive_seed(spec.seed, inst.seed);
  Graph g;
  try {
    g = generate_family(inst.family, inst.params, inst.seed);
    if (inst.subdivide > 0) g = subdivide(g, inst.subdivide);
  } catch (const Error& e) {
    row.error = std::string(to_string(e.kind())) + ": " + e.what();
    return row;
  }
  row.n = g.order();
  row.edges = static_cast<int>(g.edge_count());

  try {
    if (wants(spec, "spectrum")) {
      const auto s = cycle_spectrum(g, spec.spectrum_budget);
      row.lengths = static_cast<int>(s.lengths.size());
      row.complete = s.complete;
      row.girth = s.girth();
      row.circumference = s.circumference();
      if (s.lengths.size() >= 2) row.max_gap = max_gap(s, s.girth(), s.circumference());
    }

    std::optional<ExpansionCertificate> cert;
    if (wants(spec, "expansion") || wants(spec, "thm1") || wants(spec, "thm2")) {
      cert = find_alpha(g, spec);
      if (cert) {
        row.alpha = cert->value;
        row.alpha_kind = std::string(to_string(cert->kind));
      }
    }

    if (wants(spec, "beta")) {
      const bool exhaustive = row.n <= spec.exact_cutoff;
      const auto b = is_beta_graph(g, spec.beta, spec.exact_cutoff, exhaustive ? 0 : spec.beta_samples, row.run_seed);
      row.beta_holds = b.holds;
      row.beta_exhaustive = b.exhaustive;
    }
  } catch (const Error& e) {
    row.error = std::string(to_string(e.kind())) + ": " + e.what();
  }

  const bool have_alpha = row.alpha && *row.alpha > 0.0;
  if (wants(spec, "thm2")) {
    if (!have_alpha) {
      row.thm2_stage = "no-alpha";
    } else {
      try {
        const auto tr = run_thm2(g, std::min(1.0, *row.alpha));
        row.thm2_cycles = static_cast<int>(tr.cycles.size());
        row.thm2_invalid = static_cast<int>(
            std::count_if(tr.cycles.begin(), tr.cycles.end(), [&](const auto& c) { return !revalidates(g, c); }));
      } catch (const StageFailure& e) {
        row.thm2_stage = e.stage();
      } catch (const Error& e) {
        row.thm2_stage = std::string(to_string(e.kind()));
      }
    }
  }

  if (wants(spec, "thm1")) {
    if (!have_alpha) {
      row.thm1_stage = "no-alpha";
    } else {
      const double a = std::min(1.0, *row.alpha);
      const auto consts = spec.thm1_mode == ConstantsMode::paper ? paper_constants(a) : practical_constants();
      const auto [lo, hi] = spec.thm1_range ? *spec.thm1_range : thm1_target_range(row.n, consts);
      std::vector<int> targets;
      for (int ell = lo; ell <= hi; ++ell) targets.push_back(ell);
      row.thm1_targets = static_cast<int>(targets.size());
      try {
        const auto run = run_thm1(g, a, consts, targets);
        int ok = 0, bad = 0;
        for (const auto& o : run.outcomes) {
          if (!o.cycle) {
            if (row.thm1_stage.empty() && o.error) row.thm1_stage = std::string(to_string(*o.error));
            continue;
          }
          const bool in_window = o.cycle->length() >= o.ell && o.cycle->length() <= o.ell + consts.a;
          (revalidates(g, *o.cycle) && in_window ? ok : bad) += 1;
        }
        row.thm1_successes = ok;
        row.thm1_invalid = bad;
      } catch (const StageFailure& e) {
        row.thm1_stage = e.stage();
        row.thm1_successes = 0;
      } catch (const Error& e) {
        row.thm1_stage = std::string(to_string(e.kind()));
        row.thm1_successes = 0;
      }
    }
  }

  if (wants(spec, "thm3")) {
    const auto [lo, hi] = spec.thm3_range ? *spec.thm3_range : std::pair{3, row.n};
    Thm3Options opt;
    opt.gate = spec.thm3_gate;
    opt.seed = row.run_seed;
    opt.retries = spec.thm3_retries;
    int targets = 0, ok = 0, out = 0, bad = 0;
    for (int ell = lo; ell <= hi; ++ell) {
      ++targets;
      try {
        const auto r = run_thm3(g, spec.beta, ell, opt);
        (revalidates(g, r.cycle) && r.cycle.length() == ell ? ok : bad) += 1;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::target_out_of_range) {
          ++out;
          continue;
        }
        if (row.thm3_failure.empty()) row.thm3_failure = std::string(to_string(e.kind()));
        if (e.kind() == ErrorKind::beta_graph_refuted) {
          targets = ell - lo + 1;
          break;  // the pruning does not depend on ell
        }
      }
    }
    row.thm3_targets = targets;
    row.thm3_successes = ok;
    row.thm3_out_of_range = out;
    row.thm3_invalid = bad;
  }
  return row;
}

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else if constexpr (std::is_floating_point_v<T>) return fmt(*v);
  else return std::to_string(*v);
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double rate(long long failed, long long total) { return total ? static_cast<double>(failed) / total : 0.0; }

Json summarize(const ExperimentSpec& spec, const std::vector<ExperimentRow>& rows) {
  long long errors = 0, t1_runs = 0, t1_targets = 0, t1_ok = 0, t1_trace_fail = 0, t2_runs = 0, t2_fail = 0,
            t2_cycles = 0, t3_targets = 0, t3_ok = 0, t3_out = 0, invalid = 0, incomplete = 0;
  std::map<std::string, long long> t1_stages, t2_stages, t3_kinds;
  for (const auto& r : rows) {
    errors += !r.error.empty();
    incomplete += r.complete && !*r.complete;
    if (r.thm1_targets) {
      ++t1_runs;
      t1_targets += *r.thm1_targets;
      t1_ok += r.thm1_successes.value_or(0);
      invalid += r.thm1_invalid.value_or(0);
      if (!r.thm1_invalid) ++t1_trace_fail;
      if (!r.thm1_stage.empty()) ++t1_stages[r.thm1_stage];
    } else if (!r.thm1_stage.empty()) {
      ++t1_runs;
      ++t1_trace_fail;
      ++t1_stages[r.thm1_stage];
    }
    if (r.thm2_cycles || !r.thm2_stage.empty()) {
      ++t2_runs;
      if (!r.thm2_cycles) {
        ++t2_fail;
        ++t2_stages[r.thm2_stage];
      }
      t2_cycles += r.thm2_cycles.value_or(0);
      invalid += r.thm2_invalid.value_or(0);
    }
    if (r.thm3_targets) {
      t3_targets += *r.thm3_targets;
      t3_ok += *r.thm3_successes;
      t3_out += *r.thm3_out_of_range;
      invalid += *r.thm3_invalid;
      if (!r.thm3_failure.empty()) ++t3_kinds[r.thm3_failure];
    }
  }
  const long long t3_in = t3_targets - t3_out;
  return Json{{"name", spec.name},
              {"rows", rows.size()},
              {"row_errors", errors},
              {"incomplete_spectra", incomplete},
              {"invalid_cycles", invalid},
              {"thm1",
               {{"runs", t1_runs},
                {"trace_failures", t1_trace_fail},
                {"targets", t1_targets},
                {"successes", t1_ok},
                {"stage_failure_rate", rate(t1_targets - t1_ok, t1_targets)},
                {"failure_kinds", t1_stages}}},
              {"thm2",
               {{"runs", t2_runs},
                {"cycles", t2_cycles},
                {"stage_failure_rate", rate(t2_fail, t2_runs)},
                {"failure_stages", t2_stages}}},
              {"thm3",
               {{"targets", t3_targets},
                {"out_of_range", t3_out},
                {"successes", t3_ok},
                {"failure_rate", rate(t3_in - t3_ok, t3_in)},
                {"failure_kinds", t3_kinds}}}};
}

}  // namespace

int experiment_workers(int requested) {
  int cap = 0;
  if (const char* env = std::getenv("EXPCYCLES_WORKERS")) cap = std::max(0, std::atoi(env));
  int w = requested > 0 ? requested : cap > 0 ? cap : static_cast<int>(std::thread::hardware_concurrency());
  if (cap > 0) w = std::min(w, cap);
  return std::max(1, w);
}

ExperimentReport run_experiment(const ExperimentSpec& spec, int workers) {
  const auto todo = instances(spec);
  ExperimentReport report;
  report.workers = std::min<int>(experiment_workers(workers), std::max<std::size_t>(1, todo.size()));
  report.rows.resize(todo.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) report.rows[i] = run_row(spec, todo[i]);
  };
  if (report.workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < report.workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  report.summary = summarize(spec, report.rows);
  report.csv = to_csv(report.rows);
  report.svg = scatter_svg(report.rows);
  return report;
}

std::string csv_header() {
  return "family,params,seed,subdivide,run_seed,n,edges,alpha,alpha_kind,lengths,complete,girth,circumference,"
         "max_gap,beta_holds,beta_exhaustive,thm1_targets,thm1_successes,thm1_invalid,thm1_stage,thm2_cycles,"
         "thm2_invalid,thm2_stage,thm3_targets,thm3_successes,thm3_out_of_range,thm3_invalid,thm3_failure,error\n";
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = csv_header();
  for (const auto& r : rows) {
    const std::vector<std::string> cells{quoted(r.family),
                                         quoted(r.params),
                                         std::to_string(r.seed),
                                         std::to_string(r.subdivide),
                                         std::to_string(r.run_seed),
                                         std::to_string(r.n),
                                         std::to_string(r.edges),
                                         cell(r.alpha),
                                         r.alpha_kind,
                                         cell(r.lengths),
                                         cell(r.complete),
                                         cell(r.girth),
                                         cell(r.circumference),
                                         cell(r.max_gap),
                                         cell(r.beta_holds),
                                         cell(r.beta_exhaustive),
                                         cell(r.thm1_targets),
                                         cell(r.thm1_successes),
                                         cell(r.thm1_invalid),
                                         quoted(r.thm1_stage),
                                         cell(r.thm2_cycles),
                                         cell(r.thm2_invalid),
                                         quoted(r.thm2_stage),
                                         cell(r.thm3_targets),
                                         cell(r.thm3_successes),
                                         cell(r.thm3_out_of_range),
                                         cell(r.thm3_invalid),
                                         quoted(r.thm3_failure),
                                         quoted(r.error)};
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
    out += '\n';
  }
  return out;
}

namespace {

struct Panel {
  std::string title, xlabel, ylabel;
  std::vector<std::pair<double, double>> points;
};

void draw_panel(std::ostringstream& svg, const Panel& p, double x0) {
  constexpr double w = 360, h = 260, pad = 40;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!p.points.empty()) {
    auto [xl, xh] = std::minmax_element(p.points.begin(), p.points.end(),
                                        [](auto& a, auto& b) { return a.first < b.first; });
    auto [yl, yh] = std::minmax_element(p.points.begin(), p.points.end(),
                                        [](auto& a, auto& b) { return a.second < b.second; });
    xmin = std::min(0.0, xl->first);
    xmax = xh->first > xmin ? xh->first * 1.05 : xmin + 1;
    ymin = std::min(0.0, yl->second);
    ymax = yh->second > ymin ? yh->second * 1.05 : ymin + 1;
  }
  auto sx = [&](double x) { return x0 + pad + (x - xmin) / (xmax - xmin) * (w - 2 * pad); };
  auto sy = [&](double y) { return h - pad - (y - ymin) / (ymax - ymin) * (h - 2 * pad); };
  svg << "<g>\n<text x=\"" << fmt(x0 + w / 2) << "\" y=\"20\" text-anchor=\"middle\">" << p.title << "</text>\n";
  svg << "<line x1=\"" << fmt(sx(xmin)) << "\" y1=\"" << fmt(sy(ymin)) << "\" x2=\"" << fmt(sx(xmax)) << "\" y2=\""
      << fmt(sy(ymin)) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << fmt(sx(xmin)) << "\" y1=\"" << fmt(sy(ymin)) << "\" x2=\"" << fmt(sx(xmin)) << "\" y2=\""
      << fmt(sy(ymax)) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << fmt(x0 + w / 2) << "\" y=\"" << fmt(h - 8) << "\" text-anchor=\"middle\">" << p.xlabel << " ["
      << fmt(xmin) << ", " << fmt(xmax) << "]</text>\n";
  svg << "<text x=\"" << fmt(x0 + 12) << "\" y=\"" << fmt(h / 2) << "\" transform=\"rotate(-90 " << fmt(x0 + 12) << ' '
      << fmt(h / 2) << ")\" text-anchor=\"middle\">" << p.ylabel << " [" << fmt(ymin) << ", " << fmt(ymax)
      << "]</text>\n";
  for (const auto& [x, y] : p.points) {
    svg << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y)) << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  svg << "</g>\n";
}

}  // namespace

std::string scatter_svg(const std::vector<ExperimentRow>& rows) {
  Panel density{"|L|/n vs alpha", "alpha", "|L|/n", {}};
  Panel gaps{"max gap vs m", "m", "max gap", {}};
  bool subdivided = false;
  for (const auto& r : rows) {
    if (r.alpha && r.lengths && r.n > 0) density.points.emplace_back(*r.alpha, static_cast<double>(*r.lengths) / r.n);
    if (r.subdivide > 0) subdivided = true;
    if (r.max_gap) gaps.points.emplace_back(r.subdivide, *r.max_gap);
  }
  const int panels = subdivided ? 2 : 1;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 360 * panels << "\" height=\"260\">\n";
  draw_panel(svg, density, 0);
  if (subdivided) draw_panel(svg, gaps, 360);
  svg << "</svg>\n";
  return svg.str();
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::invalid_input, "cannot write " + path);
  f << text;
}

std::string timestamp(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void write_report(const ExperimentSpec& spec, const ExperimentReport& report, double elapsed_seconds) {
  if (!spec.csv_path.empty()) write_file(spec.csv_path, report.csv);
  if (!spec.summary_path.empty()) write_file(spec.summary_path, report.summary.dump(2) + "\n");
  if (!spec.svg_path.empty()) write_file(spec.svg_path, report.svg);
  if (!spec.metadata_path.empty()) {
    const auto now = std::chrono::system_clock::now();
    Json meta{{"name", spec.name},
              {"finished", timestamp(now)},
              {"elapsed_seconds", elapsed_seconds},
              {"workers", report.workers},
              {"rows", report.rows.size()}};
    write_file(spec.metadata_path, meta.dump(2) + "\n");
  }
}

}  // namespace expcycles
