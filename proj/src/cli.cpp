#include "expcycles/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "expcycles/experiment.hpp"
#include "expcycles/graph_io.hpp"

namespace expcycles {

namespace {

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw Usage(path + ": " + e.what());
  }
}

/// stdout unless --out names a file.
struct Sink {
  std::ostream& out;
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Usage("cannot write " + path);
    f << text;
  }
  void emit(const Json& j) const { emit(j.dump() + "\n"); }
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(s);
    const int lo = std::stoi(s.substr(0, colon));
    const int hi = std::stoi(s.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw Usage("range must look like lo:hi, got \"" + s + "\"");
  }
}

// ---------------------------------------------------------------- alpha

struct AlphaFlags {
  std::string source = "auto";
  double value = 0.0;
  int cutoff = kDefaultExhaustiveCutoff;

  void add(CLI::App* cmd) {
    cmd->add_option("--alpha-source", source, "exact, spectral, asserted or auto")
        ->check(CLI::IsMember({"auto", "exact", "spectral", "asserted"}));
    cmd->add_option("--alpha", value, "expansion to assume with --alpha-source asserted");
    cmd->add_option("--cutoff", cutoff, "largest n for exhaustive expansion");
  }

  /// (alpha, kind). auto: exact up to the cutoff, spectral beyond.
  std::pair<double, std::string> resolve(const Graph& g) const {
    const int k = (g.order() + 1) / 2;
    if (source == "asserted") {
      if (!(value > 0.0)) throw Usage("--alpha-source asserted needs --alpha > 0");
      return {value, "asserted"};
    }
    if (value > 0.0) throw Usage("--alpha is only read with --alpha-source asserted");
    ExpansionCertificate c;
    if (source == "exact" || (source == "auto" && g.order() <= cutoff)) {
      c = exact_expansion(g, k, cutoff);
    } else {
      c = spectral_alpha(g);
    }
    if (!(c.value > 0.0)) throw Error(ErrorKind::precondition_failed, "expansion certificate gives alpha = 0");
    return {std::min(1.0, c.value), std::string(to_string(c.kind))};
  }
};

// ---------------------------------------------------------------- commands

struct GenFlags {
  std::string family;
  FamilyParams params;
  std::map<std::string, double> raw;
  std::uint64_t seed = 1;
  int subdivide = 0;
  std::string format = "auto";
  std::string out;
};

int run_gen(const GenFlags& f, std::ostream& out) {
  FamilyParams params;
  for (const auto& [k, v] : f.raw) params[k] = v;
  Graph g = generate_family(f.family, params, f.seed);
  if (f.subdivide > 0) g = subdivide(g, f.subdivide);
  if (!f.out.empty()) {
    const auto fmt = f.format == "edge-list" ? GraphFormat::edge_list
                     : f.format == "json"    ? GraphFormat::json
                                             : format_for_path(f.out);
    write_graph_file(g, f.out, fmt);
    return 0;
  }
  out << (f.format == "edge-list" ? to_edge_list(g) : to_json_text(g) + "\n");
  return 0;
}

struct ExpansionFlags {
  std::string graph;
  bool exact = false, spectral = false;
  std::optional<double> refute;
  std::optional<int> k;
  int cutoff = kDefaultExhaustiveCutoff;
  int trials = 200;
  std::uint64_t seed = 1;
};

int run_check_expansion(const ExpansionFlags& f, const Sink& sink) {
  const Graph g = read_graph_file(f.graph);
  const int k = f.k.value_or((g.order() + 1) / 2);
  if (f.refute) {
    const auto w = refute_expansion(g, *f.refute, k, f.trials, f.seed);
    if (!w) {
      sink.emit(Json{{"refuted", false}, {"alpha", *f.refute}, {"k", k}, {"trials", f.trials}});
      return 0;
    }
    Json j = to_json(refuted_certificate(g, *w, k));
    j["refuted"] = true;
    sink.emit(j);
    return 1;
  }
  const bool exact = f.exact || (!f.spectral && g.order() <= f.cutoff);
  sink.emit(to_json(exact ? exact_expansion(g, k, f.cutoff) : spectral_alpha(g)));
  return 0;
}

struct BetaFlags {
  std::string graph;
  double beta = 0.1;
  int cutoff = kDefaultExhaustiveCutoff;
  int samples = 0;
  std::uint64_t seed = 1;
};

int run_check_beta(const BetaFlags& f, const Sink& sink) {
  const Graph g = read_graph_file(f.graph);
  const auto c = is_beta_graph(g, f.beta, f.cutoff, f.samples, f.seed);
  sink.emit(to_json(c, f.beta));
  return c.holds ? 0 : 1;
}

struct SpectrumFlags {
  std::string graph;
  long long budget = kDefaultOracleBudget;
  bool witnesses = false;
  bool csv = false;
};

int run_spectrum(const SpectrumFlags& f, const Sink& sink) {
  const Graph g = read_graph_file(f.graph);
  const auto s = cycle_spectrum(g, f.budget);
  if (f.csv) {
    std::string text = "length\n";
    for (int l : s.lengths) text += std::to_string(l) + "\n";
    sink.emit(text);
  } else {
    sink.emit(to_json(s, f.witnesses));
  }
  return s.complete ? 0 : 1;
}

struct Thm2Flags {
  std::string graph;
  AlphaFlags alpha;
  bool csv = false;
};

std::string cycles_csv(const std::vector<std::pair<int, const CycleCertificate*>>& rows) {
  std::string text = "target,length,vertices\n";
  for (const auto& [target, c] : rows) {
    text += std::to_string(target) + "," + std::to_string(c->length()) + ",";
    for (std::size_t i = 0; i < c->vertices().size(); ++i) text += (i ? " " : "") + std::to_string(c->vertices()[i]);
    text += "\n";
  }
  return text;
}

int run_thm2_cmd(const Thm2Flags& f, const Sink& sink) {
  const Graph g = read_graph_file(f.graph);
  const auto [alpha, kind] = f.alpha.resolve(g);
  const auto tr = run_thm2(g, alpha);
  if (f.csv) {
    std::vector<std::pair<int, const CycleCertificate*>> rows;
    for (std::size_t i = 0; i < tr.cycles.size(); ++i) rows.emplace_back(static_cast<int>(i), &tr.cycles[i]);
    sink.emit(cycles_csv(rows));
    return 0;
  }
  Json j{{"n", g.order()}, {"alpha_kind", kind}};
  const Json trace = to_json(tr);
  for (const auto& [key, value] : trace.items()) j[key] = value;
  sink.emit(j);
  return 0;
}

struct Thm1Flags {
  std::string graph;
  AlphaFlags alpha;
  std::string preset = "practical";
  std::vector<std::string> overrides;
  std::vector<int> ells;
  std::string ell_range;
  std::string trace;
  bool csv = false;
};

void apply_override(PipelineConstants& c, const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos) throw Usage("--set expects name=value, got \"" + kv + "\"");
  const std::string name = kv.substr(0, eq);
  double v = 0.0;
  try {
    v = std::stod(kv.substr(eq + 1));
  } catch (const std::exception&) {
    throw Usage("--set " + name + ": not a number");
  }
  const std::map<std::string, double*> fields{{"c0", &c.c0},
                                              {"c1", &c.c1},
                                              {"c2", &c.c2},
                                              {"mu", &c.mu},
                                              {"a", &c.a},
                                              {"a1", &c.a1},
                                              {"a2", &c.a2},
                                              {"skeleton_fraction", &c.skeleton_fraction},
                                              {"absorb_fraction", &c.absorb_fraction},
                                              {"stage_fraction", &c.stage_fraction},
                                              {"level_fraction", &c.level_fraction},
                                              {"eps", &c.eps}};
  if (name == "delta") {
    c.delta = static_cast<int>(v);
  } else if (name == "log2_c3") {
    c.log2_c3 = v;
    c.c3 = std::exp2(v);
  } else if (auto it = fields.find(name); it != fields.end()) {
    *it->second = v;
    if (name == "a2") c.log2_a2 = std::log2(v);
  } else {
    throw Usage("--set: unknown constant \"" + name + "\"");
  }
}

int run_thm1_cmd(const Thm1Flags& f, const Sink& sink) {
  const Graph g = read_graph_file(f.graph);
  const auto [alpha, kind] = f.alpha.resolve(g);
  PipelineConstants consts = f.preset == "paper" ? paper_constants(alpha) : practical_constants();
  for (const auto& kv : f.overrides) apply_override(consts, kv);
  const auto window = thm1_target_range(g.order(), consts);
  std::vector<int> targets = f.ells;
  if (!f.ell_range.empty()) {
    const auto [lo, hi] = parse_range(f.ell_range);
    for (int ell = lo; ell <= hi; ++ell) targets.push_back(ell);
  }
  if (targets.empty()) {
    for (int ell = window.first; ell <= window.second; ++ell) targets.push_back(ell);
  }
  const auto run = run_thm1(g, alpha, consts, targets);
  if (!f.trace.empty()) Sink{sink.out, f.trace}.emit(to_json(run.trace).dump(1) + "\n");

  bool all_ok = true;
  for (const auto& o : run.outcomes) all_ok = all_ok && o.cycle.has_value();
  if (f.csv) {
    std::vector<std::pair<int, const CycleCertificate*>> rows;
    for (const auto& o : run.outcomes) {
      if (o.cycle) rows.emplace_back(o.ell, &*o.cycle);
    }
    sink.emit(cycles_csv(rows));
    return all_ok ? 0 : 1;
  }
  Json j{{"n", g.order()},
         {"alpha", alpha},
         {"alpha_kind", kind},
         {"constants", to_json(consts)},
         {"range", {window.first, window.second}},
         {"m", run.trace.m},
         {"p_length", run.trace.p.length()},
         {"checks", to_json(run.trace.log)},
         {"targets", to_json(run)["targets"]}};
  sink.emit(j);
  return all_ok ? 0 : 1;
}

struct Thm3Flags {
  std::string graph;
  double beta = 0.1;
  std::optional<int> ell;
  std::string ell_range;
  std::string variant = "auto";
  std::string gate = "structural";
  std::uint64_t seed = 1;
  int retries = 8;
  bool csv = false;
};

int run_thm3_cmd(const Thm3Flags& f, const Sink& sink) {
  if (f.ell.has_value() == !f.ell_range.empty()) throw Usage("thm3 needs exactly one of --ell and --ell-range");
  const Graph g = read_graph_file(f.graph);
  Thm3Options opt;
  if (f.variant != "auto") opt.variant = f.variant == "broad" ? BroomVariant::broad : BroomVariant::binary;
  opt.gate = f.gate == "theorem" ? RangeGate::theorem : RangeGate::structural;
  opt.seed = f.seed;
  opt.retries = f.retries;

  if (f.ell) {
    const auto r = run_thm3(g, f.beta, *f.ell, opt);
    if (f.csv) {
      sink.emit(cycles_csv({{r.ell, &r.cycle}}));
    } else {
      sink.emit(to_json(r));
    }
    return 0;
  }
  const auto [lo, hi] = parse_range(f.ell_range);
  Json results = Json::array();
  std::vector<Thm3Result> found;
  found.reserve(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
  bool all_ok = true;
  for (int ell = lo; ell <= hi; ++ell) {
    try {
      found.push_back(run_thm3(g, f.beta, ell, opt));
      results.push_back({{"ell", ell}, {"variant", to_string(found.back().variant)}, {"cycle", to_json(found.back().cycle)}});
    } catch (const Error& e) {
      all_ok = false;
      Json err = error_json(e);
      err["ell"] = ell;
      results.push_back(std::move(err));
    }
  }
  if (f.csv) {
    std::vector<std::pair<int, const CycleCertificate*>> rows;
    for (const auto& r : found) rows.emplace_back(r.ell, &r.cycle);
    sink.emit(cycles_csv(rows));
  } else {
    sink.emit(Json{{"beta", f.beta}, {"n", g.order()}, {"results", std::move(results)}});
  }
  return all_ok ? 0 : 1;
}

struct ExperimentFlags {
  std::string spec;
  std::optional<std::uint64_t> seed;
  int workers = 0;
};

int run_experiment_cmd(const ExperimentFlags& f, const Sink& sink) {
  auto spec = parse_experiment_spec(read_json(f.spec));
  if (f.seed) {
    auto j = read_json(f.spec);
    j["seed"] = *f.seed;
    spec = parse_experiment_spec(j);
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = run_experiment(spec, f.workers);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_report(spec, report, secs);
  sink.emit(report.summary);
  return 0;
}

struct ValidateFlags {
  std::string graph;
  std::vector<std::string> artifacts;
};

int run_validate(const ValidateFlags& f, const Sink& sink) {
  const Graph g = read_graph_file(f.graph);
  int total = 0, valid = 0;
  Json invalid = Json::array();
  for (const auto& path : f.artifacts) {
    const auto cycles = collect_cycles(read_json(path));
    for (std::size_t i = 0; i < cycles.size(); ++i, ++total) {
      try {
        validate_cycle(g, cycles[i]);
        ++valid;
      } catch (const NotACycle& e) {
        invalid.push_back({{"file", path}, {"index", i}, {"reason", e.what()}});
      }
    }
  }
  sink.emit(Json{{"cycles", total}, {"valid", valid}, {"invalid", invalid}});
  return valid == total ? 0 : 1;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle lengths in expanding graphs: generators, oracles and constructive pipelines", "expcycles"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the result to a file instead of stdout");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph family");
  gen_cmd->add_option("--family", gen.family, "graph family")->required()->check(CLI::IsMember(family_names()));
  for (const char* name : {"n", "d", "a", "b", "p", "beta", "size", "leaves"}) {
    gen_cmd->add_option_function<double>(std::string("--") + name, [&gen, name](double v) { gen.raw[name] = v; },
                                         std::string("family parameter ") + name);
  }
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--subdivide", gen.subdivide, "replace every edge by a path of m+1 edges");
  gen_cmd->add_option("--format", gen.format, "json or edge-list (default from --out extension)")
      ->check(CLI::IsMember({"json", "edge-list", "auto"}));
  gen_cmd->add_option("--out", gen.out, "graph file to write");

  ExpansionFlags ex;
  auto* ex_cmd = app.add_subcommand("check-expansion", "certify or refute vertex expansion");
  ex_cmd->add_option("graph", ex.graph, "graph file")->required();
  auto* exact_flag = ex_cmd->add_flag("--exact", ex.exact, "exhaustive minimum over |U| <= k");
  auto* spectral_flag = ex_cmd->add_flag("--spectral", ex.spectral, "eigenvalue bound (regular graphs)");
  auto* refute_opt = ex_cmd->add_option("--refute", ex.refute, "search for a set expanding less than ALPHA");
  exact_flag->excludes(spectral_flag)->excludes(refute_opt);
  spectral_flag->excludes(refute_opt);
  ex_cmd->add_option("--k", ex.k, "largest set size (default ceil(n/2))");
  ex_cmd->add_option("--cutoff", ex.cutoff, "largest n for the exhaustive check");
  ex_cmd->add_option("--trials", ex.trials, "refuter restarts");
  ex_cmd->add_option("--seed", ex.seed, "refuter seed");

  BetaFlags beta;
  auto* beta_cmd = app.add_subcommand("check-beta", "check the beta-graph property");
  beta_cmd->add_option("graph", beta.graph, "graph file")->required();
  beta_cmd->add_option("--beta", beta.beta, "beta")->required();
  beta_cmd->add_option("--cutoff", beta.cutoff, "largest n for the exhaustive check");
  beta_cmd->add_option("--samples", beta.samples, "one-sided sampling trials beyond the cutoff");
  beta_cmd->add_option("--seed", beta.seed, "sampling seed");

  SpectrumFlags sp;
  auto* sp_cmd = app.add_subcommand("spectrum", "all cycle lengths by exhaustive search");
  sp_cmd->add_option("graph", sp.graph, "graph file")->required();
  sp_cmd->add_option("--budget", sp.budget, "search node budget");
  sp_cmd->add_flag("--witnesses", sp.witnesses, "include one cycle per length");
  sp_cmd->add_flag("--csv", sp.csv, "one length per line");

  Thm2Flags t2;
  auto* t2_cmd = app.add_subcommand("thm2", "distinct cycle lengths from a tree and a long path");
  t2_cmd->add_option("graph", t2.graph, "graph file")->required();
  t2.alpha.add(t2_cmd);
  t2_cmd->add_flag("--csv", t2.csv, "cycles as CSV");

  Thm1Flags t1;
  auto* t1_cmd = app.add_subcommand("thm1", "cycles of prescribed lengths in an expander");
  t1_cmd->add_option("graph", t1.graph, "graph file")->required();
  t1.alpha.add(t1_cmd);
  t1_cmd->add_option("--preset", t1.preset, "practical or paper")->check(CLI::IsMember({"practical", "paper"}));
  t1_cmd->add_option("--set", t1.overrides, "override a constant, name=value");
  t1_cmd->add_option("--ell", t1.ells, "target lengths");
  t1_cmd->add_option("--ell-range", t1.ell_range, "target range lo:hi");
  t1_cmd->add_option("--trace", t1.trace, "write the full stage trace to this file");
  t1_cmd->add_flag("--csv", t1.csv, "cycles as CSV");

  Thm3Flags t3;
  auto* t3_cmd = app.add_subcommand("thm3", "exact cycle lengths in a beta-graph by tree embedding");
  t3_cmd->add_option("graph", t3.graph, "graph file")->required();
  t3_cmd->add_option("--beta", t3.beta, "beta")->required();
  t3_cmd->add_option("--ell", t3.ell, "target length");
  t3_cmd->add_option("--ell-range", t3.ell_range, "target range lo:hi");
  t3_cmd->add_option("--variant", t3.variant, "auto, broad or binary")
      ->check(CLI::IsMember({"auto", "broad", "binary"}));
  t3_cmd->add_option("--gate", t3.gate, "structural or theorem")->check(CLI::IsMember({"structural", "theorem"}));
  t3_cmd->add_option("--seed", t3.seed, "embedding seed");
  t3_cmd->add_option("--retries", t3.retries, "embedding restarts");
  t3_cmd->add_flag("--csv", t3.csv, "cycles as CSV");

  ExperimentFlags xp;
  auto* xp_cmd = app.add_subcommand("experiment", "run a sweep described by a JSON spec");
  xp_cmd->add_option("spec", xp.spec, "experiment spec file")->required();
  xp_cmd->add_option("--seed", xp.seed, "override the spec's base seed");
  xp_cmd->add_option("--workers", xp.workers, "worker threads (capped by EXPCYCLES_WORKERS)");

  ValidateFlags va;
  auto* va_cmd = app.add_subcommand("validate", "re-validate every cycle found in JSON artifacts");
  va_cmd->add_option("graph", va.graph, "graph file")->required();
  va_cmd->add_option("artifacts", va.artifacts, "JSON files holding cycles")->required();

  // Let subcommands take --out too.
  for (auto* cmd : {ex_cmd, beta_cmd, sp_cmd, t2_cmd, t1_cmd, t3_cmd, xp_cmd, va_cmd}) {
    cmd->add_option("--out", out_path, "write the result to a file instead of stdout");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  const Sink sink{out, out_path};
  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (ex_cmd->parsed()) return run_check_expansion(ex, sink);
    if (beta_cmd->parsed()) return run_check_beta(beta, sink);
    if (sp_cmd->parsed()) return run_spectrum(sp, sink);
    if (t2_cmd->parsed()) return run_thm2_cmd(t2, sink);
    if (t1_cmd->parsed()) return run_thm1_cmd(t1, sink);
    if (t3_cmd->parsed()) return run_thm3_cmd(t3, sink);
    if (xp_cmd->parsed()) return run_experiment_cmd(xp, sink);
    if (va_cmd->parsed()) return run_validate(va, sink);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_input) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    out << error_json(e).dump() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace expcycles
