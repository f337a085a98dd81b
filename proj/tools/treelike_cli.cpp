// Command-line front end: grow treelike models, evaluate their distance-sum
// and first-passage formulas exactly, audit every formula against oracles,
// fit scaling laws, and scan for dimension coincidences.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure
// (a canonical-tier formula mismatched its oracle), 3 resource cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "treelike/treelike.hpp"

namespace {

using nlohmann::ordered_json;
using namespace treelike;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Relative output paths land in TREELIKE_OUTPUT_DIR when it is set.
std::string resolve_output_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("TREELIKE_OUTPUT_DIR");
  if (!dir || !*dir) return path;
  std::string full = dir;
  if (full.back() != '/') full.push_back('/');
  return full + path;
}

// Writes to a file (resolved against the output directory) or to stdout.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (path.empty()) return;
    resolved_ = resolve_output_path(path);
    file_.open(resolved_);
    if (!file_)
      throw Error(Errc::BadFormat, "cannot open output file: " + resolved_);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  const std::string& resolved_path() const { return resolved_; }

 private:
  std::ofstream file_;
  std::string resolved_;
};

// ---------------------------------------------------------------------------
// Model-spec flags shared by grow/wiener/mfpt/scale. A config file (same
// key=value grammar as the spec serialization) is read first; explicit flags
// override individual fields.

struct SpecOptions {
  std::string config, family, seed;
  unsigned m = 1, w = 1, n = 3, t = 1;
  CLI::Option *config_opt = nullptr, *family_opt = nullptr, *seed_opt = nullptr;
  CLI::Option *m_opt = nullptr, *w_opt = nullptr, *n_opt = nullptr, *t_opt = nullptr;

  void attach(CLI::App* cmd) {
    config_opt = cmd->add_option("--config", config,
                                 "Config file holding a key=value model spec");
    family_opt = cmd->add_option(
        "--family", family,
        "Model family: subdivision|star_fractal|tgraph|cayley|exponential");
    m_opt = cmd->add_option("-m,--m", m, "Subdivision order / leaves per branch vertex");
    w_opt = cmd->add_option("-w,--w", w, "Branch vertices inserted per edge");
    n_opt = cmd->add_option("-n,--n", n, "Branching number");
    t_opt = cmd->add_option("-t,--t", t, "Generations");
    seed_opt = cmd->add_option("--seed", seed,
                               "Seed tree: default|edge|star:K|path:K|file:PATH");
  }

  ModelSpec build() const {
    ModelSpec spec;
    bool have_family = false;
    if (config_opt->count() > 0) {
      std::ifstream in(config);
      if (!in) throw Error(Errc::BadFormat, "cannot open config file: " + config);
      std::ostringstream joined;
      std::string line;
      while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        joined << line << ' ';
      }
      spec = parse_model_spec(joined.str());
      have_family = true;
    }
    if (family_opt->count() > 0) {
      auto f = parse_family(family);
      if (!f) throw Error(Errc::BadFormat, "unknown family: " + family);
      spec.family = *f;
      have_family = true;
    }
    if (!have_family)
      throw Error(Errc::BadFormat, "a model family is required (--family or --config)");
    if (m_opt->count() > 0) spec.m = m;
    if (w_opt->count() > 0) spec.w = w;
    if (n_opt->count() > 0) spec.n = n;
    if (t_opt->count() > 0) spec.t = t;
    if (seed_opt->count() > 0) spec.seed = parse_seed(seed);
    validate(spec);
    return spec;
  }
};

// ---------------------------------------------------------------------------
// Exact evaluation shared by wiener/mfpt: iterate the one-step recursions
// (the canonical route), keeping the previous generation for the one-step
// audit variants.

struct CanonicalEval {
  ExactRatio seed_s;
  ExactInt seed_vertices;
  ExactRatio value;                // distance sum at generation t
  ExactInt vertices;               // |V| at generation t
  std::optional<ExactRatio> prev_s;  // generation t-1, when t >= 1
  std::optional<ExactInt> prev_vertices;
};

CanonicalEval canonical_eval(const ModelSpec& spec, unsigned threads) {
  validate(spec);
  CanonicalEval out;
  if (spec.family == Family::Cayley) {
    LeafGrowthState st;
    unsigned steps;
    if (spec.seed.kind == SeedSpec::Kind::Default) {
      st = leaf_growth_star_state(spec.n);
      steps = spec.t - 1;
    } else {
      Tree seed = seed_tree(spec);
      st = leaf_growth_state(seed);
      steps = spec.t;
    }
    out.seed_s = st.s;
    out.seed_vertices = st.vertices;
    for (unsigned i = 0; i < steps; ++i) {
      out.prev_s = st.s;
      out.prev_vertices = st.vertices;
      st = cayley_general_step(st, spec.n - 1);
    }
    out.value = st.s;
    out.vertices = st.vertices;
    return out;
  }
  Tree seed = seed_tree(spec);
  ExactRatio s(wiener_oracle(seed, threads));
  ExactInt v(seed.vertex_count());
  out.seed_s = s;
  out.seed_vertices = v;
  for (unsigned i = 0; i < spec.t; ++i) {
    out.prev_s = s;
    out.prev_vertices = v;
    switch (spec.family) {
      case Family::Subdivision:
        s = subdivisionm_step(s, v, spec.m);
        v = (v - 1) * (spec.m + 1) + 1;
        break;
      case Family::StarFractal:
        s = star_fractal_step(s, v, spec.w, spec.m);
        v = (v - 1) * (ExactInt(spec.w) * (spec.m + 1) + 1) + 1;
        break;
      case Family::TGraph:
        s = star_fractal_step(s, v, 1, 1);
        v = (v - 1) * 3 + 1;
        break;
      case Family::Exponential:
        s = exponential_step(s, v, spec.m);
        v *= spec.m + 1;
        break;
      case Family::Cayley:
        break;  // handled above
    }
  }
  out.value = s;
  out.vertices = v;
  return out;
}

// ---------------------------------------------------------------------------
// Value rows: every evaluation route for one spec, rendered uniformly.

struct ValueRow {
  std::string route;
  std::string tier;  // canonical | as_printed | oracle
  std::optional<ExactRatio> value;
};

const char* row_verdict(const ValueRow& row, const std::optional<ExactRatio>& oracle) {
  if (!row.value) return "undefined";
  if (!oracle) return "-";
  return *row.value == *oracle ? "match" : "mismatch";
}

std::vector<ValueRow> wiener_routes(const ModelSpec& spec, const CanonicalEval& ev) {
  std::vector<ValueRow> rows;
  auto formula_row = [&](FormulaId id, std::optional<ExactRatio> value) {
    rows.push_back({formula_name(id), tier_name(formula_tier(id)), std::move(value)});
  };
  rows.push_back({"canonical", "canonical", ev.value});
  const ExactRatio& s0 = ev.seed_s;
  const ExactInt& n0 = ev.seed_vertices;
  switch (spec.family) {
    case Family::Subdivision:
      if (spec.m == 1) {
        formula_row(FormulaId::Subdivision1Closed, subdivision1_closed(s0, n0, spec.t));
        if (n0 == 2)
          formula_row(FormulaId::Subdivision1PathClosed, subdivision1_path_closed(spec.t));
      }
      formula_row(FormulaId::SubdivisionMClosed,
                  subdivisionm_closed(s0, n0, spec.m, spec.t,
                                      SubdivisionMDenominator::TwoNMinus1));
      break;
    case Family::StarFractal:
      if (spec.w == 1)
        formula_row(FormulaId::Star1MClosed, star1m_closed(s0, n0, spec.m, spec.t));
      formula_row(FormulaId::StarFractalClosed,
                  star_fractal_closed(s0, n0, spec.w, spec.m, spec.t));
      if (ev.prev_s) {
        formula_row(FormulaId::StarFractalStepCompact,
                    star_fractal_step_compact(*ev.prev_s, *ev.prev_vertices, spec.w, spec.m));
        formula_row(FormulaId::StarFractalStepExpanded,
                    star_fractal_step_expanded(*ev.prev_s, *ev.prev_vertices, spec.w, spec.m));
      }
      break;
    case Family::TGraph:
      formula_row(FormulaId::TGraphClosed, tgraph_closed(spec.t));
      formula_row(FormulaId::Star1MClosed, star1m_closed(s0, n0, 1, spec.t));
      break;
    case Family::Cayley:
      if (spec.seed.kind == SeedSpec::Kind::Default) {
        formula_row(FormulaId::CayleyClosed, cayley_closed(spec.n, spec.t).s);
        if (spec.t >= 2)
          formula_row(
              FormulaId::CayleyGeneralUnrolled,
              iterate_leaf_growth(leaf_growth_star_state(spec.n), spec.n - 1, spec.t - 1, false)
                  .s);
      } else if (spec.t >= 1) {
        formula_row(FormulaId::CayleyGeneralUnrolled,
                    iterate_leaf_growth(leaf_growth_state(seed_tree(spec)), spec.n - 1, spec.t,
                                        false)
                        .s);
      }
      break;
    case Family::Exponential:
      formula_row(FormulaId::ExponentialClosed, exponential_closed(s0, n0, spec.m, spec.t));
      if (n0 == 2)
        formula_row(FormulaId::ExponentialEdgeClosed, exponential_edge_closed(spec.m, spec.t));
      break;
  }
  return rows;
}

void write_rows_text(std::ostream& os, const std::vector<ValueRow>& rows,
                     const std::optional<ExactRatio>& oracle) {
  char line[128];
  std::snprintf(line, sizeof line, "%-28s %-11s %-10s %s\n", "route", "tier", "verdict",
                "value");
  os << line;
  for (const ValueRow& row : rows) {
    std::snprintf(line, sizeof line, "%-28s %-11s %-10s ", row.route.c_str(),
                  row.tier.c_str(), row_verdict(row, oracle));
    os << line << (row.value ? to_string(*row.value) : "undefined") << "\n";
  }
}

ordered_json rows_json(const std::vector<ValueRow>& rows,
                       const std::optional<ExactRatio>& oracle) {
  ordered_json arr = ordered_json::array();
  for (const ValueRow& row : rows) {
    ordered_json j;
    j["route"] = row.route;
    j["tier"] = row.tier;
    j["value"] = row.value ? ordered_json(to_string(*row.value)) : ordered_json(nullptr);
    j["verdict"] = row_verdict(row, oracle);
    arr.push_back(std::move(j));
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

int run_grow(const SpecOptions& so, const std::string& format, const std::string& output) {
  ModelSpec spec = so.build();
  Counts predicted = predicted_counts(spec);
  Tree tree = grow(spec);
  std::vector<std::string> comments = {
      "treelike " + to_string(spec),
      "predicted " + to_string(predicted.vertices) + " " + to_string(predicted.edges)};
  OutputSink sink(output);
  std::ostream& os = sink.stream();
  if (format == "edges" || format == "text") {
    write_edge_list(tree, os, comments);
  } else if (format == "dot") {
    write_dot(tree, os, comments);
  } else if (format == "json") {
    ordered_json j;
    j["spec"] = to_string(spec);
    j["predicted"]["vertices"] = to_string(predicted.vertices);
    j["predicted"]["edges"] = to_string(predicted.edges);
    j["vertices"] = tree.vertex_count();
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : tree.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["generation_tags"] = tree.generation_tags();
    os << j.dump(2) << "\n";
  } else {
    throw Error(Errc::BadFormat, "grow supports formats: edges|dot|json|text");
  }
  return 0;
}

int run_wiener(const SpecOptions& so, const std::string& format, const std::string& output,
               unsigned threads, bool verbose) {
  ModelSpec spec = so.build();
  CanonicalEval ev = canonical_eval(spec, threads);
  std::vector<ValueRow> rows = wiener_routes(spec, ev);
  std::optional<ExactRatio> oracle;
  if (ev.vertices <= ExactInt(static_cast<std::uint64_t>(kOracleVertexCap)))
    oracle = ExactRatio(wiener_oracle(grow(spec), threads));
  std::optional<CayleyClosedForms> inter;
  if (verbose && spec.family == Family::Cayley && spec.seed.kind == SeedSpec::Kind::Default)
    inter = cayley_closed(spec.n, spec.t);

  OutputSink sink(output);
  std::ostream& os = sink.stream();
  if (format == "text") {
    os << "spec: " << to_string(spec) << "\n";
    os << "seed: vertices=" << to_string(ev.seed_vertices) << " wiener=" << to_string(ev.seed_s)
       << "\n";
    os << "vertices: " << to_string(ev.vertices) << "\n";
    os << "oracle: " << (oracle ? to_string(*oracle) : std::string("skipped")) << "\n";
    write_rows_text(os, rows, oracle);
    if (inter) {
      os << "intermediates: a=" << to_string(inter->a) << " theta=" << to_string(inter->theta)
         << " omega=" << to_string(inter->omega) << " gamma=" << to_string(inter->gamma)
         << "\n";
    }
  } else if (format == "json") {
    ordered_json j;
    j["spec"] = to_string(spec);
    j["seed"]["vertices"] = to_string(ev.seed_vertices);
    j["seed"]["wiener"] = to_string(ev.seed_s);
    j["vertices"] = to_string(ev.vertices);
    j["oracle"] = oracle ? ordered_json(to_string(*oracle)) : ordered_json(nullptr);
    j["routes"] = rows_json(rows, oracle);
    if (inter) {
      j["intermediates"]["a"] = to_string(inter->a);
      j["intermediates"]["theta"] = to_string(inter->theta);
      j["intermediates"]["omega"] = to_string(inter->omega);
      j["intermediates"]["gamma"] = to_string(inter->gamma);
    }
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "route,tier,value,verdict\n";
    for (const ValueRow& row : rows) {
      os << row.route << ',' << row.tier << ','
         << (row.value ? to_string(*row.value) : std::string()) << ','
         << row_verdict(row, oracle) << "\n";
    }
    if (oracle) os << "oracle,oracle," << to_string(*oracle) << ",match\n";
  } else {
    throw Error(Errc::BadFormat, "wiener supports formats: text|json|csv");
  }
  return 0;
}

int run_mfpt(const SpecOptions& so, const std::string& format, const std::string& output,
             unsigned threads, std::uint64_t mc_trials, std::uint64_t rng_seed,
             std::uint64_t mc_max_steps) {
  ModelSpec spec = so.build();
  CanonicalEval ev = canonical_eval(spec, threads);
  if (ev.vertices < 2)
    throw Error(Errc::BadParam, "mean first-passage time needs at least two vertices");
  ExactRatio exact = ExactRatio(2) * ev.value / ExactRatio(ev.vertices);
  ExactRatio lemma = ev.value / ExactRatio(ev.vertices);

  std::optional<ExactRatio> solver;
  std::optional<McResult> mc;
  bool need_tree =
      mc_trials > 0 || ev.vertices <= ExactInt(static_cast<std::uint64_t>(kOracleVertexCap));
  if (need_tree) {
    Tree tree = grow(spec);
    if (tree.vertex_count() <= kOracleVertexCap) solver = mfpt_exact(tree, threads);
    if (mc_trials > 0) {
      McParams params;
      params.trials = mc_trials;
      params.seed = rng_seed;
      params.max_steps = mc_max_steps;
      params.threads = threads;
      mc = mc_mfpt(tree, params);
    }
  }

  OutputSink sink(output);
  std::ostream& os = sink.stream();
  if (format == "text") {
    os << "spec: " << to_string(spec) << "\n";
    os << "vertices: " << to_string(ev.vertices) << "\n";
    os << "wiener: " << to_string(ev.value) << "\n";
    os << "exact: " << to_string(exact) << "\n";
    os << "solver: " << (solver ? to_string(*solver) : std::string("skipped")) << "\n";
    os << "printed_lemma: " << to_string(lemma) << "\n";
    if (mc) {
      os << "mc: mean=" << fmt_double(mc->mean) << " std_error=" << fmt_double(mc->std_error)
         << " trials=" << mc->trials << " completed=" << mc->completed
         << " truncated=" << mc->truncated << " max_steps=" << mc->max_steps
         << " total_steps=" << to_string(mc->total_steps) << " rng_seed=" << rng_seed << "\n";
    }
  } else if (format == "json") {
    ordered_json j;
    j["spec"] = to_string(spec);
    j["vertices"] = to_string(ev.vertices);
    j["wiener"] = to_string(ev.value);
    j["exact"] = to_string(exact);
    j["solver"] = solver ? ordered_json(to_string(*solver)) : ordered_json(nullptr);
    j["printed_lemma"] = to_string(lemma);
    if (mc) {
      j["mc"]["mean"] = mc->mean;
      j["mc"]["std_error"] = mc->std_error;
      j["mc"]["trials"] = mc->trials;
      j["mc"]["completed"] = mc->completed;
      j["mc"]["truncated"] = mc->truncated;
      j["mc"]["max_steps"] = mc->max_steps;
      j["mc"]["total_steps"] = to_string(mc->total_steps);
      j["mc"]["rng_seed"] = rng_seed;
    } else {
      j["mc"] = nullptr;
    }
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "quantity,value\n";
    os << "vertices," << to_string(ev.vertices) << "\n";
    os << "wiener," << to_string(ev.value) << "\n";
    os << "exact," << to_string(exact) << "\n";
    os << "solver," << (solver ? to_string(*solver) : std::string()) << "\n";
    os << "printed_lemma," << to_string(lemma) << "\n";
    if (mc) {
      os << "mc_mean," << fmt_double(mc->mean) << "\n";
      os << "mc_std_error," << fmt_double(mc->std_error) << "\n";
      os << "mc_trials," << mc->trials << "\n";
      os << "mc_completed," << mc->completed << "\n";
      os << "mc_truncated," << mc->truncated << "\n";
    }
  } else {
    throw Error(Errc::BadFormat, "mfpt supports formats: text|json|csv");
  }
  return 0;
}

int run_verify(const AuditGrid& grid, const std::string& format, const std::string& output,
               const std::string& ledger_path) {
  std::vector<AuditRecord> records = run_audit(grid);
  std::vector<FormulaSummary> rows = summarize(records);
  bool pass = canonical_all_match(records);

  if (!ledger_path.empty()) {
    std::string resolved = resolve_output_path(ledger_path);
    std::ofstream ledger(resolved);
    if (!ledger) throw Error(Errc::BadFormat, "cannot open ledger file: " + resolved);
    write_ledger_jsonl(records, ledger);
  }

  OutputSink sink(output);
  std::ostream& os = sink.stream();
  if (format == "text") {
    write_ledger_text(rows, os);
    os << "records: " << records.size() << "\n";
    os << "canonical: " << (pass ? "PASS" : "FAIL") << "\n";
  } else if (format == "json") {
    ordered_json j;
    j["records"] = records.size();
    j["canonical_pass"] = pass;
    ordered_json arr = ordered_json::array();
    for (const FormulaSummary& row : rows) {
      ordered_json r;
      r["formula"] = formula_name(row.formula);
      r["tier"] = tier_name(row.tier);
      r["points"] = row.points;
      r["matches"] = row.matches;
      r["mismatches"] = row.mismatches;
      r["undefined"] = row.undefined;
      r["pass_rate"] = row.pass_rate();
      r["first_mismatch"] = row.first_mismatch.empty()
                                ? ordered_json(nullptr)
                                : ordered_json(row.first_mismatch);
      arr.push_back(std::move(r));
    }
    j["formulas"] = std::move(arr);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    write_ledger_csv(records, os);
  } else {
    throw Error(Errc::BadFormat, "verify supports formats: text|json|csv");
  }
  return pass ? 0 : 2;
}

int run_scale(const SpecOptions& so, const std::string& format, const std::string& output,
              unsigned t_lo, unsigned t_hi) {
  ModelSpec spec = so.build();
  ScalingFit fit = scaling_fit(spec, t_lo, t_hi);
  std::vector<ScalingPoint> series = scaling_series(spec, t_lo, t_hi);
  const char* law = fit.law == ScalingLaw::PowerLaw ? "power" : "linear_in_time";

  OutputSink sink(output);
  std::ostream& os = sink.stream();
  if (format == "text") {
    os << "spec: " << to_string(spec) << "\n";
    os << "law: " << law << "\n";
    os << "points: " << fit.points << "\n";
    os << "fitted: " << fmt_double(fit.exponent) << "\n";
    os << "analytic: " << fmt_double(fit.analytic_exponent) << "\n";
    os << "printed: "
       << (fit.printed_exponent ? fmt_double(*fit.printed_exponent) : std::string("-")) << "\n";
    os << "r_squared: " << fmt_double(fit.r_squared) << "\n";
  } else if (format == "json") {
    ordered_json j;
    j["spec"] = to_string(spec);
    j["law"] = law;
    j["points"] = fit.points;
    j["fitted"] = fit.exponent;
    j["analytic"] = fit.analytic_exponent;
    j["printed"] =
        fit.printed_exponent ? ordered_json(*fit.printed_exponent) : ordered_json(nullptr);
    j["r_squared"] = fit.r_squared;
    ordered_json arr = ordered_json::array();
    for (const ScalingPoint& p : series) {
      ordered_json q;
      q["t"] = p.t;
      q["vertices"] = to_string(p.vertices);
      q["wiener"] = to_string(p.wiener);
      q["mfpt"] = to_string(p.mfpt);
      arr.push_back(std::move(q));
    }
    j["series"] = std::move(arr);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    // Plot-ready columns; x,y are the fitted coordinates for the family's law.
    os << "t,vertices,wiener,mfpt,x,y\n";
    for (const ScalingPoint& p : series) {
      double x, y;
      if (fit.law == ScalingLaw::PowerLaw) {
        x = std::log(to_double(ExactRatio(p.vertices)));
        y = std::log(to_double(p.mfpt));
      } else {
        x = static_cast<double>(p.t);
        y = to_double(p.mfpt / ExactRatio(p.vertices));
      }
      os << p.t << ',' << to_string(p.vertices) << ',' << to_string(p.wiener) << ','
         << to_string(p.mfpt) << ',' << fmt_double(x) << ',' << fmt_double(y) << "\n";
    }
  } else {
    throw Error(Errc::BadFormat, "scale supports formats: text|json|csv");
  }
  return 0;
}

int run_solve_dim(unsigned m_max, unsigned w_max, unsigned n_max, const std::string& format,
                  const std::string& output) {
  std::vector<DimEqualitySolution> sols = dim_equality_scan(m_max, w_max, n_max);
  OutputSink sink(output);
  std::ostream& os = sink.stream();
  auto dim_of = [](const DimEqualitySolution& s) {
    return log_ratio_value(LogRatio{ExactInt(s.m) + 2, 2});
  };
  if (format == "text") {
    os << "bounds: m<=" << m_max << " w<=" << w_max << " n<=" << n_max << "\n";
    os << "solutions: " << sols.size() << "\n";
    for (const DimEqualitySolution& s : sols)
      os << "w=" << s.w << " n=" << s.n << " m=" << s.m << " dim=" << fmt_double(dim_of(s))
         << "\n";
  } else if (format == "json") {
    ordered_json j;
    j["bounds"]["m"] = m_max;
    j["bounds"]["w"] = w_max;
    j["bounds"]["n"] = n_max;
    ordered_json arr = ordered_json::array();
    for (const DimEqualitySolution& s : sols) {
      ordered_json q;
      q["w"] = s.w;
      q["n"] = s.n;
      q["m"] = s.m;
      q["dim"] = dim_of(s);
      arr.push_back(std::move(q));
    }
    j["solutions"] = std::move(arr);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "w,n,m,dim\n";
    for (const DimEqualitySolution& s : sols)
      os << s.w << ',' << s.n << ',' << s.m << ',' << fmt_double(dim_of(s)) << "\n";
  } else {
    throw Error(Errc::BadFormat, "solve-dim supports formats: text|json|csv");
  }
  return 0;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code == Errc::ResourceCap ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "treelike: exact distance sums, first-passage times, scaling fits, and "
      "formula audits for six families of treelike models"};
  app.require_subcommand(1);
  int rc = 0;

  // --- grow ---------------------------------------------------------------
  auto* grow_cmd = app.add_subcommand("grow", "Construct a model tree");
  static SpecOptions grow_spec;
  grow_spec.attach(grow_cmd);
  static std::string grow_format = "edges";
  static std::string grow_output;
  grow_cmd->add_option("--format", grow_format, "Output format: edges|dot|json")
      ->capture_default_str();
  grow_cmd->add_option("-o,--output", grow_output, "Output file (default: stdout)");
  grow_cmd->callback(
      [&] { rc = guarded([&] { return run_grow(grow_spec, grow_format, grow_output); }); });

  // --- wiener ---------------------------------------------------------------
  auto* wiener_cmd =
      app.add_subcommand("wiener", "Evaluate every distance-sum route for a model");
  static SpecOptions wiener_spec;
  wiener_spec.attach(wiener_cmd);
  static std::string wiener_format = "text";
  static std::string wiener_output;
  static unsigned wiener_threads = 1;
  static bool wiener_verbose = false;
  wiener_cmd->add_option("--format", wiener_format, "Output format: text|json|csv")
      ->capture_default_str();
  wiener_cmd->add_option("-o,--output", wiener_output, "Output file (default: stdout)");
  wiener_cmd->add_option("--threads", wiener_threads, "Worker threads")->capture_default_str();
  wiener_cmd->add_flag("--verbose", wiener_verbose, "Show closed-form intermediates");
  wiener_cmd->callback([&] {
    rc = guarded([&] {
      return run_wiener(wiener_spec, wiener_format, wiener_output, wiener_threads,
                        wiener_verbose);
    });
  });

  // --- mfpt ---------------------------------------------------------------
  auto* mfpt_cmd =
      app.add_subcommand("mfpt", "Mean first-passage time: exact routes and Monte Carlo");
  static SpecOptions mfpt_spec;
  mfpt_spec.attach(mfpt_cmd);
  static std::string mfpt_format = "text";
  static std::string mfpt_output;
  static unsigned mfpt_threads = 1;
  static std::uint64_t mc_trials = 0, rng_seed = 1, mc_max_steps = 0;
  mfpt_cmd->add_option("--format", mfpt_format, "Output format: text|json|csv")
      ->capture_default_str();
  mfpt_cmd->add_option("-o,--output", mfpt_output, "Output file (default: stdout)");
  mfpt_cmd->add_option("--threads", mfpt_threads, "Worker threads")->capture_default_str();
  mfpt_cmd->add_option("--mc-trials", mc_trials, "Monte Carlo trials (0: skip)")
      ->capture_default_str();
  mfpt_cmd->add_option("--rng-seed", rng_seed, "Monte Carlo seed")->capture_default_str();
  mfpt_cmd->add_option("--mc-max-steps", mc_max_steps,
                       "Walk step budget (0: 100*|V|^2)")
      ->capture_default_str();
  mfpt_cmd->callback([&] {
    rc = guarded([&] {
      return run_mfpt(mfpt_spec, mfpt_format, mfpt_output, mfpt_threads, mc_trials, rng_seed,
                      mc_max_steps);
    });
  });

  // --- verify ---------------------------------------------------------------
  auto* verify_cmd =
      app.add_subcommand("verify", "Audit every formula against oracles over a grid");
  static AuditGrid grid;
  static bool default_grid = false;
  static std::string verify_format = "text";
  static std::string verify_output;
  static std::string ledger_path = "ledger.jsonl";
  verify_cmd->add_flag("--default-grid", default_grid, "Use the default audit grid");
  verify_cmd->add_option("--step-seed-max", grid.step_seed_vertices,
                         "One-step audits: max seed vertices")
      ->capture_default_str();
  verify_cmd->add_option("--closed-seed-max", grid.closed_seed_vertices,
                         "Multi-step audits: max seed vertices")
      ->capture_default_str();
  verify_cmd->add_option("--max-m", grid.m_max, "Largest m")->capture_default_str();
  verify_cmd->add_option("--max-w", grid.w_max, "Largest w")->capture_default_str();
  verify_cmd->add_option("--max-t", grid.t_max, "Largest t")->capture_default_str();
  verify_cmd->add_option("--cayley-n-min", grid.cayley_n_min, "Smallest branching number")
      ->capture_default_str();
  verify_cmd->add_option("--cayley-n-max", grid.cayley_n_max, "Largest branching number")
      ->capture_default_str();
  verify_cmd->add_option("--cayley-t-max", grid.cayley_t_max, "Largest generation")
      ->capture_default_str();
  verify_cmd->add_option("--vertex-cap", grid.vertex_cap, "Skip points larger than this")
      ->capture_default_str();
  verify_cmd->add_option("--threads", grid.threads, "Worker threads")->capture_default_str();
  verify_cmd->add_option("--format", verify_format, "Summary format: text|json|csv")
      ->capture_default_str();
  verify_cmd->add_option("-o,--output", verify_output, "Summary file (default: stdout)");
  verify_cmd->add_option("--ledger", ledger_path,
                         "Record-level JSON-lines ledger file (empty: skip)")
      ->capture_default_str();
  verify_cmd->callback([&] {
    rc = guarded([&] { return run_verify(grid, verify_format, verify_output, ledger_path); });
  });

  // --- scale ---------------------------------------------------------------
  auto* scale_cmd =
      app.add_subcommand("scale", "Fit the first-passage scaling law of a family");
  static SpecOptions scale_spec;
  scale_spec.attach(scale_cmd);
  static std::string scale_format = "text";
  static std::string scale_output;
  static unsigned t_lo = 4, t_hi = 12;
  scale_cmd->add_option("--t-lo", t_lo, "First generation of the fit window")
      ->capture_default_str();
  scale_cmd->add_option("--t-hi", t_hi, "Last generation of the fit window")
      ->capture_default_str();
  scale_cmd->add_option("--format", scale_format, "Output format: text|json|csv")
      ->capture_default_str();
  scale_cmd->add_option("-o,--output", scale_output, "Output file (default: stdout)");
  scale_cmd->callback([&] {
    rc = guarded(
        [&] { return run_scale(scale_spec, scale_format, scale_output, t_lo, t_hi); });
  });

  // --- solve-dim ---------------------------------------------------------------
  auto* solve_cmd = app.add_subcommand(
      "solve-dim", "Scan for parameter triples whose two fractal dimensions agree");
  static unsigned solve_max = 50;
  static unsigned solve_m = 0, solve_w = 0, solve_n = 0;
  static std::string solve_format = "text";
  static std::string solve_output;
  solve_cmd->add_option("--max", solve_max, "Bound for m, w, and n")->capture_default_str();
  solve_cmd->add_option("--max-m", solve_m, "Bound for m alone (default: --max)");
  solve_cmd->add_option("--max-w", solve_w, "Bound for w alone (default: --max)");
  solve_cmd->add_option("--max-n", solve_n, "Bound for n alone (default: --max)");
  solve_cmd->add_option("--format", solve_format, "Output format: text|json|csv")
      ->capture_default_str();
  solve_cmd->add_option("-o,--output", solve_output, "Output file (default: stdout)");
  solve_cmd->callback([&] {
    rc = guarded([&] {
      return run_solve_dim(solve_m ? solve_m : solve_max, solve_w ? solve_w : solve_max,
                           solve_n ? solve_n : solve_max, solve_format, solve_output);
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return rc;
}
