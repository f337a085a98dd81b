#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "treelike/closed_forms.hpp"
#include "treelike/enumerate.hpp"
#include "treelike/exact.hpp"
#include "treelike/growth.hpp"
#include "treelike/random_walk.hpp"
#include "treelike/tree.hpp"

namespace treelike {

// ---------------------------------------------------------------------------
// The audit harness sweeps every formula over parameter grids, compares it
// against an independent oracle, and reports each point as a record. A
// mismatching formula is a first-class result, not a test failure: the
// ledger of discrepancies is part of the product.

enum class Verdict { Match, Mismatch, Undefined };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Undefined: return "undefined";
  }
  return "?";
}

using AuditParams = std::vector<std::pair<std::string, long long>>;

struct AuditRecord {
  FormulaId formula = FormulaId::PathClosedForm;
  Tier tier = Tier::Canonical;
  AuditParams params;
  ExactRatio oracle;
  std::optional<ExactRatio> value;  // empty when the formula is undefined here
  Verdict verdict = Verdict::Undefined;
  std::optional<ExactRatio> abs_diff;
};

inline AuditRecord make_audit_record(FormulaId formula, AuditParams params, ExactRatio oracle,
                                     std::optional<ExactRatio> value) {
  AuditRecord r;
  r.formula = formula;
  r.tier = formula_tier(formula);
  r.params = std::move(params);
  r.oracle = std::move(oracle);
  r.value = std::move(value);
  if (r.value) {
    r.abs_diff = *r.value >= r.oracle ? *r.value - r.oracle : r.oracle - *r.value;
    r.verdict = *r.abs_diff == 0 ? Verdict::Match : Verdict::Mismatch;
  }
  return r;
}

struct AuditGrid {
  unsigned step_seed_vertices = 12;   // one-step audits: every tree shape up to here
  unsigned closed_seed_vertices = 8;  // multi-step audits: every shape with 2..this vertices
  unsigned m_max = 4;
  unsigned w_max = 4;
  unsigned t_max = 3;
  unsigned cayley_n_min = 3;
  unsigned cayley_n_max = 6;
  unsigned cayley_t_max = 4;
  std::size_t vertex_cap = 6000;  // multi-step points that would exceed this are skipped
  unsigned threads = 1;
  bool operator==(const AuditGrid&) const = default;
};

inline std::string render_params(const AuditParams& params, char sep = ' ') {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out.push_back(sep);
    out += key;
    out.push_back('=');
    out += std::to_string(value);
  }
  return out;
}

namespace detail {

inline ExactRatio tree_wiener(const Tree& t, unsigned threads) {
  return ExactRatio(wiener_oracle(t, threads));
}

}  // namespace detail

inline std::vector<AuditRecord> run_audit(const AuditGrid& grid) {
  if (grid.step_seed_vertices < 1 || grid.closed_seed_vertices < 2 || grid.m_max < 1 ||
      grid.w_max < 1 || grid.cayley_n_min < 3 || grid.cayley_n_max < grid.cayley_n_min ||
      grid.cayley_t_max < 1)
    throw Error(Errc::BadParam, "audit grid bounds out of range");
  std::vector<AuditRecord> out;
  auto add = [&](FormulaId f, AuditParams p, ExactRatio oracle, std::optional<ExactRatio> v) {
    out.push_back(make_audit_record(f, std::move(p), std::move(oracle), std::move(v)));
  };
  ExactInt cap(static_cast<std::uint64_t>(grid.vertex_cap));

  // Closed form for path distance sums.
  for (unsigned a = 1; a <= grid.step_seed_vertices; ++a) {
    add(FormulaId::PathClosedForm, {{"a", a}}, detail::tree_wiener(path_tree(a), grid.threads),
        path_closed_form(ExactInt(a)));
  }

  // One-step formulas over every enumerated seed shape.
  for (unsigned n = 1; n <= grid.step_seed_vertices; ++n) {
    long long idx = 0;
    for (const Tree& seed : all_trees(n)) {
      AuditParams base{{"seed_n", n}, {"seed_i", idx}};
      ++idx;
      ExactRatio s0 = detail::tree_wiener(seed, grid.threads);
      ExactInt n0(n);

      for (unsigned m = 1; m <= grid.m_max; ++m) {
        Tree grown = subdivide_step(seed, m);
        ExactRatio oracle = detail::tree_wiener(grown, grid.threads);
        if (m == 1)
          add(FormulaId::Subdivision1Step, base, oracle, subdivision1_step(s0, n0));
        AuditParams p = base;
        p.emplace_back("m", m);
        add(FormulaId::SubdivisionMStep, p, oracle, subdivisionm_step(s0, n0, m));
      }

      for (unsigned m = 1; m <= grid.m_max; ++m) {
        Tree grown = star_fractal_step(seed, 1, m);
        ExactRatio oracle = detail::tree_wiener(grown, grid.threads);
        AuditParams p = base;
        p.emplace_back("m", m);
        add(FormulaId::Star1MStep, p, oracle, star1m_step(s0, n0, m));
      }

      for (unsigned w = 1; w <= grid.w_max; ++w) {
        for (unsigned m = 1; m <= grid.m_max; ++m) {
          Tree grown = star_fractal_step(seed, w, m);
          ExactRatio oracle = detail::tree_wiener(grown, grid.threads);
          AuditParams p = base;
          p.emplace_back("w", w);
          p.emplace_back("m", m);
          add(FormulaId::StarFractalStep, p, oracle, star_fractal_step(s0, n0, w, m));
          add(FormulaId::StarFractalStepCompact, p, oracle,
              star_fractal_step_compact(s0, n0, w, m));
          add(FormulaId::StarFractalStepExpanded, p, oracle,
              star_fractal_step_expanded(s0, n0, w, m));
        }
      }

      for (unsigned cn = grid.cayley_n_min; cn <= grid.cayley_n_max; ++cn) {
        Tree grown = cayley_step(seed, cn);
        ExactRatio oracle = detail::tree_wiener(grown, grid.threads);
        AuditParams p = base;
        p.emplace_back("n", cn);
        add(FormulaId::CayleyGeneralStep, p, oracle,
            cayley_general_step(leaf_growth_state(seed), cn - 1).s);
      }
    }
  }

  // Multi-step closed forms over every shape with at least one edge.
  for (unsigned n = 2; n <= grid.closed_seed_vertices; ++n) {
    long long idx = 0;
    for (const Tree& seed : all_trees(n)) {
      AuditParams base{{"seed_n", n}, {"seed_i", idx}};
      ++idx;
      ExactRatio s0 = detail::tree_wiener(seed, grid.threads);
      ExactInt n0(n);

      {
        Tree tree = seed;
        for (unsigned t = 0; t <= grid.t_max; ++t) {
          if (t > 0) tree = subdivide_step(tree, 1);
          ExactRatio oracle = detail::tree_wiener(tree, grid.threads);
          AuditParams p = base;
          p.emplace_back("t", t);
          add(FormulaId::Subdivision1Closed, p, oracle, subdivision1_closed(s0, n0, t));
        }
      }

      for (unsigned m = 1; m <= grid.m_max; ++m) {
        Tree tree = seed;
        for (unsigned t = 0; t <= grid.t_max; ++t) {
          if (t > 0) tree = subdivide_step(tree, m);
          ExactRatio oracle = detail::tree_wiener(tree, grid.threads);
          AuditParams p = base;
          p.emplace_back("m", m);
          p.emplace_back("t", t);
          add(FormulaId::SubdivisionMClosed, p, oracle,
              subdivisionm_closed(s0, n0, m, t, SubdivisionMDenominator::TwoNMinus1));
        }
      }

      for (unsigned m = 1; m <= grid.m_max; ++m) {
        Tree tree = seed;
        for (unsigned t = 0; t <= grid.t_max; ++t) {
          if (t > 0) tree = star_fractal_step(tree, 1, m);
          if (ExactInt(tree.vertex_count()) > cap) break;
          ExactRatio oracle = detail::tree_wiener(tree, grid.threads);
          AuditParams p = base;
          p.emplace_back("m", m);
          p.emplace_back("t", t);
          add(FormulaId::Star1MClosed, p, oracle, star1m_closed(s0, n0, m, t));
        }
      }

      for (unsigned w = 1; w <= grid.w_max; ++w) {
        for (unsigned m = 1; m <= grid.m_max; ++m) {
          ModelSpec spec;
          spec.family = Family::StarFractal;
          spec.w = w;
          spec.m = m;
          Tree tree = seed;
          for (unsigned t = 0; t <= grid.t_max; ++t) {
            if (t > 0) {
              spec.t = t;
              if (predicted_counts(spec, seed).vertices > cap) break;
              tree = star_fractal_step(tree, w, m);
            }
            ExactRatio oracle = detail::tree_wiener(tree, grid.threads);
            AuditParams p = base;
            p.emplace_back("w", w);
            p.emplace_back("m", m);
            p.emplace_back("t", t);
            add(FormulaId::StarFractalClosed, p, oracle, star_fractal_closed(s0, n0, w, m, t));
          }
        }
      }

      for (unsigned m = 1; m <= grid.m_max; ++m) {
        Tree tree = seed;
        for (unsigned t = 0; t <= grid.t_max; ++t) {
          if (t > 0) tree = exponential_step(tree, m);
          if (ExactInt(tree.vertex_count()) > cap) break;
          ExactRatio oracle = detail::tree_wiener(tree, grid.threads);
          AuditParams p = base;
          p.emplace_back("m", m);
          p.emplace_back("t", t);
          add(FormulaId::ExponentialClosed, p, oracle, exponential_closed(s0, n0, m, t));
        }
      }
    }
  }

  // Edge-seeded closed forms.
  for (unsigned t = 0; t <= grid.t_max; ++t) {
    add(FormulaId::Subdivision1PathClosed, {{"t", t}},
        detail::tree_wiener(path_tree((1u << t) + 1), grid.threads),
        subdivision1_path_closed(t));
  }
  {
    Tree tree = single_edge();
    for (unsigned t = 0; t <= grid.t_max; ++t) {
      if (t > 0) tree = tgraph_step(tree);
      add(FormulaId::TGraphClosed, {{"t", t}}, detail::tree_wiener(tree, grid.threads),
          tgraph_closed(t));
    }
  }
  for (unsigned m = 1; m <= grid.m_max; ++m) {
    Tree tree = single_edge();
    for (unsigned t = 0; t <= grid.t_max; ++t) {
      if (t > 0) tree = exponential_step(tree, m);
      add(FormulaId::ExponentialEdgeClosed, {{"m", m}, {"t", t}},
          detail::tree_wiener(tree, grid.threads), exponential_edge_closed(m, t));
    }
  }

  // Cayley growth from the symbolic first-generation star.
  for (unsigned n = grid.cayley_n_min; n <= grid.cayley_n_max; ++n) {
    Tree tree = star_tree(n);
    for (unsigned t = 1; t <= grid.cayley_t_max; ++t) {
      if (t > 1) tree = cayley_step(tree, n);
      ExactRatio oracle = detail::tree_wiener(tree, grid.threads);
      AuditParams p{{"n", n}, {"t", t}};
      add(FormulaId::CayleyClosed, p, oracle, cayley_closed(n, t).s);
      if (t > 1) {
        add(FormulaId::CayleyGeneralUnrolled, p, oracle,
            iterate_leaf_growth(leaf_growth_star_state(n), n - 1, t - 1, false).s);
      }
    }
  }

  // Size formulas against constructed trees.
  for (unsigned n = 2; n <= grid.closed_seed_vertices; ++n) {
    long long idx = 0;
    for (const Tree& seed : all_trees(n)) {
      AuditParams base{{"seed_n", n}, {"seed_i", idx}};
      ++idx;

      for (unsigned m = 1; m <= grid.m_max; ++m) {
        ModelSpec spec;
        spec.family = Family::Subdivision;
        spec.m = m;
        Tree tree = seed;
        for (unsigned t = 0; t <= grid.t_max; ++t) {
          if (t > 0) tree = subdivide_step(tree, m);
          spec.t = t;
          AuditParams p = base;
          p.emplace_back("m", m);
          p.emplace_back("t", t);
          ExactRatio actual(ExactInt(tree.vertex_count()));
          add(FormulaId::CountsSubdivisionM, p, actual,
              ExactRatio(predicted_counts(spec, seed).vertices));
          if (m == 1) {
            AuditParams q = base;
            q.emplace_back("t", t);
            add(FormulaId::CountsSubdivision1, q, actual,
                ExactRatio(predicted_counts(spec, seed).vertices));
          }
        }
      }

      for (unsigned m = 1; m <= grid.m_max; ++m) {
        ModelSpec spec;
        spec.family = Family::StarFractal;
        spec.w = 1;
        spec.m = m;
        Tree tree = seed;
        for (unsigned t = 0; t <= grid.t_max; ++t) {
          if (t > 0) {
            spec.t = t;
            if (predicted_counts(spec, seed).vertices > cap) break;
            tree = star_fractal_step(tree, 1, m);
          }
          spec.t = t;
          AuditParams p = base;
          p.emplace_back("m", m);
          p.emplace_back("t", t);
          add(FormulaId::CountsStar1M, p, ExactRatio(ExactInt(tree.vertex_count())),
              ExactRatio(predicted_counts(spec, seed).vertices));
        }
      }

      for (unsigned w = 1; w <= grid.w_max; ++w) {
        for (unsigned m = 1; m <= grid.m_max; ++m) {
          ModelSpec spec;
          spec.family = Family::StarFractal;
          spec.w = w;
          spec.m = m;
          Tree tree = seed;
          for (unsigned t = 0; t <= grid.t_max; ++t) {
            if (t > 0) {
              spec.t = t;
              if (predicted_counts(spec, seed).vertices > cap) break;
              tree = star_fractal_step(tree, w, m);
            }
            spec.t = t;
            AuditParams p = base;
            p.emplace_back("w", w);
            p.emplace_back("m", m);
            p.emplace_back("t", t);
            ExactRatio actual(ExactInt(tree.vertex_count()));
            add(FormulaId::CountsStarFractal, p, actual,
                ExactRatio(predicted_counts(spec, seed).vertices));
            add(FormulaId::CountsStarFractalPrinted, p, actual,
                ExactRatio(predicted_counts_printed(spec, seed).vertices));
          }
        }
      }

      for (unsigned m = 1; m <= grid.m_max; ++m) {
        ModelSpec spec;
        spec.family = Family::Exponential;
        spec.m = m;
        Tree tree = seed;
        for (unsigned t = 0; t <= grid.t_max; ++t) {
          if (t > 0) {
            spec.t = t;
            if (predicted_counts(spec, seed).vertices > cap) break;
            tree = exponential_step(tree, m);
          }
          spec.t = t;
          AuditParams p = base;
          p.emplace_back("m", m);
          p.emplace_back("t", t);
          add(FormulaId::CountsExponential, p, ExactRatio(ExactInt(tree.vertex_count())),
              ExactRatio(predicted_counts(spec, seed).vertices));
        }
      }
    }
  }
  {
    ModelSpec spec;
    spec.family = Family::TGraph;
    Tree tree = single_edge();
    Tree seed = single_edge();
    for (unsigned t = 0; t <= grid.t_max; ++t) {
      if (t > 0) tree = tgraph_step(tree);
      spec.t = t;
      add(FormulaId::CountsTGraph, {{"t", t}}, ExactRatio(ExactInt(tree.vertex_count())),
          ExactRatio(predicted_counts(spec, seed).vertices));
    }
  }
  for (unsigned n = grid.cayley_n_min; n <= grid.cayley_n_max; ++n) {
    ModelSpec spec;
    spec.family = Family::Cayley;
    spec.n = n;
    Tree seed = star_tree(n);
    Tree tree = seed;
    for (unsigned t = 1; t <= grid.cayley_t_max; ++t) {
      if (t > 1) tree = cayley_step(tree, n);
      spec.t = t;
      add(FormulaId::CountsCayley, {{"n", n}, {"t", t}},
          ExactRatio(ExactInt(tree.vertex_count())),
          ExactRatio(predicted_counts(spec, seed).vertices));
    }
  }

  // Mean first-passage routes against the independent solver.
  for (unsigned n = 2; n <= grid.closed_seed_vertices; ++n) {
    long long idx = 0;
    for (const Tree& seed : all_trees(n)) {
      AuditParams base{{"seed_n", n}, {"seed_i", idx}};
      ++idx;
      ExactRatio exact = mfpt_exact(seed, grid.threads);
      ExactRatio s0 = detail::tree_wiener(seed, grid.threads);
      add(FormulaId::MfptCommute, base, exact, mfpt_from_wiener(s0, ExactInt(n)));
      add(FormulaId::MfptDistanceLemma, base, exact, mfpt_distance_lemma(s0, ExactInt(n)));
    }
  }

  std::sort(out.begin(), out.end(), [](const AuditRecord& a, const AuditRecord& b) {
    return std::tie(a.formula, a.params) < std::tie(b.formula, b.params);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Summaries and serialization.

struct FormulaSummary {
  FormulaId formula = FormulaId::PathClosedForm;
  Tier tier = Tier::Canonical;
  std::size_t points = 0;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t undefined = 0;
  std::string first_mismatch;  // rendered params; empty when everything matched

  // Undefined points are reported separately and excluded from the rate.
  double pass_rate() const {
    std::size_t defined = points - undefined;
    return defined == 0 ? 1.0 : static_cast<double>(matches) / static_cast<double>(defined);
  }
};

inline std::vector<FormulaSummary> summarize(const std::vector<AuditRecord>& records) {
  std::vector<FormulaSummary> rows;
  for (const AuditRecord& r : records) {
    if (rows.empty() || rows.back().formula != r.formula) {
      FormulaSummary row;
      row.formula = r.formula;
      row.tier = r.tier;
      rows.push_back(row);
    }
    FormulaSummary& row = rows.back();
    ++row.points;
    switch (r.verdict) {
      case Verdict::Match:
        ++row.matches;
        break;
      case Verdict::Mismatch:
        ++row.mismatches;
        if (row.first_mismatch.empty()) row.first_mismatch = render_params(r.params);
        break;
      case Verdict::Undefined:
        ++row.undefined;
        break;
    }
  }
  return rows;
}

inline bool canonical_all_match(const std::vector<AuditRecord>& records) {
  for (const AuditRecord& r : records)
    if (r.tier == Tier::Canonical && r.verdict != Verdict::Match) return false;
  return true;
}

inline void write_ledger_jsonl(const std::vector<AuditRecord>& records, std::ostream& os) {
  for (const AuditRecord& r : records) {
    os << "{\"formula\":\"" << formula_name(r.formula) << "\",\"tier\":\"" << tier_name(r.tier)
       << "\",\"params\":{";
    bool first = true;
    for (const auto& [key, value] : r.params) {
      if (!first) os << ',';
      first = false;
      os << '"' << key << "\":" << value;
    }
    os << "},\"oracle\":\"" << to_string(r.oracle) << "\",\"value\":";
    if (r.value)
      os << '"' << to_string(*r.value) << '"';
    else
      os << "null";
    os << ",\"verdict\":\"" << verdict_name(r.verdict) << "\",\"abs_diff\":";
    if (r.abs_diff)
      os << '"' << to_string(*r.abs_diff) << '"';
    else
      os << "null";
    os << "}\n";
  }
}

inline void write_ledger_csv(const std::vector<AuditRecord>& records, std::ostream& os) {
  os << "formula,tier,params,oracle,value,verdict,abs_diff\n";
  for (const AuditRecord& r : records) {
    os << formula_name(r.formula) << ',' << tier_name(r.tier) << ','
       << render_params(r.params, ';') << ',' << to_string(r.oracle) << ',';
    if (r.value) os << to_string(*r.value);
    os << ',' << verdict_name(r.verdict) << ',';
    if (r.abs_diff) os << to_string(*r.abs_diff);
    os << '\n';
  }
}

inline void write_ledger_text(const std::vector<FormulaSummary>& rows, std::ostream& os) {
  char line[256];
  std::snprintf(line, sizeof line, "%-32s %-10s %7s %7s %9s %9s %7s  %s\n", "formula", "tier",
                "points", "match", "mismatch", "undef", "pass", "first_mismatch");
  os << line;
  for (const FormulaSummary& row : rows) {
    std::snprintf(line, sizeof line, "%-32s %-10s %7zu %7zu %9zu %9zu %7.4f  %s\n",
                  formula_name(row.formula), tier_name(row.tier), row.points, row.matches,
                  row.mismatches, row.undefined, row.pass_rate(),
                  row.first_mismatch.empty() ? "-" : row.first_mismatch.c_str());
    os << line;
  }
}

}  // namespace treelike
