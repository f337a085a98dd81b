#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "treelike/closed_forms.hpp"
#include "treelike/exact.hpp"
#include "treelike/growth.hpp"
#include "treelike/tree.hpp"

namespace treelike {

// ---------------------------------------------------------------------------
// Exact exponents. Every dimension and scaling exponent of the self-similar
// families is of the form ln(num)/ln(base) with small integers, so identities
// like d_w = 1 + d_f and comparisons against rationals are decidable exactly.

struct LogRatio {
  ExactInt num = 2;
  ExactInt base = 2;
  bool operator==(const LogRatio&) const = default;
};

inline double log_ratio_value(const LogRatio& r) {
  return std::log(to_double(ExactRatio(r.num))) / std::log(to_double(ExactRatio(r.base)));
}

// 1 + ln(num)/ln(base) = ln(num*base)/ln(base).
inline LogRatio log_ratio_plus_one(const LogRatio& r) {
  return {r.num * r.base, r.base};
}

// Sign of ln(num)/ln(base) - x, decided by integer powers: for x = p/q the
// comparison reduces to num^q <=> base^p.
inline int log_ratio_compare(const LogRatio& r, const ExactRatio& x) {
  if (r.num < 2 || r.base < 2 || x <= 0)
    throw Error(Errc::BadParam, "exponent comparison needs bases above one and x > 0");
  ExactInt p = numerator(x), q = denominator(x);
  if (p > 1000000 || q > 1000000)
    throw Error(Errc::BadParam, "exponent comparison bound too large");
  ExactInt lhs = pow_int(r.num, q.convert_to<unsigned>());
  ExactInt rhs = pow_int(r.base, p.convert_to<unsigned>());
  if (lhs < rhs) return -1;
  return lhs == rhs ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Dimensions. For the fractal families (both star-fractal shapes and the
// T-graph) mass multiplies by g = w(m+1)+1 per generation while the length
// scale multiplies by w+1, giving d_f = ln g / ln(w+1). Mean first-passage
// time multiplies by (w+1)g, giving the walk dimension ln[(w+1)g]/ln(w+1)
// and the spectral dimension 2 d_f / d_w = ln g^2 / ln[(w+1)g].

enum class Fractality { Fractal, Infinite };

struct DimensionTriple {
  Fractality kind = Fractality::Infinite;
  LogRatio d_f, d_w, d_s;                // valid when kind == Fractal
  std::optional<LogRatio> d_f_printed;   // set when a differing value is in print
  std::optional<LogRatio> d_w_printed;
  std::optional<LogRatio> d_s_printed;
};

namespace detail {

inline void star_params(const ModelSpec& spec, unsigned& w, unsigned& m) {
  if (spec.family == Family::TGraph) {
    w = 1;
    m = 1;
  } else {
    w = spec.w;
    m = spec.m;
  }
}

}  // namespace detail

inline DimensionTriple model_dimensions(const ModelSpec& spec) {
  validate(spec);
  DimensionTriple d;
  if (spec.family != Family::StarFractal && spec.family != Family::TGraph) return d;
  unsigned w = 1, m = 1;
  detail::star_params(spec, w, m);
  ExactInt g = ExactInt(w) * (m + 1) + 1;
  ExactInt base(w + 1);
  d.kind = Fractality::Fractal;
  d.d_f = {g, base};
  d.d_w = {base * g, base};
  d.d_s = {g * g, base * g};
  ExactInt gp = ExactInt(m) * (w + 1) + 1;  // multiplier as printed
  if (gp != g) {
    d.d_f_printed = LogRatio{gp, base};
    d.d_w_printed = LogRatio{base * gp, base};
    d.d_s_printed = LogRatio{gp * gp, base * gp};
  }
  return d;
}

enum class Persistence { Persistent, NotPersistent, NotApplicable };

inline Persistence persistence(const ModelSpec& spec) {
  DimensionTriple d = model_dimensions(spec);
  if (d.kind != Fractality::Fractal) return Persistence::NotApplicable;
  return log_ratio_compare(d.d_s, ExactRatio(2)) < 0 ? Persistence::Persistent
                                                     : Persistence::NotPersistent;
}

// ---------------------------------------------------------------------------
// Vertex growth ratio (V_t - V_{t-1}) / V_{t-1}.

inline ExactRatio delta_v_limit(const ModelSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Subdivision:
      return ExactRatio(spec.m);
    case Family::StarFractal:
      return ExactRatio(ExactInt(spec.w) * (spec.m + 1));
    case Family::TGraph:
      return ExactRatio(2);
    case Family::Cayley:
      return ExactRatio(spec.n) - 2;
    case Family::Exponential:
      return ExactRatio(spec.m);
  }
  throw Error(Errc::BadParam, "unknown family");
}

// The published T-graph limit is 3 (the edge growth factor); the ratio of
// vertex counts 3^t + 1 tends to 2. Other families print the true limit.
inline std::optional<ExactRatio> delta_v_printed(const ModelSpec& spec) {
  validate(spec);
  if (spec.family == Family::TGraph) return ExactRatio(3);
  return std::nullopt;
}

inline ExactRatio delta_v_at(const ModelSpec& spec, unsigned t) {
  if (t < 1) throw Error(Errc::BadParam, "growth ratio needs t >= 1");
  ModelSpec cur = spec, prev = spec;
  cur.t = t;
  prev.t = t - 1;
  Tree seed = seed_tree(spec);
  Counts now = predicted_counts(cur, seed);
  Counts before = predicted_counts(prev, seed);
  return ExactRatio(now.vertices - before.vertices, before.vertices);
}

// ---------------------------------------------------------------------------
// Integer solutions of ln(m+2)/ln2 = ln[w(n+1)+1]/ln(w+1), decided in exact
// integer arithmetic. With x = m+2, b = w+1, y = w(n+1)+1: if b = 2^s the
// equation holds iff y = x^s; if x = 2^k it holds iff y = b^k; otherwise
// both sides are irrational with multiplicatively independent bases and no
// solution exists (a float sweep over the scan range finds no extras).

struct DimEqualitySolution {
  unsigned m = 0, w = 0, n = 0;
  bool operator==(const DimEqualitySolution&) const = default;
};

namespace detail {

// k >= 0 with b^k == y, if any.
inline std::optional<unsigned> integer_log(const ExactInt& y, const ExactInt& b) {
  if (b < 2 || y < 1) return std::nullopt;
  ExactInt cur = 1;
  unsigned k = 0;
  while (cur < y) {
    cur *= b;
    ++k;
  }
  if (cur == y) return k;
  return std::nullopt;
}

}  // namespace detail

inline std::vector<DimEqualitySolution> dim_equality_scan(unsigned m_max, unsigned w_max,
                                                          unsigned n_max) {
  if (m_max < 1 || w_max < 1 || n_max < 1)
    throw Error(Errc::BadParam, "scan bounds must be at least 1");
  std::vector<DimEqualitySolution> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    ExactInt x = ExactInt(m) + 2;
    std::optional<unsigned> k = detail::integer_log(x, 2);
    for (unsigned w = 1; w <= w_max; ++w) {
      ExactInt b = ExactInt(w) + 1;
      std::optional<unsigned> s = detail::integer_log(b, 2);
      for (unsigned n = 1; n <= n_max; ++n) {
        ExactInt y = ExactInt(w) * (n + 1) + 1;
        bool hit = false;
        if (s) {
          hit = (y == pow_int(x, *s));
        } else if (k) {
          hit = (y == pow_int(b, *k));
        }
        if (hit) out.push_back({m, w, n});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Least squares.

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

inline LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw Error(Errc::BadParam, "least squares needs two or more points");
  double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (double x : xs) mx += x;
  for (double y : ys) my += y;
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0) throw Error(Errc::BadParam, "least squares needs distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

// ---------------------------------------------------------------------------
// Exact distance-sum / vertex-count sequences per family, from the canonical
// step formulas (no trees are built, so large t stays cheap).

struct ScalingPoint {
  unsigned t = 0;
  ExactInt vertices;
  ExactRatio wiener;
  ExactRatio mfpt;  // 2 * wiener / vertices
};

inline std::vector<ScalingPoint> scaling_series(const ModelSpec& spec, unsigned t_lo,
                                                unsigned t_hi) {
  if (t_lo > t_hi) throw Error(Errc::BadParam, "empty step range");
  ModelSpec probe = spec;
  probe.t = t_hi;
  validate(probe);
  bool symbolic_cayley =
      spec.family == Family::Cayley && spec.seed.kind == SeedSpec::Kind::Default;
  if (symbolic_cayley && t_lo < 1)
    throw Error(Errc::BadParam, "the symbolic seed starts at t = 1");
  std::vector<ScalingPoint> out;
  out.reserve(t_hi - t_lo + 1);
  auto emit = [&](unsigned t, const ExactRatio& s, const ExactInt& v) {
    if (t < t_lo) return;
    out.push_back({t, v, s, ExactRatio(2 * numerator(s), denominator(s) * v)});
  };
  if (spec.family == Family::Cayley) {
    LeafGrowthState st;
    unsigned start;
    if (symbolic_cayley) {
      st = leaf_growth_star_state(spec.n);
      start = 1;
    } else {
      st = leaf_growth_state(seed_tree(spec));
      start = 0;
    }
    emit(start, st.s, st.vertices);
    for (unsigned t = start + 1; t <= t_hi; ++t) {
      st = cayley_general_step(st, spec.n - 1);
      emit(t, st.s, st.vertices);
    }
    return out;
  }
  Tree seed = seed_tree(spec);
  ExactRatio s(wiener_oracle(seed));
  ExactInt v(seed.vertex_count());
  emit(0, s, v);
  for (unsigned t = 1; t <= t_hi; ++t) {
    switch (spec.family) {
      case Family::Subdivision:
        s = subdivisionm_step(s, v, spec.m);
        v += ExactInt(spec.m) * (v - 1);
        break;
      case Family::StarFractal:
        s = star_fractal_step(s, v, spec.w, spec.m);
        v += ExactInt(spec.w) * (spec.m + 1) * (v - 1);
        break;
      case Family::TGraph:
        s = star_fractal_step(s, v, 1, 1);
        v += 2 * (v - 1);
        break;
      case Family::Exponential:
        s = exponential_step(s, v, spec.m);
        v *= spec.m + 1;
        break;
      case Family::Cayley:
        break;  // handled above
    }
    emit(t, s, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scaling exponents. The self-similar families follow MFPT ~ |V|^theta with
// theta = ln(g_S / g_V) / ln(g_V) from the per-step growth factors of the
// distance sum and the vertex count; the Cayley and Exponential families are
// not power laws — MFPT/|V| grows linearly in t — so those are fitted
// against t instead of log-log.

enum class ScalingLaw { PowerLaw, LinearInTime };

inline ScalingLaw scaling_law(Family family) {
  return (family == Family::Cayley || family == Family::Exponential)
             ? ScalingLaw::LinearInTime
             : ScalingLaw::PowerLaw;
}

// Exact MFPT-vs-|V| exponent for the power-law families.
inline std::optional<LogRatio> mfpt_exponent(const ModelSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Subdivision: {
      ExactInt q(spec.m + 1);
      return LogRatio{q * q, q};  // always exactly 2
    }
    case Family::StarFractal: {
      ExactInt g = ExactInt(spec.w) * (spec.m + 1) + 1;
      return LogRatio{(spec.w + 1) * g, g};
    }
    case Family::TGraph:
      return LogRatio{6, 3};
    default:
      return std::nullopt;
  }
}

// The exponents as printed: length-scale bases (and, for the general
// star-fractal, the printed mass multiplier m(w+1)+1).
inline std::optional<LogRatio> mfpt_exponent_printed(const ModelSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Subdivision:
      return std::nullopt;  // printed value matches the derived one
    case Family::StarFractal: {
      ExactInt mult = spec.w == 1 ? ExactInt(spec.m) + 2 : ExactInt(spec.m) * (spec.w + 1) + 1;
      return LogRatio{(spec.w + 1) * mult, ExactInt(spec.w) + 1};
    }
    case Family::TGraph:
      return LogRatio{6, 2};
    default:
      return std::nullopt;
  }
}

// Exact slope of MFPT/|V| against t for the linear-in-time families.
inline std::optional<ExactRatio> mfpt_slope(const ModelSpec& spec) {
  validate(spec);
  if (spec.family == Family::Cayley) return ExactRatio(2);
  if (spec.family == Family::Exponential) return ExactRatio(2 * spec.m, spec.m + 1);
  return std::nullopt;
}

inline std::optional<ExactRatio> mfpt_slope_printed(const ModelSpec& spec) {
  validate(spec);
  if (spec.family == Family::Cayley) {
    if (spec.n <= 2) return std::nullopt;
    ExactRatio r(spec.n, spec.n - 2);
    return r * r;
  }
  if (spec.family == Family::Exponential) return ExactRatio(4 * spec.m, spec.m + 1);
  return std::nullopt;
}

// Exact mean-distance-vs-|V| exponent (power-law families only).
inline std::optional<LogRatio> mean_distance_exponent(const ModelSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Subdivision: {
      ExactInt q(spec.m + 1);
      return LogRatio{q, q};  // exactly 1
    }
    case Family::StarFractal: {
      ExactInt g = ExactInt(spec.w) * (spec.m + 1) + 1;
      return LogRatio{ExactInt(spec.w) + 1, g};
    }
    case Family::TGraph:
      return LogRatio{2, 3};
    default:
      return std::nullopt;
  }
}

// As printed, the fractal families' mean-distance exponents are the
// reciprocals of the derived ones (their own fractal dimensions).
inline std::optional<LogRatio> mean_distance_exponent_printed(const ModelSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::StarFractal: {
      ExactInt mult = spec.w == 1 ? ExactInt(spec.m) + 2 : ExactInt(spec.m) * (spec.w + 1) + 1;
      return LogRatio{mult, ExactInt(spec.w) + 1};
    }
    case Family::TGraph:
      return LogRatio{3, 2};
    default:
      return std::nullopt;
  }
}

struct ScalingFit {
  ScalingLaw law = ScalingLaw::PowerLaw;
  std::size_t points = 0;
  double exponent = 0.0;
  double r_squared = 0.0;
  double analytic_exponent = 0.0;
  std::optional<double> printed_exponent;
};

inline ScalingFit scaling_fit(const ModelSpec& spec, unsigned t_lo, unsigned t_hi) {
  if (t_hi < t_lo + 2) throw Error(Errc::BadParam, "scaling fit needs at least three points");
  std::vector<ScalingPoint> series = scaling_series(spec, t_lo, t_hi);
  ScalingFit fit;
  fit.law = scaling_law(spec.family);
  fit.points = series.size();
  std::vector<double> xs, ys;
  xs.reserve(series.size());
  ys.reserve(series.size());
  for (const ScalingPoint& p : series) {
    if (fit.law == ScalingLaw::PowerLaw) {
      xs.push_back(std::log(to_double(ExactRatio(p.vertices))));
      ys.push_back(std::log(to_double(p.mfpt)));
    } else {
      xs.push_back(static_cast<double>(p.t));
      ys.push_back(to_double(p.mfpt / ExactRatio(p.vertices)));
    }
  }
  LinearFit ls = least_squares(xs, ys);
  fit.exponent = ls.slope;
  fit.r_squared = ls.r_squared;
  if (fit.law == ScalingLaw::PowerLaw) {
    fit.analytic_exponent = log_ratio_value(*mfpt_exponent(spec));
    if (std::optional<LogRatio> printed = mfpt_exponent_printed(spec))
      fit.printed_exponent = log_ratio_value(*printed);
  } else {
    fit.analytic_exponent = to_double(*mfpt_slope(spec));
    if (std::optional<ExactRatio> printed = mfpt_slope_printed(spec))
      fit.printed_exponent = to_double(*printed);
  }
  return fit;
}

// ---------------------------------------------------------------------------
// Mean geodesic distance.

inline ExactRatio avg_distance_value(const ExactRatio& s, const ExactInt& vertices) {
  if (vertices < 2) throw Error(Errc::BadParam, "mean distance needs two vertices");
  return 2 * s / ExactRatio(vertices * (vertices - 1));
}

inline ExactRatio avg_distance(const Tree& t, unsigned threads = 1) {
  return avg_distance_value(ExactRatio(wiener_oracle(t, threads)), ExactInt(t.vertex_count()));
}

// Stability of mean distance / ln |V| over a step range: the maximum
// successive relative change. Small values certify logarithmic growth.
inline double avg_distance_log_variation(const ModelSpec& spec, unsigned t_lo, unsigned t_hi) {
  std::vector<ScalingPoint> series = scaling_series(spec, t_lo, t_hi);
  std::vector<double> vals;
  vals.reserve(series.size());
  for (const ScalingPoint& p : series) {
    double v = to_double(ExactRatio(p.vertices));
    vals.push_back(to_double(avg_distance_value(p.wiener, p.vertices)) / std::log(v));
  }
  if (vals.size() < 2) throw Error(Errc::BadParam, "variation needs two or more points");
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i)
    worst = std::max(worst, std::abs(vals[i + 1] / vals[i] - 1.0));
  return worst;
}

// ---------------------------------------------------------------------------
// Cumulative degree distribution P(deg >= k) at every realized degree.

struct DegreeTail {
  unsigned degree = 0;
  ExactRatio cumulative;
  bool operator==(const DegreeTail&) const = default;
};

inline std::vector<DegreeTail> cumulative_degree_tail(const Tree& t) {
  std::size_t n = t.vertex_count();
  if (n == 0) throw Error(Errc::BadParam, "empty tree");
  std::vector<std::size_t> count;
  for (VertexId v = 0; v < n; ++v) {
    std::size_t d = t.degree(v);
    if (d >= count.size()) count.resize(d + 1, 0);
    ++count[d];
  }
  std::vector<DegreeTail> out;
  std::size_t at_least = 0;
  for (std::size_t d = count.size(); d-- > 0;) {
    at_least += count[d];
    if (count[d] > 0)
      out.push_back({static_cast<unsigned>(d), ExactRatio(at_least, n)});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Decay rate alpha of ln P(deg >= k) ~ -alpha k fitted over the realized
// support.
inline double fitted_decay_rate(const std::vector<DegreeTail>& tail) {
  std::vector<double> xs, ys;
  xs.reserve(tail.size());
  ys.reserve(tail.size());
  for (const DegreeTail& e : tail) {
    xs.push_back(static_cast<double>(e.degree));
    ys.push_back(std::log(to_double(e.cumulative)));
  }
  return -least_squares(xs, ys).slope;
}

}  // namespace treelike
