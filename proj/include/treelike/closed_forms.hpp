#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treelike/exact.hpp"
#include "treelike/growth.hpp"
#include "treelike/tree.hpp"

namespace treelike {

// ---------------------------------------------------------------------------
// Formula catalog. Every closed form the library evaluates has a stable id and
// a tier: `canonical` formulas are the corrected routes that agree with brute
// force everywhere; `as_printed` formulas are transcribed verbatim from their
// published statements so the audit can document exactly where (and by how
// much) they deviate. Several printed formulas happen to be correct; they
// still carry the as_printed tier because they are transcriptions, not
// derivations.

enum class Tier { Canonical, AsPrinted };

inline const char* tier_name(Tier t) {
  return t == Tier::Canonical ? "canonical" : "as_printed";
}

enum class FormulaId {
  PathClosedForm,
  Subdivision1Step,
  Subdivision1Closed,
  Subdivision1PathClosed,
  SubdivisionMStep,
  SubdivisionMClosed,
  Star1MStep,
  Star1MClosed,
  StarFractalStep,
  StarFractalStepCompact,
  StarFractalStepExpanded,
  StarFractalClosed,
  TGraphClosed,
  CayleyClosed,
  CayleyGeneralStep,
  CayleyGeneralUnrolled,
  ExponentialClosed,
  ExponentialEdgeClosed,
  CountsSubdivision1,
  CountsSubdivisionM,
  CountsStar1M,
  CountsStarFractal,
  CountsStarFractalPrinted,
  CountsTGraph,
  CountsCayley,
  CountsExponential,
  MfptCommute,
  MfptDistanceLemma,
};

inline constexpr std::array<FormulaId, 28> kAllFormulas = {
    FormulaId::PathClosedForm,
    FormulaId::Subdivision1Step,
    FormulaId::Subdivision1Closed,
    FormulaId::Subdivision1PathClosed,
    FormulaId::SubdivisionMStep,
    FormulaId::SubdivisionMClosed,
    FormulaId::Star1MStep,
    FormulaId::Star1MClosed,
    FormulaId::StarFractalStep,
    FormulaId::StarFractalStepCompact,
    FormulaId::StarFractalStepExpanded,
    FormulaId::StarFractalClosed,
    FormulaId::TGraphClosed,
    FormulaId::CayleyClosed,
    FormulaId::CayleyGeneralStep,
    FormulaId::CayleyGeneralUnrolled,
    FormulaId::ExponentialClosed,
    FormulaId::ExponentialEdgeClosed,
    FormulaId::CountsSubdivision1,
    FormulaId::CountsSubdivisionM,
    FormulaId::CountsStar1M,
    FormulaId::CountsStarFractal,
    FormulaId::CountsStarFractalPrinted,
    FormulaId::CountsTGraph,
    FormulaId::CountsCayley,
    FormulaId::CountsExponential,
    FormulaId::MfptCommute,
    FormulaId::MfptDistanceLemma,
};

inline const char* formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::PathClosedForm: return "path_closed_form";
    case FormulaId::Subdivision1Step: return "subdivision1_step";
    case FormulaId::Subdivision1Closed: return "subdivision1_closed";
    case FormulaId::Subdivision1PathClosed: return "subdivision1_path_closed";
    case FormulaId::SubdivisionMStep: return "subdivisionm_step";
    case FormulaId::SubdivisionMClosed: return "subdivisionm_closed";
    case FormulaId::Star1MStep: return "star1m_step";
    case FormulaId::Star1MClosed: return "star1m_closed";
    case FormulaId::StarFractalStep: return "star_fractal_step";
    case FormulaId::StarFractalStepCompact: return "star_fractal_step_compact";
    case FormulaId::StarFractalStepExpanded: return "star_fractal_step_expanded";
    case FormulaId::StarFractalClosed: return "star_fractal_closed";
    case FormulaId::TGraphClosed: return "tgraph_closed";
    case FormulaId::CayleyClosed: return "cayley_closed";
    case FormulaId::CayleyGeneralStep: return "cayley_general_step";
    case FormulaId::CayleyGeneralUnrolled: return "cayley_general_unrolled";
    case FormulaId::ExponentialClosed: return "exponential_closed";
    case FormulaId::ExponentialEdgeClosed: return "exponential_edge_closed";
    case FormulaId::CountsSubdivision1: return "counts_subdivision1";
    case FormulaId::CountsSubdivisionM: return "counts_subdivisionm";
    case FormulaId::CountsStar1M: return "counts_star1m";
    case FormulaId::CountsStarFractal: return "counts_star_fractal";
    case FormulaId::CountsStarFractalPrinted: return "counts_star_fractal_printed";
    case FormulaId::CountsTGraph: return "counts_tgraph";
    case FormulaId::CountsCayley: return "counts_cayley";
    case FormulaId::CountsExponential: return "counts_exponential";
    case FormulaId::MfptCommute: return "mfpt_commute";
    case FormulaId::MfptDistanceLemma: return "mfpt_distance_lemma";
  }
  return "?";
}

inline Tier formula_tier(FormulaId id) {
  switch (id) {
    case FormulaId::Subdivision1Closed:
    case FormulaId::Subdivision1PathClosed:
    case FormulaId::SubdivisionMClosed:
    case FormulaId::Star1MClosed:
    case FormulaId::StarFractalStepCompact:
    case FormulaId::StarFractalStepExpanded:
    case FormulaId::StarFractalClosed:
    case FormulaId::CayleyGeneralUnrolled:
    case FormulaId::CountsStarFractalPrinted:
    case FormulaId::MfptDistanceLemma: return Tier::AsPrinted;
    default: return Tier::Canonical;
  }
}

namespace detail {

inline ExactRatio pow_signed(const ExactRatio& base, long exp) {
  if (exp >= 0) return pow_ratio(base, static_cast<unsigned>(exp));
  return 1 / pow_ratio(base, static_cast<unsigned>(-exp));
}

// base^from + ... + base^to as exact rationals (empty sum when to < from).
inline ExactRatio power_sum(const ExactRatio& base, long from, long to) {
  ExactRatio total = 0;
  for (long i = from; i <= to; ++i) total += pow_signed(base, i);
  return total;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Paths and first-order subdivision.

// Distance sum of the a-vertex path: (a-1)a(a+1)/6.
inline ExactRatio path_closed_form(const ExactInt& a) {
  return ExactRatio((a - 1) * a * (a + 1), 6);
}

// One subdivision generation (one new vertex per edge) applied to a tree with
// distance sum s on n vertices.
inline ExactRatio subdivision1_step(const ExactRatio& s, const ExactInt& n) {
  return 8 * s - ExactRatio(2 * n * (n - 1));
}

// t generations at once.
inline ExactRatio subdivision1_closed(const ExactRatio& s, const ExactInt& n, unsigned t) {
  ExactRatio p8t = pow_ratio(8, t);
  ExactRatio p2t = pow_ratio(2, t);
  ExactRatio term2 = ExactRatio(1, 3) * (p8t - p2t) * ExactRatio(n - 1);
  ExactRatio term3 = (pow_ratio(4, t) / 2 - p8t / 2) * ExactRatio((n - 1) * (n - 1));
  return p8t * s - term2 + term3;
}

// t generations applied to the single edge (the result is a path).
inline ExactRatio subdivision1_path_closed(unsigned t) {
  ExactInt p = pow_int(2, t);
  return ExactRatio((p + 1) * p, 3) * (ExactRatio(p, 2) + 1);
}

// ---------------------------------------------------------------------------
// Order-m subdivision (each edge becomes a path through m new vertices).

inline ExactRatio subdivisionm_step(const ExactRatio& s, const ExactInt& n, unsigned m) {
  ExactInt M(m);
  ExactRatio q = pow_ratio(ExactRatio(M + 1), 3);
  return q * s - ExactRatio(n * n * M * (M + 1) * (M + 1), 2) +
         ExactRatio(n * M * (M + 1) * (2 * M + 1), 3) - ExactRatio(M * (M * M - 1), 6);
}

// Which denominator the multi-generation form uses in its fifth term: the
// statement prints 2n-1; 2m-1 is the variant suggested by the one-step form.
enum class SubdivisionMDenominator { TwoNMinus1, TwoMMinus1 };

inline ExactRatio subdivisionm_closed(const ExactRatio& s, const ExactInt& n, unsigned m,
                                      unsigned t, SubdivisionMDenominator den) {
  ExactInt M(m);
  ExactInt s3 = 0, s2 = 0, s2m1 = 0;  // sums of i^3 and i^2 up to m, i^2 below m
  for (unsigned i = 1; i <= m; ++i) {
    s3 += ExactInt(i) * i * i;
    s2 += ExactInt(i) * i;
    if (i < m) s2m1 += ExactInt(i) * i;
  }
  ExactRatio q(M + 1);
  long T = t;
  ExactRatio t1 = pow_ratio(q, 3 * t) * s;
  ExactRatio t2 = ExactRatio(2 * (n - 1) * (n - 1) * s3, M) *
                  detail::power_sum(q, 2 * (T - 1), 2 * (T - 1) + T - 1);
  ExactRatio t3 = 0;  // exponents 2(t+j)-1 for j in [0, t)
  for (long j = 0; j < T; ++j) t3 += detail::pow_signed(q, 2 * (T + j) - 1);
  t3 *= ExactRatio(4 * (n - 1) * s3, M);
  ExactRatio cube_sum = 0;  // q^{3j} for j in [0, t)
  for (long j = 0; j < T; ++j) cube_sum += detail::pow_signed(q, 3 * j);
  ExactRatio t4 = ExactRatio(2 * s3, M) * cube_sum;
  ExactRatio t5 = 0;
  for (long j = 0; j < T; ++j) t5 += detail::pow_signed(q, T + 2 * j - 1);
  t5 *= ExactRatio(2 * (n - 1) * s2);
  ExactInt den_value = den == SubdivisionMDenominator::TwoNMinus1 ? 2 * n - 1 : 2 * M - 1;
  ExactRatio t6 = q / ExactRatio(den_value) * ExactRatio(s2m1) * cube_sum;
  ExactRatio t7 = ExactRatio(2 * s2) * cube_sum;
  return t1 - t2 - t3 - t4 + t5 - t6 + t7;
}

// ---------------------------------------------------------------------------
// (1,m)-star generation: each edge gains one branch vertex carrying m leaves.

inline ExactRatio star1m_step(const ExactRatio& s, const ExactInt& n, unsigned m) {
  ExactInt M(m);
  return 2 * (M + 2) * (M + 2) * s - ExactRatio((M + 2) * (n - 1) * (M + n));
}

inline ExactRatio star1m_closed(const ExactRatio& s, const ExactInt& n, unsigned m,
                                unsigned t) {
  ExactInt M(m);
  ExactRatio q(M + 2);
  ExactRatio p2t = pow_ratio(2, t);
  ExactRatio lead = p2t * pow_ratio(q, 2 * t) * s;
  ExactRatio mid = (p2t - 1) * pow_ratio(q, 2 * t) / q * ExactRatio(n * n - 2 * n - 1);
  ExactRatio tail = ExactRatio((M + 1) * (n - 1), 2) *
                    (2 * p2t * pow_ratio(q, 2 * t) - 2 * pow_ratio(q, t)) /
                    ExactRatio(2 * M + 3);
  return lead - mid - tail;
}

// ---------------------------------------------------------------------------
// (w,m)-star generation: each edge gains a path of w branch vertices, each
// carrying m leaves. The canonical evaluator is the sum of the seven pair
// classes (old-old, branch-branch, leaf-leaf same branch, old-branch,
// old-leaf, leaf-leaf across branches, branch-leaf), each corrected to agree
// with brute force on every probe.

inline ExactRatio star_fractal_step(const ExactRatio& s, const ExactInt& n, unsigned w,
                                    unsigned m) {
  ExactInt W(w), M(m);
  ExactRatio s1 = (W + 1) * s;
  ExactRatio s2 = W * W * s1 + ExactRatio((n - 1) * (W - 1) * W * (W + 1), 6) -
                  ExactRatio(n * (n - 1) * (W + 1) * W * W, 2);
  ExactRatio s3{W * M * (M - 1) * (n - 1)};
  ExactRatio s4 = 2 * W * s1 - ExactRatio(n * (n - 1) * W * (W + 1), 2);
  ExactRatio s5 = M * s4 + ExactRatio(W * M * n * (n - 1));
  ExactRatio s6 = M * M * s2 + ExactRatio(M * M * W * (n - 1) * (W * (n - 1) - 1));
  ExactRatio s7 = 2 * M * s2 + ExactRatio(M * W * W * (n - 1) * (n - 1));
  return s1 + s2 + s3 + s4 + s5 + s6 + s7;
}

namespace detail {

struct StarFractalPsis {
  ExactRatio p1, p2, p3, p4;
};

inline StarFractalPsis star_fractal_psis(unsigned w, unsigned m) {
  ExactInt W(w), M(m);
  ExactInt g = W * (M + 1) + 1;
  StarFractalPsis psi;
  psi.p1 = ExactRatio((W + 1) * g * g);
  psi.p2 = ExactRatio(W, 2) *
           ExactRatio((M + 1) * (M + 1) * W * W - (M - 2) * (M + 1) * W - (M - 1));
  psi.p3 = ExactRatio(W, 6) * ExactRatio(4 * (M + 1) * (M + 1) * W * W -
                                         3 * (M + 1) * (3 * M - 2) * W -
                                         (M * M + 11 * M + 2));
  psi.p4 = ExactRatio(W, 6) * ExactRatio((M + 1) * (M + 1) * W * W - 6 * M * (M + 1) * W -
                                         (M * M + 8 * M + 1));
  return psi;
}

}  // namespace detail

// The compact one-step form Psi1*S - Psi2*n^2 + Psi3*n - Psi4, kept verbatim;
// it equals the canonical step minus 2nw/3 identically.
inline ExactRatio star_fractal_step_compact(const ExactRatio& s, const ExactInt& n,
                                            unsigned w, unsigned m) {
  auto psi = detail::star_fractal_psis(w, m);
  return psi.p1 * s - psi.p2 * ExactRatio(n * n) + psi.p3 * ExactRatio(n) - psi.p4;
}

// The fully expanded one-step polynomial, kept verbatim; it equals the
// canonical step plus m*n*w(w-1)(8w+5)/3 (so it is exact only at w=1).
inline ExactRatio star_fractal_step_expanded(const ExactRatio& s, const ExactInt& n,
                                             unsigned w, unsigned m) {
  ExactInt W(w), M(m);
  ExactRatio coef_s{(W + 1) * (W + 1) * (W + 1) + W * M * (W + 1) * (W * M + 2 * W + 2)};
  ExactRatio coef_n2 = ExactRatio(W * (W + 1) * (W + 1), 2) +
                       ExactRatio(W * M * (W - 1) * (W * M + 1), 2) + ExactRatio(M * W * W * W);
  ExactRatio coef_n = ExactRatio(W * (W + 1) * (2 * W + 1), 3) +
                      ExactRatio(W * (4 * W * W - 9 * W - 7) * M * M, 6) +
                      ExactRatio(W * M * (M - 1)) + ExactRatio(W * M * (W - 1) * (8 * W + 5), 2);
  ExactRatio c1 = ExactRatio((W - 7) * W * (W + 1) * M * M, 6) +
                  ExactRatio(W * M * (W * W - 3 * W - 1), 3);
  ExactRatio c2 = ExactRatio(W * M * (M - 1)) + ExactRatio((W - 1) * W * (W + 1), 6);
  return coef_s * s - coef_n2 * ExactRatio(n * n) + coef_n * ExactRatio(n) - c1 - c2;
}

// Multi-generation (w,m)-star form, kept verbatim. Singular at mw = 1 (its
// internal size expression divides by mw - 1), reported as "no value".
inline std::optional<ExactRatio> star_fractal_closed(const ExactRatio& s, const ExactInt& n,
                                                     unsigned w, unsigned m, unsigned t) {
  ExactInt MW = ExactInt(m) * w;
  if (MW == 1) return std::nullopt;
  auto psi = detail::star_fractal_psis(w, m);
  ExactRatio ratio(MW, MW - 1);
  auto stated_size = [&](unsigned x) {
    return pow_ratio(ExactRatio(MW), x) * (ExactRatio(n) - ratio) + ratio;
  };
  ExactRatio total = pow_ratio(psi.p1, t) * s;
  for (unsigned i = 0; i < t; ++i) {
    ExactRatio p = pow_ratio(psi.p1, i);
    ExactRatio v = stated_size(t - 1 - i);
    total += -psi.p4 * p - psi.p2 * p * v * v + psi.p3 * p * v;
  }
  return total;
}

// ---------------------------------------------------------------------------
// T-graph: generation t of the unit (1,1)-star construction from the edge.

inline ExactRatio tgraph_closed(unsigned t) {
  ExactRatio p3t = pow_ratio(3, t);
  ExactRatio p3_2tm1 = pow_ratio(9, t) / 3;  // 3^{2t-1}, exact at t = 0 too
  return p3t + ExactRatio(pow_int(2, t + 2) + 5, 5) * p3_2tm1 - p3t * ExactRatio(3, 5);
}

// ---------------------------------------------------------------------------
// Cayley trees: generation t (t >= 1) of branching number n (n >= 3). The
// intermediate quantities are the standard ones: a = distance from the root to
// the newest shell, theta = root-to-shell distance sum, omega = shell-to-shell
// distance sum (ordered), gamma = one-vertex-to-all distance sum.

struct CayleyClosedForms {
  ExactRatio a, theta, omega, gamma, s, vertices;
};

inline CayleyClosedForms cayley_closed(unsigned n, unsigned t) {
  if (n < 3) throw Error(Errc::BadParam, "closed forms need branching number n >= 3");
  if (t < 1) throw Error(Errc::BadParam, "generations start at t = 1");
  ExactInt N(n);
  ExactInt d = N - 2;
  ExactInt q = pow_int(N - 1, t);   // (n-1)^t
  ExactInt q2 = q * q;              // (n-1)^{2t}
  CayleyClosedForms f;
  ExactInt qm = pow_int(N - 1, t - 1);  // (n-1)^{t-1}
  f.a = ExactRatio(q + N - 3, d);
  f.theta = ExactRatio((d * t - 1) * q + 1, d * d);
  f.omega = ExactRatio(2, d * d * d) * ExactRatio((d * t - 1) * q2 - (d * t - 2) * q - 1);
  f.gamma = ExactRatio(qm) +
            ExactRatio((ExactInt(t) - 1) * q * (N - 1) - qm + 1, d * d) +
            ExactRatio((d * t - N) * q2 + 2 * q * (N - 1), d * d * d);
  f.s = N * f.gamma + ExactRatio(N * (N - 1), 2) * f.omega;
  f.vertices = ExactRatio(N * q - 2, d);
  return f;
}

// The same quantities advanced one generation at a time (used to cross-check
// the closed forms).
inline CayleyClosedForms cayley_recursion(unsigned n, unsigned t) {
  if (n < 3) throw Error(Errc::BadParam, "recursion needs branching number n >= 3");
  if (t < 1) throw Error(Errc::BadParam, "generations start at t = 1");
  ExactInt N(n);
  CayleyClosedForms f{2, 1, 2, 1, 0, 0};
  ExactRatio vertices(N + 1);
  for (unsigned k = 1; k < t; ++k) {
    ExactRatio a_next = ExactRatio(pow_int(N - 1, k + 1) + N - 3, N - 2);
    ExactRatio theta_next = (N - 1) * f.theta + a_next - 1;
    ExactRatio omega_next = 2 * (a_next - 1) * theta_next;
    ExactRatio gamma_next =
        (N - 1) * f.gamma + ExactRatio((N - 1) * (N - 2), 2) * f.omega + theta_next;
    f = {a_next, theta_next, omega_next, gamma_next, 0, 0};
    vertices += ExactRatio(N * pow_int(N - 1, k));
  }
  f.s = N * f.gamma + ExactRatio(N * (N - 1), 2) * f.omega;
  f.vertices = vertices;
  return f;
}

// ---------------------------------------------------------------------------
// Leaf-driven growth from arbitrary seeds (every leaf gains psi children per
// generation). The state tracks the distance sum s, the leaf-to-nonleaf sum
// s1, the leaf-to-leaf sum s2, the newest shell size, and the vertex count.

struct LeafGrowthState {
  ExactRatio s, s1, s2;
  ExactInt shell, vertices;

  bool operator==(const LeafGrowthState&) const = default;
};

// State measured directly on a seed tree (its leaves form the initial shell).
inline LeafGrowthState leaf_growth_state(const Tree& t) {
  LeafGrowthState st{0, 0, 0, 0, ExactInt(t.vertex_count())};
  std::size_t n = t.vertex_count();
  std::vector<bool> is_leaf(n);
  for (VertexId v = 0; v < n; ++v) is_leaf[v] = n == 1 || t.degree(v) == 1;
  ExactInt s = 0, s1 = 0, s2 = 0, shell = 0;
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (is_leaf[v]) ++shell;
    bfs_distances(t, v, dist, queue);
    for (VertexId u = v + 1; u < n; ++u) {
      ExactInt d(dist[u]);
      s += d;
      if (is_leaf[u] && is_leaf[v]) s2 += d;
      else if (is_leaf[u] || is_leaf[v]) s1 += d;
    }
  }
  st.s = ExactRatio(s);
  st.s1 = ExactRatio(s1);
  st.s2 = ExactRatio(s2);
  st.shell = shell;
  return st;
}

// State of the generation-1 star on n leaves (the default growth start).
inline LeafGrowthState leaf_growth_star_state(unsigned n) {
  ExactInt N(n);
  return {ExactRatio(N * N), ExactRatio(N), ExactRatio(N * (N - 1)), N, N + 1};
}

// Corrected one-generation advance: each shell vertex gains psi children.
inline LeafGrowthState cayley_general_step(const LeafGrowthState& st, unsigned psi) {
  ExactInt P(psi);
  LeafGrowthState out;
  out.s1 = P * (st.s1 + 2 * st.s2 + ExactRatio(st.shell * st.vertices));
  out.s2 = P * P * st.s2 + ExactRatio(P * P * st.shell * st.shell - P * st.shell);
  out.s = st.s + out.s1 + out.s2;
  out.vertices = st.vertices + P * st.shell;
  out.shell = P * st.shell;
  return out;
}

// The verbatim variant of the same system (its s1 line reads
// psi*s1 + 2*psi*shell + psi*s2), iterated as published.
inline LeafGrowthState cayley_general_unrolled_step(const LeafGrowthState& st, unsigned psi) {
  ExactInt P(psi);
  LeafGrowthState out;
  out.s1 = P * st.s1 + ExactRatio(2 * P * st.shell) + P * st.s2;
  out.s2 = P * P * st.s2 + ExactRatio(P * P * st.shell * st.shell - P * st.shell);
  out.s = st.s + out.s1 + out.s2;
  out.vertices = st.vertices + P * st.shell;
  out.shell = P * st.shell;
  return out;
}

inline LeafGrowthState iterate_leaf_growth(LeafGrowthState st, unsigned psi, unsigned steps,
                                           bool corrected = true) {
  for (unsigned i = 0; i < steps; ++i)
    st = corrected ? cayley_general_step(st, psi) : cayley_general_unrolled_step(st, psi);
  return st;
}

// ---------------------------------------------------------------------------
// Exponential growth: every vertex gains m children per generation.

inline ExactRatio exponential_step(const ExactRatio& s, const ExactInt& vertices, unsigned m) {
  ExactInt M(m);
  return (M + 1) * (M + 1) * s + ExactRatio(M * (M + 1) * vertices * vertices - M * vertices);
}

inline ExactRatio exponential_closed(const ExactRatio& s, const ExactInt& vertices, unsigned m,
                                     unsigned t) {
  ExactInt M(m);
  ExactRatio total = pow_ratio(ExactRatio(M + 1), 2 * t) * s;
  for (unsigned i = 0; i < t; ++i) {
    ExactInt p = pow_int(M + 1, 2 * i);
    ExactInt v = pow_int(M + 1, t - i - 1) * vertices;
    total += ExactRatio(M * (M + 1) * p * v * v - M * p * v);
  }
  return total;
}

// Generation t from the single edge.
inline ExactRatio exponential_edge_closed(unsigned m, unsigned t) {
  ExactInt M(m);
  ExactRatio lead = detail::pow_signed(ExactRatio(M + 1), static_cast<long>(t) - 1);
  return lead * ExactRatio(2 + (4 * M * t + M - 1) * pow_int(M + 1, t));
}

// ---------------------------------------------------------------------------
// Canonical multi-generation values by iterating the corrected one-step forms
// (the audited "closed" variants above are the verbatim alternatives).

inline ExactRatio iterate_subdivision1(ExactRatio s, ExactInt n, unsigned t) {
  for (unsigned i = 0; i < t; ++i) {
    s = subdivision1_step(s, n);
    n += n - 1;
  }
  return s;
}

inline ExactRatio iterate_subdivisionm(ExactRatio s, ExactInt n, unsigned m, unsigned t) {
  for (unsigned i = 0; i < t; ++i) {
    s = subdivisionm_step(s, n, m);
    n += m * (n - 1);
  }
  return s;
}

inline ExactRatio iterate_star1m(ExactRatio s, ExactInt n, unsigned m, unsigned t) {
  for (unsigned i = 0; i < t; ++i) {
    s = star1m_step(s, n, m);
    n += (m + 1) * (n - 1);
  }
  return s;
}

inline ExactRatio iterate_star_fractal(ExactRatio s, ExactInt n, unsigned w, unsigned m,
                                       unsigned t) {
  for (unsigned i = 0; i < t; ++i) {
    s = star_fractal_step(s, n, w, m);
    n += ExactInt(w) * (m + 1) * (n - 1);
  }
  return s;
}

inline ExactRatio iterate_exponential(ExactRatio s, ExactInt vertices, unsigned m, unsigned t) {
  for (unsigned i = 0; i < t; ++i) {
    s = exponential_step(s, vertices, m);
    vertices *= m + 1;
  }
  return s;
}

}  // namespace treelike
