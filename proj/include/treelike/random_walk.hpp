#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "treelike/exact.hpp"
#include "treelike/parallel.hpp"
#include "treelike/tree.hpp"

namespace treelike {

// ---------------------------------------------------------------------------
// Counter-based randomness. Every Monte Carlo trial derives its own stream
// from (seed, trial index), so results do not depend on scheduling and are
// reproducible for any thread count.

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0x5851f42d4c957f2dull * (stream + 1)));
    return g.next();
  }

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(mix(seed, stream));
  }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Exact first-passage times on trees. Root the tree at the target; for each
// vertex u the edge toward the parent contributes 2*subtree_size(u) - 1
// expected steps, and the first-passage time from u is the sum of those
// contributions along the path to the target.

inline std::vector<ExactInt> fpt_exact(const Tree& t, VertexId target) {
  std::size_t n = t.vertex_count();
  if (target >= n) throw Error(Errc::BadVertexId, "target out of range");
  std::vector<VertexId> order, parent(n, target);
  order.reserve(n);
  std::vector<bool> seen(n, false);
  order.push_back(target);
  seen[target] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId u = order[head];
    for (const VertexId* p = t.neighbors_begin(u); p != t.neighbors_end(u); ++p) {
      if (!seen[*p]) {
        seen[*p] = true;
        parent[*p] = u;
        order.push_back(*p);
      }
    }
  }
  std::vector<std::uint64_t> size(n, 1);
  for (std::size_t i = n; i-- > 1;) size[parent[order[i]]] += size[order[i]];
  std::vector<ExactInt> f(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    VertexId u = order[i];
    f[u] = f[parent[u]] + ExactInt(2 * size[u] - 1);
  }
  return f;
}

// Sum of first-passage times over all ordered pairs (source, target).
inline ExactInt total_first_passage(const Tree& t, unsigned threads = 1) {
  std::size_t n = t.vertex_count();
  if (n > kOracleVertexCap)
    throw Error(Errc::ResourceCap, "tree too large for the exact solver");
  unsigned workers = threads < 1 ? 1 : threads;
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<ExactInt> partial(workers, 0);
  parallel_for(workers, workers, [&](std::size_t wk) {
    ExactInt acc = 0;
    for (VertexId target = static_cast<VertexId>(wk); target < n;
         target += static_cast<VertexId>(workers)) {
      // Per-target sums fit in 64 bits far beyond the solver cap.
      std::uint64_t row = 0;
      for (const ExactInt& v : fpt_exact(t, target))
        row += static_cast<std::uint64_t>(v);
      acc += row;
    }
    partial[wk] = std::move(acc);
  });
  ExactInt total = 0;
  for (const ExactInt& p : partial) total += p;
  return total;
}

// ---------------------------------------------------------------------------
// Mean first-passage time (uniform over ordered source/target pairs).

inline ExactRatio mfpt_exact(const Tree& t, unsigned threads = 1) {
  ExactInt n(t.vertex_count());
  if (n < 2) throw Error(Errc::BadParam, "mean first-passage needs two vertices");
  return ExactRatio(total_first_passage(t, threads), n * (n - 1));
}

// MFPT from the distance sum: exactly 2S/|V| on any tree.
inline ExactRatio mfpt_from_wiener(const ExactRatio& s, const ExactInt& n) {
  return 2 * s / ExactRatio(n);
}

// The S/|V| variant kept for auditing; it is low by exactly a factor of 2.
inline ExactRatio mfpt_distance_lemma(const ExactRatio& s, const ExactInt& n) {
  return s / ExactRatio(n);
}

struct MfptReport {
  ExactRatio exact;         // independent first-passage solver
  ExactRatio from_wiener;   // 2S/|V|
  ExactRatio printed_lemma; // S/|V|
};

inline MfptReport mfpt_report(const Tree& t, unsigned threads = 1) {
  ExactRatio s(wiener_oracle(t, threads));
  ExactInt n(t.vertex_count());
  return {mfpt_exact(t, threads), mfpt_from_wiener(s, n), mfpt_distance_lemma(s, n)};
}

// ---------------------------------------------------------------------------
// Monte Carlo estimate. Each trial walks from a uniform source to a uniform
// distinct target; step counts accumulate as exact integers, so the estimate
// is identical for any thread count. Walks that exceed the step budget are
// excluded from the mean and reported separately.

struct McParams {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 0;  // 0: use 100 * |V|^2
  unsigned threads = 1;
};

struct McResult {
  std::uint64_t trials = 0;
  std::uint64_t completed = 0;
  std::uint64_t truncated = 0;
  std::uint64_t max_steps = 0;
  ExactInt total_steps;   // over completed trials
  double mean = 0.0;      // total_steps / completed
  double std_error = 0.0; // sample standard error of the mean
};

inline McResult mc_mfpt(const Tree& t, const McParams& params) {
  std::size_t n = t.vertex_count();
  if (n < 2) throw Error(Errc::BadParam, "random walks need two vertices");
  std::uint64_t max_steps =
      params.max_steps ? params.max_steps
                       : 100 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  unsigned workers = params.threads < 1 ? 1 : params.threads;
  struct Accum {
    ExactInt steps = 0, steps_sq = 0;
    std::uint64_t completed = 0, truncated = 0;
  };
  std::vector<Accum> acc(workers);
  parallel_for(workers, workers, [&](std::size_t wk) {
    Accum local;
    for (std::uint64_t trial = wk; trial < params.trials; trial += workers) {
      SplitMix64 rng = SplitMix64::substream(params.seed, trial);
      VertexId source = static_cast<VertexId>(rng.below(n));
      std::uint64_t k = rng.below(n - 1);
      VertexId target = static_cast<VertexId>(k + (k >= source ? 1 : 0));
      VertexId at = source;
      std::uint64_t steps = 0;
      while (at != target && steps < max_steps) {
        const VertexId* begin = t.neighbors_begin(at);
        at = begin[rng.below(t.degree(at))];
        ++steps;
      }
      if (at == target) {
        ++local.completed;
        local.steps += steps;
        local.steps_sq += ExactInt(steps) * steps;
      } else {
        ++local.truncated;
      }
    }
    acc[wk] = std::move(local);
  });
  McResult result;
  result.trials = params.trials;
  result.max_steps = max_steps;
  ExactInt steps_sq = 0;
  for (Accum& a : acc) {
    result.completed += a.completed;
    result.truncated += a.truncated;
    result.total_steps += a.steps;
    steps_sq += a.steps_sq;
  }
  if (result.completed > 0) {
    ExactInt c(result.completed);
    result.mean = to_double(ExactRatio(result.total_steps, c));
    if (result.completed > 1) {
      // Sample variance from the exact sums, then SE = sqrt(var / completed).
      ExactRatio var = (ExactRatio(steps_sq) -
                        ExactRatio(result.total_steps * result.total_steps, c)) /
                       ExactRatio(c - 1);
      double v = to_double(var);
      result.std_error = v > 0 ? std::sqrt(v / static_cast<double>(result.completed)) : 0.0;
    }
  }
  return result;
}

}  // namespace treelike
