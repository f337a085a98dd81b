#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "treelike/exact.hpp"
#include "treelike/tree.hpp"

namespace treelike {

// ---------------------------------------------------------------------------
// Model descriptions. A ModelSpec names a growth family, its parameters, the
// seed tree, and the number of generations. Specs round-trip through a flat
// key=value line, e.g. "family=star_fractal w=2 m=3 seed=edge t=4".

enum class Family { Subdivision, StarFractal, TGraph, Cayley, Exponential };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Subdivision: return "subdivision";
    case Family::StarFractal: return "star_fractal";
    case Family::TGraph: return "tgraph";
    case Family::Cayley: return "cayley";
    case Family::Exponential: return "exponential";
  }
  return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
  for (Family f : {Family::Subdivision, Family::StarFractal, Family::TGraph,
                   Family::Cayley, Family::Exponential}) {
    if (s == family_name(f)) return f;
  }
  return std::nullopt;
}

struct SeedSpec {
  enum class Kind { Default, Edge, Star, Path, File };
  Kind kind = Kind::Default;
  std::size_t size = 0;  // Star: leaf count; Path: vertex count
  std::string path;      // File

  bool operator==(const SeedSpec&) const = default;
};

inline std::string to_string(const SeedSpec& s) {
  switch (s.kind) {
    case SeedSpec::Kind::Default: return "default";
    case SeedSpec::Kind::Edge: return "edge";
    case SeedSpec::Kind::Star: return "star:" + std::to_string(s.size);
    case SeedSpec::Kind::Path: return "path:" + std::to_string(s.size);
    case SeedSpec::Kind::File: return "file:" + s.path;
  }
  return "?";
}

inline SeedSpec parse_seed(const std::string& s) {
  if (s == "default") return {};
  if (s == "edge") return {SeedSpec::Kind::Edge, 0, ""};
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  auto parse_size = [&]() -> std::size_t {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(rest, &pos);
    } catch (const std::exception&) {
      throw Error(Errc::BadFormat, "seed size is not a number: " + s);
    }
    if (pos != rest.size() || v == 0)
      throw Error(Errc::BadFormat, "seed size is not a positive number: " + s);
    return v;
  };
  if (head == "star" && colon != std::string::npos)
    return {SeedSpec::Kind::Star, parse_size(), ""};
  if (head == "path" && colon != std::string::npos)
    return {SeedSpec::Kind::Path, parse_size(), ""};
  if (head == "file" && colon != std::string::npos && !rest.empty())
    return {SeedSpec::Kind::File, 0, rest};
  throw Error(Errc::BadFormat, "unknown seed: " + s);
}

struct ModelSpec {
  Family family = Family::TGraph;
  unsigned m = 1;  // subdivision order / leaves per branch vertex / children added
  unsigned w = 1;  // branch vertices inserted per edge
  unsigned n = 3;  // branching number
  SeedSpec seed;
  unsigned t = 1;  // generations

  bool operator==(const ModelSpec&) const = default;
};

inline void validate(const ModelSpec& spec) {
  switch (spec.family) {
    case Family::Subdivision:
    case Family::Exponential:
      if (spec.m < 1) throw Error(Errc::BadParam, "m must be at least 1");
      break;
    case Family::StarFractal:
      if (spec.m < 1) throw Error(Errc::BadParam, "m must be at least 1");
      if (spec.w < 1) throw Error(Errc::BadParam, "w must be at least 1");
      break;
    case Family::TGraph:
      break;
    case Family::Cayley:
      if (spec.n < 2) throw Error(Errc::BadParam, "n must be at least 2");
      if (spec.seed.kind == SeedSpec::Kind::Default && spec.t < 1)
        throw Error(Errc::BadParam,
                    "cayley generations start at t=1 (the default seed is the "
                    "generation-1 star); give an explicit seed for t=0");
      break;
  }
}

inline std::string to_string(const ModelSpec& spec) {
  std::ostringstream out;
  out << "family=" << family_name(spec.family);
  switch (spec.family) {
    case Family::Subdivision:
    case Family::Exponential: out << " m=" << spec.m; break;
    case Family::StarFractal: out << " w=" << spec.w << " m=" << spec.m; break;
    case Family::TGraph: break;
    case Family::Cayley: out << " n=" << spec.n; break;
  }
  if (spec.seed.kind != SeedSpec::Kind::Default) out << " seed=" << to_string(spec.seed);
  out << " t=" << spec.t;
  return out.str();
}

inline ModelSpec parse_model_spec(const std::string& line) {
  std::istringstream in(line);
  std::string tok;
  bool saw_family = false;
  std::vector<std::string> keys;
  ModelSpec spec;
  auto parse_unsigned = [](const std::string& key, const std::string& val) -> unsigned {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(val, &pos);
    } catch (const std::exception&) {
      throw Error(Errc::BadFormat, key + " is not a number: " + val);
    }
    if (pos != val.size()) throw Error(Errc::BadFormat, key + " is not a number: " + val);
    return static_cast<unsigned>(v);
  };
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(Errc::BadFormat, "expected key=value, got: " + tok);
    std::string key = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    if (std::find(keys.begin(), keys.end(), key) != keys.end())
      throw Error(Errc::BadFormat, "duplicate key: " + key);
    keys.push_back(key);
    if (key == "family") {
      auto f = parse_family(val);
      if (!f) throw Error(Errc::BadFormat, "unknown family: " + val);
      spec.family = *f;
      saw_family = true;
    } else if (key == "m") {
      spec.m = parse_unsigned(key, val);
    } else if (key == "w") {
      spec.w = parse_unsigned(key, val);
    } else if (key == "n") {
      spec.n = parse_unsigned(key, val);
    } else if (key == "seed") {
      spec.seed = parse_seed(val);
    } else if (key == "t") {
      spec.t = parse_unsigned(key, val);
    } else {
      throw Error(Errc::BadFormat, "unknown key: " + key);
    }
  }
  if (!saw_family) throw Error(Errc::BadFormat, "missing family=...");
  auto used = [&](const std::string& k) {
    switch (spec.family) {
      case Family::Subdivision:
      case Family::Exponential: return k == "m";
      case Family::StarFractal: return k == "m" || k == "w";
      case Family::TGraph: return false;
      case Family::Cayley: return k == "n";
    }
    return false;
  };
  for (const auto& k : keys) {
    if (k == "family" || k == "seed" || k == "t") continue;
    if (!used(k))
      throw Error(Errc::BadFormat, std::string("key ") + k + " is not used by family " +
                                       family_name(spec.family));
  }
  validate(spec);
  return spec;
}

// ---------------------------------------------------------------------------
// Single-generation growth operations. Labeling is deterministic: new vertices
// are appended after existing ones, edges are visited in the tree's sorted
// order, and every new vertex carries generation tag (previous max tag) + 1.

namespace detail {

inline std::uint32_t next_generation_tag(const Tree& t) {
  std::uint32_t mx = 0;
  for (std::uint32_t g : t.generation_tags()) mx = std::max(mx, g);
  return mx + 1;
}

inline Tree with_new_vertices(const Tree& old, std::size_t new_count,
                              std::vector<Edge> edges) {
  std::vector<std::uint32_t> tags = old.generation_tags();
  tags.resize(new_count, next_generation_tag(old));
  return Tree::from_edges(new_count, std::move(edges), std::move(tags));
}

}  // namespace detail

// Replace every edge by a path through m new vertices.
inline Tree subdivide_step(const Tree& t, unsigned m) {
  if (m < 1) throw Error(Errc::BadParam, "m must be at least 1");
  std::vector<Edge> out;
  out.reserve(t.edge_count() * (m + 1));
  VertexId next = static_cast<VertexId>(t.vertex_count());
  for (const auto& [u, v] : t.edges()) {
    VertexId prev = u;
    for (unsigned i = 0; i < m; ++i) {
      out.push_back({prev, next});
      prev = next++;
    }
    out.push_back({prev, v});
  }
  return detail::with_new_vertices(t, next, std::move(out));
}

// Replace every edge by a path through w new branch vertices, each carrying m
// new leaves. Per edge: w(m+1) new vertices, edge count multiplied by w(m+1)+1.
inline Tree star_fractal_step(const Tree& t, unsigned w, unsigned m) {
  if (m < 1 || w < 1) throw Error(Errc::BadParam, "w and m must be at least 1");
  std::vector<Edge> out;
  out.reserve(t.edge_count() * (std::size_t{w} * (m + 1) + 1));
  VertexId next = static_cast<VertexId>(t.vertex_count());
  for (const auto& [u, v] : t.edges()) {
    VertexId prev = u;
    for (unsigned i = 0; i < w; ++i) {
      VertexId c = next++;
      out.push_back({prev, c});
      for (unsigned j = 0; j < m; ++j) out.push_back({c, next++});
      prev = c;
    }
    out.push_back({prev, v});
  }
  return detail::with_new_vertices(t, next, std::move(out));
}

inline Tree tgraph_step(const Tree& t) { return star_fractal_step(t, 1, 1); }

// Attach n-1 children to every current leaf (a lone vertex counts as a leaf).
inline Tree cayley_step(const Tree& t, unsigned n) {
  if (n < 2) throw Error(Errc::BadParam, "n must be at least 2");
  std::vector<Edge> out = t.edges();
  VertexId next = static_cast<VertexId>(t.vertex_count());
  std::vector<VertexId> leaves;
  if (t.vertex_count() == 1) {
    leaves.push_back(0);
  } else {
    for (VertexId v = 0; v < t.vertex_count(); ++v)
      if (t.degree(v) == 1) leaves.push_back(v);
  }
  for (VertexId v : leaves)
    for (unsigned j = 0; j + 1 < n; ++j) out.push_back({v, next++});
  return detail::with_new_vertices(t, next, std::move(out));
}

// Attach m new children to every vertex.
inline Tree exponential_step(const Tree& t, unsigned m) {
  if (m < 1) throw Error(Errc::BadParam, "m must be at least 1");
  std::vector<Edge> out = t.edges();
  VertexId next = static_cast<VertexId>(t.vertex_count());
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    for (unsigned j = 0; j < m; ++j) out.push_back({v, next++});
  return detail::with_new_vertices(t, next, std::move(out));
}

// One generation of the spec's family applied to an arbitrary tree.
inline Tree step(const Tree& t, const ModelSpec& spec) {
  switch (spec.family) {
    case Family::Subdivision: return subdivide_step(t, spec.m);
    case Family::StarFractal: return star_fractal_step(t, spec.w, spec.m);
    case Family::TGraph: return tgraph_step(t);
    case Family::Cayley: return cayley_step(t, spec.n);
    case Family::Exponential: return exponential_step(t, spec.m);
  }
  throw Error(Errc::BadParam, "unknown family");
}

// ---------------------------------------------------------------------------
// Seed resolution. Every family defaults to the single edge except the Cayley
// family, whose default seed is its generation-1 star on n leaves (so t counts
// generations of the standard construction, starting at 1).

inline Tree seed_tree(const ModelSpec& spec) {
  switch (spec.seed.kind) {
    case SeedSpec::Kind::Default:
      if (spec.family == Family::Cayley) {
        std::vector<Edge> e;
        std::vector<std::uint32_t> tags(spec.n + 1, 1);
        tags[0] = 0;
        for (VertexId i = 1; i <= spec.n; ++i) e.push_back({0, i});
        return Tree::from_edges(spec.n + 1, std::move(e), std::move(tags));
      }
      return single_edge();
    case SeedSpec::Kind::Edge: return single_edge();
    case SeedSpec::Kind::Star: return star_tree(spec.seed.size);
    case SeedSpec::Kind::Path: return path_tree(spec.seed.size);
    case SeedSpec::Kind::File: {
      std::ifstream in(spec.seed.path);
      if (!in) throw Error(Errc::BadFormat, "cannot open seed file: " + spec.seed.path);
      return read_edge_list(in);
    }
  }
  throw Error(Errc::BadParam, "unknown seed kind");
}

inline std::size_t leaf_count(const Tree& t) {
  if (t.vertex_count() == 1) return 1;
  std::size_t k = 0;
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    if (t.degree(v) == 1) ++k;
  return k;
}

// ---------------------------------------------------------------------------
// Predicted vertex/edge counts after growth, exactly. The corrected counts are
// the ones the constructions actually produce; the printed star-fractal
// counts use the edge multiplier (w+1)m+1 in place of the true w(m+1)+1 and
// are kept evaluable for auditing (the two agree exactly when w = m).

struct Counts {
  ExactInt vertices;
  ExactInt edges;

  bool operator==(const Counts&) const = default;
};

namespace detail {

inline ExactInt geometric_sum(const ExactInt& q, unsigned from, unsigned to) {
  // q^from + q^{from+1} + ... + q^to (empty when to < from)
  ExactInt total = 0;
  ExactInt p = pow_int(q, from);
  for (unsigned i = from; i <= to; ++i) {
    total += p;
    p *= q;
  }
  return total;
}

inline Counts edge_replacement_counts(const ExactInt& multiplier, const Tree& seed,
                                      unsigned steps) {
  ExactInt edges = pow_int(multiplier, steps) * ExactInt(seed.edge_count());
  ExactInt vertices = seed.edge_count() == 0 ? ExactInt(seed.vertex_count()) : edges + 1;
  return {vertices, edges};
}

}  // namespace detail

// Number of growth steps grow() applies after materializing the seed.
inline unsigned growth_steps(const ModelSpec& spec) {
  if (spec.family == Family::Cayley && spec.seed.kind == SeedSpec::Kind::Default)
    return spec.t - 1;  // the default seed already is generation 1
  return spec.t;
}

inline Counts predicted_counts(const ModelSpec& spec, const Tree& seed) {
  validate(spec);
  unsigned steps = growth_steps(spec);
  switch (spec.family) {
    case Family::Subdivision:
      return detail::edge_replacement_counts(ExactInt(spec.m) + 1, seed, steps);
    case Family::StarFractal:
      return detail::edge_replacement_counts(ExactInt(spec.w) * (ExactInt(spec.m) + 1) + 1,
                                             seed, steps);
    case Family::TGraph: return detail::edge_replacement_counts(3, seed, steps);
    case Family::Cayley: {
      ExactInt v = ExactInt(seed.vertex_count()) +
                   ExactInt(leaf_count(seed)) *
                       detail::geometric_sum(ExactInt(spec.n) - 1, 1, steps);
      return {v, v - 1};
    }
    case Family::Exponential: {
      ExactInt v = pow_int(ExactInt(spec.m) + 1, steps) * ExactInt(seed.vertex_count());
      return {v, v - 1};
    }
  }
  throw Error(Errc::BadParam, "unknown family");
}

inline Counts predicted_counts(const ModelSpec& spec) {
  return predicted_counts(spec, seed_tree(spec));
}

inline Counts predicted_counts_printed(const ModelSpec& spec, const Tree& seed) {
  validate(spec);
  if (spec.family == Family::StarFractal || spec.family == Family::TGraph) {
    ExactInt mult = (ExactInt(spec.w) + 1) * ExactInt(spec.m) + 1;
    if (spec.family == Family::TGraph) mult = 3;  // w = m = 1
    return detail::edge_replacement_counts(mult, seed, growth_steps(spec));
  }
  return predicted_counts(spec, seed);
}

inline Counts predicted_counts_printed(const ModelSpec& spec) {
  return predicted_counts_printed(spec, seed_tree(spec));
}

// ---------------------------------------------------------------------------
// Full growth with a hard size cap (checked before any work is done).

inline constexpr std::size_t kGrowVertexCap = 5'000'000;

inline Tree grow(const ModelSpec& spec) {
  validate(spec);
  Tree cur = seed_tree(spec);
  Counts final_counts = predicted_counts(spec, cur);
  if (final_counts.vertices > ExactInt(kGrowVertexCap))
    throw Error(Errc::ResourceCap,
                "grown tree would have " + to_string(final_counts.vertices) +
                    " vertices (cap " + std::to_string(kGrowVertexCap) + ")");
  unsigned steps = growth_steps(spec);
  for (unsigned i = 0; i < steps; ++i) cur = step(cur, spec);
  return cur;
}

}  // namespace treelike
