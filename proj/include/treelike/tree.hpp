#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "treelike/exact.hpp"
#include "treelike/parallel.hpp"

namespace treelike {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

enum class Errc {
  NotATree,     // disconnected, cyclic, or wrong edge count
  BadVertexId,  // endpoint outside [0, n) or self-loop
  BadParam,     // parameter outside its documented domain
  BadFormat,    // unparsable textual input
  ResourceCap,  // requested object exceeds a hard size cap
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

// Immutable tree on vertices 0..n-1 with CSR adjacency. generation_tags[v]
// records the growth step that created v; growth operations assign new ids
// after all existing ones, so tags are nondecreasing in vertex id.
class Tree {
 public:
  Tree() = default;

  static Tree from_edges(std::size_t n, std::vector<Edge> edges,
                         std::vector<std::uint32_t> tags = {}) {
    if (n == 0) throw Error(Errc::NotATree, "tree must have at least one vertex");
    if (edges.size() + 1 != n) {
      throw Error(Errc::NotATree, "tree on " + std::to_string(n) +
                                      " vertices needs " + std::to_string(n - 1) +
                                      " edges, got " + std::to_string(edges.size()));
    }
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw Error(Errc::BadVertexId, "edge endpoint out of range");
      if (u == v) throw Error(Errc::BadVertexId, "self-loop");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (tags.empty()) tags.assign(n, 0);
    if (tags.size() != n)
      throw Error(Errc::BadParam, "generation tag count mismatch");
    Tree t;
    t.n_ = n;
    t.edges_ = std::move(edges);
    t.tags_ = std::move(tags);
    t.build_adjacency();
    t.check_connected();
    return t;
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& generation_tags() const { return tags_; }

  std::uint32_t degree(VertexId v) const { return off_[v + 1] - off_[v]; }

  // Neighbors of v, sorted ascending.
  const VertexId* neighbors_begin(VertexId v) const { return &adj_[off_[v]]; }
  const VertexId* neighbors_end(VertexId v) const { return &adj_[off_[v + 1]]; }

 private:
  void build_adjacency() {
    off_.assign(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
      ++off_[u + 1];
      ++off_[v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) off_[i + 1] += off_[i];
    adj_.resize(2 * edges_.size());
    std::vector<std::uint32_t> cur(off_.begin(), off_.end() - 1);
    for (const auto& [u, v] : edges_) {
      adj_[cur[u]++] = v;
      adj_[cur[v]++] = u;
    }
    // Sorted edge input plus stable fill keeps each neighbor list sorted.
  }

  void check_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (const VertexId* p = neighbors_begin(u); p != neighbors_end(u); ++p) {
        if (!seen[*p]) {
          seen[*p] = 1;
          ++reached;
          stack.push_back(*p);
        }
      }
    }
    if (reached != n_)
      throw Error(Errc::NotATree, "edge list is not connected");
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> tags_;
  std::vector<std::uint32_t> off_;
  std::vector<VertexId> adj_;
};

// ---------------------------------------------------------------------------
// Elementary constructions.

inline Tree single_edge() { return Tree::from_edges(2, {{0, 1}}); }

inline Tree path_tree(std::size_t a) {
  if (a < 1) throw Error(Errc::BadParam, "path needs at least one vertex");
  std::vector<Edge> e;
  for (VertexId i = 0; i + 1 < a; ++i) e.push_back({i, i + 1});
  return Tree::from_edges(a, std::move(e));
}

// Star with `leaves` leaves: vertex 0 is the center.
inline Tree star_tree(std::size_t leaves) {
  if (leaves < 1) throw Error(Errc::BadParam, "star needs at least one leaf");
  std::vector<Edge> e;
  for (VertexId i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Tree::from_edges(leaves + 1, std::move(e));
}

// ---------------------------------------------------------------------------
// Distances.

// BFS distances from src into `dist` (resized; entries are exact hop counts).
inline void bfs_distances(const Tree& t, VertexId src,
                          std::vector<std::uint32_t>& dist,
                          std::vector<VertexId>& queue) {
  const std::uint32_t unvisited = UINT32_MAX;
  dist.assign(t.vertex_count(), unvisited);
  queue.clear();
  queue.push_back(src);
  dist[src] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    std::uint32_t du = dist[u];
    for (const VertexId* p = t.neighbors_begin(u); p != t.neighbors_end(u); ++p) {
      if (dist[*p] == unvisited) {
        dist[*p] = du + 1;
        queue.push_back(*p);
      }
    }
  }
}

inline std::vector<std::uint32_t> bfs_distances(const Tree& t, VertexId src) {
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
  bfs_distances(t, src, dist, queue);
  return dist;
}

inline constexpr std::size_t kOracleVertexCap = 200000;

// Sum of geodesic distances over unordered vertex pairs, by BFS from every
// vertex. Independent of every closed form; this is the audit oracle.
inline ExactInt wiener_oracle(const Tree& t, unsigned threads = 1) {
  std::size_t n = t.vertex_count();
  if (n > kOracleVertexCap) {
    throw Error(Errc::ResourceCap,
                "wiener_oracle supports at most " +
                    std::to_string(kOracleVertexCap) + " vertices, got " +
                    std::to_string(n));
  }
  unsigned workers = threads < 1 ? 1 : threads;
  std::vector<std::uint64_t> partial(workers, 0);
  parallel_for(workers, workers, [&](std::size_t w) {
    std::vector<std::uint32_t> dist;
    std::vector<VertexId> queue;
    std::uint64_t acc = 0;
    for (std::size_t src = w; src < n; src += workers) {
      bfs_distances(t, static_cast<VertexId>(src), dist, queue);
      std::uint64_t row = 0;
      for (std::uint32_t d : dist) row += d;
      acc += row;  // bounded by n^2 * diameter <= n^3 < 2^63 at the cap
    }
    partial[w] = acc;
  });
  ExactInt total = 0;
  for (std::uint64_t p : partial) total += p;
  if (total % 2 != 0) throw std::logic_error("ordered distance sum must be even");
  return total / 2;
}

// Farthest vertex from src (ties: smallest id) and its distance.
inline std::pair<VertexId, std::uint32_t> farthest_vertex(const Tree& t,
                                                          VertexId src) {
  auto dist = bfs_distances(t, src);
  VertexId best = src;
  std::uint32_t bd = 0;
  for (VertexId v = 0; v < dist.size(); ++v) {
    if (dist[v] > bd) {
      bd = dist[v];
      best = v;
    }
  }
  return {best, bd};
}

// Exact tree diameter via two BFS sweeps.
inline std::uint32_t diameter(const Tree& t) {
  auto [a, d0] = farthest_vertex(t, 0);
  auto [b, d1] = farthest_vertex(t, a);
  (void)b;
  (void)d0;
  return d1;
}

struct DegreeStats {
  std::vector<std::uint32_t> sequence;  // sorted descending
  std::uint32_t max_degree = 0;
  ExactRatio average;  // 2|E| / |V|
};

inline DegreeStats degree_stats(const Tree& t) {
  DegreeStats s;
  s.sequence.reserve(t.vertex_count());
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    s.sequence.push_back(t.degree(v));
  std::sort(s.sequence.begin(), s.sequence.end(), std::greater<>());
  s.max_degree = s.sequence.empty() ? 0 : s.sequence.front();
  s.average = ExactRatio(2 * ExactInt(t.edge_count()), ExactInt(t.vertex_count()));
  return s;
}

// ---------------------------------------------------------------------------
// Text formats.

// Edge-list format: optional leading '#' comment lines, then "n m", then m
// lines "u v" with 0-based endpoints.
inline Tree read_edge_list(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_data_line(header))
    throw Error(Errc::BadFormat, "edge list: missing header line");
  std::istringstream hs(header);
  std::size_t n = 0, m = 0;
  if (!(hs >> n >> m))
    throw Error(Errc::BadFormat, "edge list: header must be \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string row;
    if (!next_data_line(row))
      throw Error(Errc::BadFormat, "edge list: expected " + std::to_string(m) +
                                       " edges, got " + std::to_string(i));
    std::istringstream rs(row);
    std::uint64_t u, v;
    if (!(rs >> u >> v))
      throw Error(Errc::BadFormat, "edge list: bad edge line: " + row);
    if (u >= n || v >= n)
      throw Error(Errc::BadVertexId, "edge list: endpoint out of range: " + row);
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return Tree::from_edges(n, std::move(edges));
}

inline void write_edge_list(const Tree& t, std::ostream& out,
                            const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << "\n";
  out << t.vertex_count() << " " << t.edge_count() << "\n";
  for (const auto& [u, v] : t.edges()) out << u << " " << v << "\n";
}

inline void write_dot(const Tree& t, std::ostream& out,
                      const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "// " << c << "\n";
  out << "graph tree {\n";
  out << "  node [shape=point];\n";
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    out << "  v" << v << " [gen=" << t.generation_tags()[v] << "];\n";
  for (const auto& [u, v] : t.edges())
    out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
}

}  // namespace treelike
