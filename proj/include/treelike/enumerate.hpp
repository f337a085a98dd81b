#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "treelike/tree.hpp"

namespace treelike {

// ---------------------------------------------------------------------------
// Canonical forms (AHU): two trees are isomorphic iff their canonical strings
// match. Free trees are rooted at their center(s); bicentral trees take the
// lexicographically smaller of the two rooted strings.

inline std::string canonical_rooted(const Tree& t, VertexId root) {
  std::string out;
  // Iterative post-order with child-string sorting, recursion-free so deep
  // paths cannot overflow the stack.
  struct Frame {
    VertexId v, parent;
    std::size_t next = 0;
    std::vector<std::string> subs;
  };
  std::vector<Frame> stack;
  stack.push_back({root, root, 0, {}});
  std::string result;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const VertexId* beg = t.neighbors_begin(f.v);
    const VertexId* end = t.neighbors_end(f.v);
    bool descended = false;
    while (beg + f.next != end) {
      VertexId c = beg[f.next++];
      if (c == f.parent) continue;
      stack.push_back({c, f.v, 0, {}});
      descended = true;
      break;
    }
    if (descended) continue;
    std::sort(f.subs.begin(), f.subs.end());
    std::string s = "(";
    for (const auto& sub : f.subs) s += sub;
    s += ")";
    stack.pop_back();
    if (stack.empty()) {
      result = std::move(s);
    } else {
      stack.back().subs.push_back(std::move(s));
    }
  }
  return result;
}

// Center(s) of a tree by repeated leaf stripping (one or two vertices).
inline std::vector<VertexId> tree_centers(const Tree& t) {
  std::size_t n = t.vertex_count();
  if (n <= 2) {
    std::vector<VertexId> all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::uint32_t> deg(n);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    std::vector<VertexId> next;
    for (VertexId v : layer) {
      for (const VertexId* p = t.neighbors_begin(v); p != t.neighbors_end(v); ++p) {
        if (--deg[*p] == 1) next.push_back(*p);
      }
    }
    remaining -= layer.size();
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

inline std::string canonical_form(const Tree& t) {
  std::string best;
  for (VertexId c : tree_centers(t)) {
    std::string s = canonical_rooted(t, c);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of rooted trees by canonical level sequences
// (successor rule: find the last entry > 2, shorten it by one, then tile the
// prefix pattern), filtered down to one representative per free tree through
// canonical-form rejection.

namespace detail {

inline Tree tree_from_level_sequence(const std::vector<std::uint32_t>& levels) {
  std::vector<Edge> edges;
  std::vector<VertexId> chain;  // chain[l-1] = current vertex at level l
  for (VertexId i = 0; i < levels.size(); ++i) {
    std::uint32_t l = levels[i];
    if (l >= 2) edges.push_back({chain[l - 2], i});
    if (chain.size() < l) chain.resize(l);
    chain[l - 1] = i;
  }
  return Tree::from_edges(levels.size(), std::move(edges));
}

}  // namespace detail

// All rooted trees on n vertices, one canonical level sequence each.
inline void for_each_rooted_level_sequence(
    std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  if (n == 0) return;
  std::vector<std::uint32_t> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<std::uint32_t>(i + 1);
  while (true) {
    fn(l);
    std::size_t p = 0;
    bool found = false;
    for (std::size_t i = n; i-- > 1;) {
      if (l[i] > 2) {
        p = i;
        found = true;
        break;
      }
    }
    if (!found) return;
    std::size_t q = p - 1;
    while (l[q] != l[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) l[i] = l[i - (p - q)];
  }
}

// All pairwise non-isomorphic free trees on exactly n vertices.
// Counts for n = 1..12: 1 1 1 2 3 6 11 23 47 106 235 551.
inline std::vector<Tree> all_trees(std::size_t n) {
  std::vector<Tree> out;
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(Tree::from_edges(1, {}));
    return out;
  }
  std::set<std::string> seen;
  for_each_rooted_level_sequence(n, [&](const std::vector<std::uint32_t>& l) {
    Tree t = detail::tree_from_level_sequence(l);
    if (seen.insert(canonical_form(t)).second) out.push_back(std::move(t));
  });
  return out;
}

inline std::vector<Tree> all_trees_up_to(std::size_t max_n) {
  std::vector<Tree> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto batch = all_trees(n);
    for (auto& t : batch) out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random labelled trees from random Prüfer sequences (deterministic in seed).

inline Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::BadParam, "random_tree: n must be positive");
  if (n == 1) return Tree::from_edges(1, {});
  if (n == 2) return single_edge();
  auto next = [state = seed]() mutable {
    // SplitMix64 step
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::vector<VertexId> prufer(n - 2);
  for (auto& x : prufer) x = static_cast<VertexId>(next() % n);
  std::vector<std::uint32_t> deg(n, 1);
  for (VertexId x : prufer) ++deg[x];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::set<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  for (VertexId x : prufer) {
    VertexId leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, x});
    if (--deg[x] == 1) leaves.insert(x);
  }
  VertexId a = *leaves.begin();
  VertexId b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return Tree::from_edges(n, std::move(edges));
}

}  // namespace treelike
