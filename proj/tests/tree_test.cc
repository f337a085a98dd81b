#include "treelike/tree.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

namespace treelike {
namespace {

Tree relabel(const Tree& t, const std::vector<VertexId>& perm) {
  std::vector<Edge> edges;
  edges.reserve(t.edge_count());
  for (const auto& [u, v] : t.edges()) edges.push_back({perm[u], perm[v]});
  return Tree::from_edges(t.vertex_count(), std::move(edges));
}

TEST(Tree, PathDistanceSumMatchesBinomial) {
  // Sum of pairwise distances on the a-vertex path is C(a+1, 3).
  for (std::size_t a = 2; a <= 120; ++a) {
    ExactInt n(a);
    ExactInt expect = (n + 1) * n * (n - 1) / 6;
    EXPECT_EQ(wiener_oracle(path_tree(a)), expect) << "a=" << a;
  }
  EXPECT_EQ(wiener_oracle(path_tree(500)), ExactInt(501) * 500 * 499 / 6);
}

TEST(Tree, StarDistanceSumIsLeafCountSquared) {
  for (std::size_t k = 1; k <= 60; ++k) {
    EXPECT_EQ(wiener_oracle(star_tree(k)), ExactInt(k) * ExactInt(k)) << "k=" << k;
  }
}

TEST(Tree, DistanceSumInvariantUnderRelabeling) {
  std::mt19937 rng(7);
  Tree t = path_tree(17);
  ExactInt base = wiener_oracle(t);
  std::vector<VertexId> perm(t.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(wiener_oracle(relabel(t, perm)), base);
  }
}

TEST(Tree, OracleDeterministicAcrossThreadCounts) {
  Tree t = path_tree(301);
  ExactInt one = wiener_oracle(t, 1);
  EXPECT_EQ(wiener_oracle(t, 2), one);
  EXPECT_EQ(wiener_oracle(t, 4), one);
}

TEST(Tree, BfsDistancesOnPath) {
  Tree t = path_tree(9);
  auto d = bfs_distances(t, 3);
  for (VertexId v = 0; v < 9; ++v) {
    EXPECT_EQ(d[v], static_cast<std::uint32_t>(v > 3 ? v - 3 : 3 - v));
  }
}

TEST(Tree, DiameterMatchesMaxDistance) {
  std::vector<Tree> cases;
  cases.push_back(path_tree(12));
  cases.push_back(star_tree(6));
  cases.push_back(Tree::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}}));
  for (const Tree& t : cases) {
    std::uint32_t max_d = 0;
    for (VertexId s = 0; s < t.vertex_count(); ++s) {
      for (std::uint32_t d : bfs_distances(t, s)) max_d = std::max(max_d, d);
    }
    EXPECT_EQ(diameter(t), max_d);
  }
}

TEST(Tree, DegreeStatsOnStar) {
  DegreeStats s = degree_stats(star_tree(5));
  EXPECT_EQ(s.max_degree, 5u);
  ASSERT_EQ(s.sequence.size(), 6u);
  EXPECT_EQ(s.sequence.front(), 5u);
  EXPECT_EQ(s.sequence.back(), 1u);
  EXPECT_EQ(s.average, ExactRatio(10, 6));
}

TEST(Tree, FromEdgesValidates) {
  EXPECT_THROW(Tree::from_edges(3, {{0, 1}}), Error);                  // too few edges
  EXPECT_THROW(Tree::from_edges(2, {{0, 1}, {0, 1}}), Error);          // too many edges
  EXPECT_THROW(Tree::from_edges(3, {{0, 1}, {1, 3}}), Error);          // id out of range
  EXPECT_THROW(Tree::from_edges(3, {{0, 1}, {2, 2}}), Error);          // self loop
  EXPECT_THROW(Tree::from_edges(4, {{0, 1}, {1, 2}, {0, 2}}), Error);  // cycle + isolated
  try {
    Tree::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code, Errc::NotATree);
  }
}

TEST(Tree, SingleVertexIsValid) {
  Tree t = Tree::from_edges(1, {});
  EXPECT_EQ(t.vertex_count(), 1u);
  EXPECT_EQ(t.edge_count(), 0u);
  EXPECT_EQ(wiener_oracle(t), ExactInt(0));
}

TEST(Tree, EdgesAreNormalizedAndSorted) {
  Tree t = Tree::from_edges(4, {{3, 2}, {1, 0}, {2, 1}});
  std::vector<Edge> expect = {{0, 1}, {1, 2}, {2, 3}};
  EXPECT_EQ(t.edges(), expect);
}

TEST(Tree, GenerationTagsDefaultToZero) {
  Tree t = path_tree(4);
  EXPECT_EQ(t.generation_tags(), std::vector<std::uint32_t>(4, 0));
  Tree tagged = Tree::from_edges(3, {{0, 1}, {1, 2}}, {0, 0, 1});
  EXPECT_EQ(tagged.generation_tags(), (std::vector<std::uint32_t>{0, 0, 1}));
}

TEST(Tree, EdgeListRoundTrip) {
  Tree t = Tree::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  std::ostringstream out;
  write_edge_list(t, out, {"five vertices"});
  std::istringstream in(out.str());
  Tree back = read_edge_list(in);
  EXPECT_EQ(back.vertex_count(), t.vertex_count());
  EXPECT_EQ(back.edges(), t.edges());
}

TEST(Tree, ReadEdgeListRejectsMalformedInput) {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_edge_list(in);
  };
  EXPECT_THROW(parse(""), Error);
  EXPECT_THROW(parse("abc\n"), Error);
  EXPECT_THROW(parse("3 2\n0 1\n"), Error);        // truncated
  EXPECT_THROW(parse("3 2\n0 1\n1 5\n"), Error);   // id out of range
  EXPECT_THROW(parse("3 2\n0 1\nx y\n"), Error);   // non-numeric edge
  Tree ok = parse("# comment\n3 2\n0 1\n1 2\n");
  EXPECT_EQ(ok.vertex_count(), 3u);
}

TEST(Tree, WriteDotMentionsEveryEdge) {
  Tree t = star_tree(3);
  std::ostringstream out;
  write_dot(t, out, {"star"});
  std::string s = out.str();
  EXPECT_NE(s.find("// star"), std::string::npos);
  EXPECT_NE(s.find("graph tree {"), std::string::npos);
  for (const auto& [u, v] : t.edges()) {
    std::string line = "v" + std::to_string(u) + " -- v" + std::to_string(v) + ";";
    EXPECT_NE(s.find(line), std::string::npos) << line;
  }
}

TEST(Tree, OracleRefusesOversizedInput) {
  // Build a star one past the size cap without paying for quadratic work.
  std::vector<Edge> edges;
  std::size_t n = kOracleVertexCap + 1;
  edges.reserve(n - 1);
  for (VertexId v = 1; v < n; ++v) edges.push_back({0, v});
  Tree t = Tree::from_edges(n, std::move(edges));
  try {
    wiener_oracle(t);
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code, Errc::ResourceCap);
  }
}

}  // namespace
}  // namespace treelike
