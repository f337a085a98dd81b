#include "treelike/enumerate.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

namespace treelike {
namespace {

TEST(Enumerate, FreeTreeCountsThroughTwelveVertices) {
  const std::size_t expect[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(all_trees(n).size(), expect[n - 1]) << "n=" << n;
  }
}

TEST(Enumerate, TreesArePairwiseNonIsomorphic) {
  for (std::size_t n = 4; n <= 9; ++n) {
    auto trees = all_trees(n);
    std::set<std::string> forms;
    for (const Tree& t : trees) {
      EXPECT_EQ(t.vertex_count(), n);
      EXPECT_EQ(t.edge_count(), n - 1);
      EXPECT_TRUE(forms.insert(canonical_form(t)).second);
    }
  }
}

TEST(Enumerate, UpToAccumulatesAllSizes) {
  auto trees = all_trees_up_to(8);
  EXPECT_EQ(trees.size(), 1u + 1 + 1 + 2 + 3 + 6 + 11 + 23);
  std::size_t prev = 0;
  for (const Tree& t : trees) {
    EXPECT_GE(t.vertex_count(), prev);  // grouped by increasing size
    prev = t.vertex_count();
  }
}

TEST(Enumerate, CanonicalFormIsRelabelingInvariant) {
  std::mt19937 rng(11);
  for (std::size_t n = 5; n <= 8; ++n) {
    for (const Tree& t : all_trees(n)) {
      std::string base = canonical_form(t);
      std::vector<VertexId> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Edge> edges;
      for (const auto& [u, v] : t.edges()) edges.push_back({perm[u], perm[v]});
      EXPECT_EQ(canonical_form(Tree::from_edges(n, std::move(edges))), base);
    }
  }
}

TEST(Enumerate, CanonicalFormSeparatesPathFromStar) {
  EXPECT_NE(canonical_form(path_tree(5)), canonical_form(star_tree(4)));
  EXPECT_EQ(canonical_form(path_tree(2)), canonical_form(star_tree(1)));
}

TEST(Enumerate, CentersOfPathsAndStars) {
  EXPECT_EQ(tree_centers(path_tree(5)), (std::vector<VertexId>{2}));
  EXPECT_EQ(tree_centers(path_tree(6)), (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(tree_centers(star_tree(7)), (std::vector<VertexId>{0}));
  EXPECT_EQ(tree_centers(single_edge()), (std::vector<VertexId>{0, 1}));
}

TEST(Enumerate, RandomTreeIsDeterministicInSeed) {
  Tree a = random_tree(40, 123);
  Tree b = random_tree(40, 123);
  EXPECT_EQ(a.edges(), b.edges());
  Tree c = random_tree(40, 124);
  EXPECT_NE(c.edges(), a.edges());
}

TEST(Enumerate, RandomTreeHasTreeShape) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (std::size_t n : {1, 2, 3, 7, 25}) {
      Tree t = random_tree(n, seed);
      EXPECT_EQ(t.vertex_count(), n);
      EXPECT_EQ(t.edge_count(), n - 1);  // connectivity enforced at construction
    }
  }
}

TEST(Enumerate, RandomTreesCoverMultipleShapes) {
  std::set<std::string> forms;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    forms.insert(canonical_form(random_tree(7, seed)));
  }
  EXPECT_GT(forms.size(), 3u);  // 11 shapes exist on 7 vertices
}

}  // namespace
}  // namespace treelike
