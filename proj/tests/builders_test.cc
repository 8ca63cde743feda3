// Copyright 2026 The cwexpr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include "gtest/gtest.h"

#include "cwexpr/builders.h"
#include "cwexpr/errors.h"
#include "cwexpr/expr_io.h"
#include "cwexpr/graph_ops.h"
#include "cwexpr/isomorphism.h"
#include "cwexpr/width_oracle.h"
#include "test_util.h"

namespace cwexpr {
namespace {

using ::cwexpr::testing::Id;
using ::cwexpr::testing::RefEval;

TEST(FamiliesTest, Shapes) {
  const LabeledGraph p4 = PathGraph(4);
  EXPECT_EQ(p4.NumVertices(), 4u);
  EXPECT_EQ(p4.NumEdges(), 3u);
  EXPECT_TRUE(IsTree(p4));
  const LabeledGraph paw = PawGraph();
  EXPECT_EQ(paw.NumVertices(), 4u);
  EXPECT_EQ(paw.NumEdges(), 4u);
  EXPECT_EQ(paw.Degree(Id("d")), 1);
  const LabeledGraph grid = GridGraph(3, 3);
  EXPECT_EQ(grid.NumVertices(), 9u);
  EXPECT_EQ(grid.NumEdges(), 12u);
  EXPECT_EQ(StarGraph(5).Degree(Id("v0")), 4);
  EXPECT_EQ(CompleteBipartite(2, 3).NumEdges(), 6u);
  EXPECT_EQ(CycleGraph(5).NumEdges(), 5u);
  EXPECT_THROW(CycleGraph(2), PreconditionError);
}

TEST(FamiliesTest, RandomFamiliesAreSeedDeterministic) {
  EXPECT_EQ(RandomTree(12, 5), RandomTree(12, 5));
  EXPECT_EQ(RandomGraph(8, 40, 9), RandomGraph(8, 40, 9));
  EXPECT_TRUE(IsTree(RandomTree(12, 5)));
  EXPECT_EQ(GenFamily("random-tree", {7}, 3), RandomTree(7, 3));
  EXPECT_THROW(GenFamily("random-tree", {7}), PreconditionError);
  EXPECT_EQ(GenFamily("path", {4}), PathGraph(4));
  EXPECT_THROW(GenFamily("no-such-family", {}), PreconditionError);
}

TEST(TreeExpressionsTest, SingleVertexTree) {
  const LabeledGraph k1 = PathGraph(1);
  const NlcExpr x = TreeToNlc3(k1);
  EXPECT_TRUE(x.is_leaf());
  EXPECT_EQ(RefEval(x).Unlabeled(), k1);
}

TEST(TreeExpressionsTest, Star) {
  const LabeledGraph star = StarGraph(5);
  const NlcExpr x = TreeToNlc3(star);
  EXPECT_LE(WidthOf(x), 3);
  EXPECT_EQ(RefEval(x).Unlabeled(), star);
  const CwExpr c = TreeToCw3(star);
  EXPECT_LE(WidthOf(c), 3);
  EXPECT_EQ(RefEval(c).Unlabeled(), star);
}

TEST(TreeExpressionsTest, RandomTrees) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 15);
    const LabeledGraph t = RandomTree(n, seed);
    const NlcExpr x = TreeToNlc3(t);
    EXPECT_LE(WidthOf(x), 3);
    EXPECT_EQ(RefEval(x).Unlabeled(), t);
    const CwExpr c = TreeToCw3(t);
    EXPECT_LE(WidthOf(c), 3);
    EXPECT_EQ(RefEval(c).Unlabeled(), t);
    const CwExpr cc = TreeComplementToCw4(t);
    EXPECT_LE(WidthOf(cc), 4);
    EXPECT_EQ(RefEval(cc).Unlabeled(), ops::Complement(t));
    if (n <= 8) EXPECT_LE(ExactNlcWidth(t), 3);
  }
  EXPECT_THROW(TreeToNlc3(CycleGraph(4)), PreconditionError);
}

TEST(TreeCographTest, NamedRecipes) {
  const BuiltExpressions p4 = TreeCographExpressions(*ParseRecipe("tree(P4)"));
  EXPECT_LE(WidthOf(p4.nlc), 3);
  EXPECT_LE(WidthOf(p4.cw), 3);
  EXPECT_TRUE(Isomorphic(RefEval(p4.nlc), PathGraph(4)));
  const auto recipe = ParseRecipe("complement(tree(star(4)))");
  const BuiltExpressions s = TreeCographExpressions(*recipe);
  EXPECT_LE(WidthOf(s.nlc), 3);
  EXPECT_LE(WidthOf(s.cw), 4);
  const LabeledGraph expected = RecipeGraph(*recipe);
  EXPECT_TRUE(Isomorphic(expected, ops::Complement(StarGraph(4))));
  EXPECT_TRUE(SameUnlabeled(RefEval(s.nlc), expected));
  EXPECT_TRUE(SameUnlabeled(RefEval(s.cw), expected));
  EXPECT_THROW(ParseRecipe("tree(P4"), ParseError);
}

TEST(TreeCographTest, RandomRecipes) {
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const std::string text = RandomRecipe(rng, 4);
    const auto recipe = ParseRecipe(text);
    const LabeledGraph expected = RecipeGraph(*recipe);
    const BuiltExpressions b = TreeCographExpressions(*recipe);
    EXPECT_TRUE(SameUnlabeled(RefEval(b.nlc), expected)) << text;
    EXPECT_TRUE(SameUnlabeled(RefEval(b.cw), expected)) << text;
    EXPECT_LE(WidthOf(b.nlc), 3) << text;
    EXPECT_LE(WidthOf(b.cw), 4) << text;
  }
}

TEST(CographTest, CotreeExpressions) {
  const BuiltExpressions b = CographExpressions("join(leaf,leaf)", "k");
  EXPECT_TRUE(Isomorphic(RefEval(b.nlc), CompleteGraph(2)));
  EXPECT_EQ(WidthOf(b.nlc), 1);
  EXPECT_LE(WidthOf(b.cw), 2);
  Rng rng(72);
  for (int i = 0; i < 50; ++i) {
    const std::string cotree = RandomCotree(rng, 1 + Draw(rng, 8));
    const BuiltExpressions c = CographExpressions(cotree, "k");
    EXPECT_EQ(RefEval(c.nlc).Unlabeled(), RefEval(c.cw).Unlabeled());
    EXPECT_EQ(WidthOf(c.nlc), 1);
    EXPECT_LE(WidthOf(c.cw), 2);
  }
}

TEST(CographTreeTest, NoSubstitutionsGiveTheTree) {
  const LabeledGraph t = RandomTree(7, 4);
  const BuiltExpressions b = CographTreeExpressions(t, {});
  EXPECT_EQ(RefEval(b.nlc).Unlabeled(), t);
  EXPECT_LE(WidthOf(b.nlc), 3);
  EXPECT_LE(WidthOf(b.cw), 3);
}

TEST(CographTreeTest, MiddleOfP3ByK2) {
  const LabeledGraph p3 = PathGraph(3);
  const std::map<VertexId, std::string> subs = {
      {Id("v1"), "join(leaf,leaf)"}};
  const BuiltExpressions b = CographTreeExpressions(p3, subs);
  const LabeledGraph expected = CographTreeGraph(p3, subs);
  EXPECT_TRUE(SameUnlabeled(RefEval(b.nlc), expected));
  EXPECT_TRUE(SameUnlabeled(RefEval(b.cw), expected));
  // Independently: two adjacent twins, each joined to both path ends.
  EXPECT_EQ(expected.NumVertices(), 4u);
  EXPECT_EQ(expected.NumEdges(), 5u);
}

TEST(CographTreeTest, RandomInstances) {
  Rng rng(73);
  for (int i = 0; i < 100; ++i) {
    const LabeledGraph t = RandomTree(1 + Draw(rng, 8), rng());
    std::map<VertexId, std::string> subs;
    for (const VertexId& v : t.Vertices()) {
      if (Draw(rng, 2)) subs[v] = RandomCotree(rng, 1 + Draw(rng, 4));
    }
    const BuiltExpressions b = CographTreeExpressions(t, subs);
    const LabeledGraph expected = CographTreeGraph(t, subs);
    EXPECT_TRUE(SameUnlabeled(RefEval(b.nlc), expected));
    EXPECT_TRUE(SameUnlabeled(RefEval(b.cw), expected));
    EXPECT_LE(WidthOf(b.nlc), 3);
    EXPECT_LE(WidthOf(b.cw), 3);
  }
}

TEST(RandomExpressionTest, DeterministicAndWithinWidth) {
  Rng a(5), b(5);
  EXPECT_EQ(RandomNlcExpr(a, 9, 3), RandomNlcExpr(b, 9, 3));
  Rng rng(74);
  for (int i = 0; i < 100; ++i) {
    const int leaves = 1 + Draw(rng, 10);
    const int k = 1 + Draw(rng, 4);
    const NlcExpr n = RandomNlcExpr(rng, leaves, k);
    EXPECT_LE(WidthOf(n), k);
    EXPECT_EQ(LeafCount(n), leaves);
    const BipartiteCw bc = RandomBipartiteCwExpr(rng, leaves, 2 + Draw(rng, 3));
    EXPECT_EQ(ValidateBipartition(RefEval(bc.expr), bc.sides),
              BipartitionVerdict::kValid);
    const BipartiteNlc bn =
        RandomBipartiteNlcExpr(rng, leaves, 2 + Draw(rng, 3));
    EXPECT_EQ(ValidateBipartition(RefEval(bn.expr), bn.sides),
              BipartitionVerdict::kValid);
  }
}

TEST(EnumerationTest, KnownCounts) {
  const int expected[] = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(NonIsomorphicGraphs(n).size(),
              static_cast<std::size_t>(expected[n - 1]));
  }
}

}  // namespace
}  // namespace cwexpr
