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

#include <cstdlib>
#include <string>

#include "gtest/gtest.h"

#include "cwexpr/builders.h"
#include "cwexpr/errors.h"
#include "cwexpr/graph.h"
#include "cwexpr/graph_io.h"
#include "cwexpr/graph_ops.h"
#include "cwexpr/isomorphism.h"
#include "test_util.h"

namespace cwexpr {
namespace {

using ::cwexpr::testing::Id;
using ::cwexpr::testing::MakeGraph;

TEST(LabeledGraphTest, RejectsSelfLoopsAndBadIds) {
  LabeledGraph g;
  g.AddVertex(Id("a"));
  EXPECT_THROW(g.AddEdge(Id("a"), Id("a")), PreconditionError);
  EXPECT_THROW(g.AddEdge(Id("a"), Id("z")), PreconditionError);
  EXPECT_THROW(VertexId("a b"), PreconditionError);
  EXPECT_THROW(VertexId("x(1)"), PreconditionError);
}

TEST(LabeledGraphTest, EdgesAreSymmetricAndCounted) {
  LabeledGraph g = MakeGraph({{"a", 1}, {"b", 2}}, {{"b", "a"}});
  EXPECT_TRUE(g.HasEdge(Id("a"), Id("b")));
  EXPECT_TRUE(g.HasEdge(Id("b"), Id("a")));
  g.AddEdge(Id("a"), Id("b"));
  EXPECT_EQ(g.NumEdges(), 1u);
  g.RemoveVertex(Id("a"));
  EXPECT_EQ(g.NumEdges(), 0u);
  EXPECT_EQ(g.LabelOf(Id("b")), 2);
}

TEST(GraphOpsTest, JoinOfTwoSingletonsIsK2) {
  const LabeledGraph a = MakeGraph({{"a", 1}}, {});
  const LabeledGraph b = MakeGraph({{"b", 1}}, {});
  const LabeledGraph j = ops::Join(a, b);
  EXPECT_EQ(j, MakeGraph({{"a", 1}, {"b", 1}}, {{"a", "b"}}));
}

TEST(GraphOpsTest, SwitchingPawAtDegreeTwoVertexGivesP4) {
  const LabeledGraph s = ops::Switching(PawGraph(), Id("b"));
  EXPECT_TRUE(Isomorphic(s, PathGraph(4)));
}

TEST(GraphOpsTest, CartesianSquareOfP3IsTheGrid) {
  const ProductGraph p = ops::Cartesian(PathGraph(3), PathGraph(3));
  ASSERT_EQ(p.graph.NumVertices(), 9u);
  // Independent adjacency rule: coordinates differ in exactly one position,
  // and there by one.
  for (const auto& [x, xc] : p.pairs) {
    for (const auto& [y, yc] : p.pairs) {
      if (x == y) continue;
      const int i1 = std::stoi(xc.first.str().substr(1));
      const int j1 = std::stoi(xc.second.str().substr(1));
      const int i2 = std::stoi(yc.first.str().substr(1));
      const int j2 = std::stoi(yc.second.str().substr(1));
      const bool grid = std::abs(i1 - i2) + std::abs(j1 - j2) == 1;
      EXPECT_EQ(p.graph.HasEdge(x, y), grid) << x.str() << " " << y.str();
    }
  }
  EXPECT_TRUE(Isomorphic(p.graph, GridGraph(3, 3)));
}

TEST(GraphOpsTest, DoubleComplementKeepsIds) {
  const LabeledGraph p4 = PathGraph(4);
  EXPECT_EQ(ops::Complement(ops::Complement(p4)), p4);
  EXPECT_TRUE(Isomorphic(ops::Complement(p4), p4));
}

TEST(GraphOpsTest, LexicographicAndCorona) {
  const LabeledGraph k2 = CompleteGraph(2);
  EXPECT_TRUE(Isomorphic(ops::Lexicographic(k2, k2).graph, CompleteGraph(4)));
  const LabeledGraph k1 = CompleteGraph(1);
  EXPECT_TRUE(Isomorphic(ops::Corona(k1, k2), CompleteGraph(3)));
}

TEST(GraphOpsTest, SubdivideIdentifyContract) {
  const LabeledGraph p3 = PathGraph(3);
  EXPECT_TRUE(Isomorphic(ops::Subdivide(p3, Id("v0"), Id("v1"), Id("z")),
                         PathGraph(4)));
  const LabeledGraph tri =
      ops::Identify(PathGraph(4), Id("v0"), Id("v3"), Id("z"));
  EXPECT_TRUE(Isomorphic(tri, CompleteGraph(3)));
  EXPECT_THROW(ops::Contract(p3, Id("v0"), Id("v2"), Id("z")),
               PreconditionError);
  EXPECT_TRUE(Isomorphic(
      ops::Contract(CompleteGraph(3), Id("v0"), Id("v1"), Id("z")),
      CompleteGraph(2)));
}

TEST(GraphOpsTest, QuotientOfK4ByModule) {
  const LabeledGraph q =
      ops::Quotient(CompleteGraph(4), {Id("v0"), Id("v1")});
  EXPECT_TRUE(Isomorphic(q, CompleteGraph(3)));
  EXPECT_THROW(ops::Quotient(PathGraph(3), {Id("v0"), Id("v1")}),
               PreconditionError);
}

TEST(IsomorphismTest, K2MapsToItself) {
  const LabeledGraph k2 = CompleteGraph(2);
  const auto iso = FindIsomorphism(k2, k2, true);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(iso->size(), 2u);
}

TEST(IsomorphismTest, PawIsNotP4) {
  EXPECT_FALSE(Isomorphic(PawGraph(), PathGraph(4)));
}

TEST(IsomorphismTest, RespectsLabelsWhenAsked) {
  const LabeledGraph a = MakeGraph({{"a", 1}, {"b", 2}}, {{"a", "b"}});
  const LabeledGraph b = MakeGraph({{"x", 1}, {"y", 1}}, {{"x", "y"}});
  EXPECT_TRUE(Isomorphic(a, b));
  EXPECT_FALSE(Isomorphic(a, b, true));
}

TEST(BipartitionTest, Verdicts) {
  const LabeledGraph m2 = MakeGraph(
      {{"a1", 1}, {"a2", 1}, {"b1", 1}, {"b2", 1}},
      {{"a1", "b1"}, {"a2", "b2"}});
  EXPECT_EQ(ValidateBipartition(m2, {{Id("a1"), Id("a2")},
                                     {Id("b1"), Id("b2")}}),
            BipartitionVerdict::kValid);
  const LabeledGraph k3 = CompleteGraph(3);
  EXPECT_EQ(ValidateBipartition(k3, {{Id("v0")}, {Id("v1"), Id("v2")}}),
            BipartitionVerdict::kSameSideEdge);
  EXPECT_EQ(ValidateBipartition(k3, {{Id("v0")}, {Id("v1")}}),
            BipartitionVerdict::kCoverageMismatch);
  const LabeledGraph c6 = CycleGraph(6);
  Bipartition alt;
  for (int i = 0; i < 6; ++i) {
    (i % 2 ? alt.side2 : alt.side1).insert(Id("v" + std::to_string(i)));
  }
  EXPECT_EQ(ValidateBipartition(c6, alt), BipartitionVerdict::kValid);
}

TEST(GraphIoTest, RoundTrip) {
  const LabeledGraph g = MakeGraph({{"a", 2}, {"b", 1}, {"c", 3}},
                                   {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(ParseGraph(FormatGraph(g)), g);
}

TEST(GraphIoTest, ErrorsCarryLineNumbers) {
  try {
    ParseGraph("v a 1\ne a b\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(ParseGraph("v a 0\n"), ParseError);
  EXPECT_THROW(ParseGraph("v a 1\nv a 1\n"), ParseError);
}

TEST(GraphIoTest, DotMentionsEveryEdge) {
  const std::string dot = FormatDot(PathGraph(3));
  EXPECT_NE(dot.find("\"v0\" -- \"v1\""), std::string::npos);
  EXPECT_NE(dot.find("\"v1\" -- \"v2\""), std::string::npos);
}

}  // namespace
}  // namespace cwexpr
