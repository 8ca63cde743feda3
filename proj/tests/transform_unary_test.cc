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
#include "cwexpr/transform.h"
#include "cwexpr/width_oracle.h"
#include "property_harness.h"
#include "test_util.h"

namespace cwexpr {
namespace {

using ::cwexpr::testing::Id;
using ::cwexpr::testing::MakeGraph;
using ::cwexpr::testing::RefEval;
using ::cwexpr::testing::RunProperty;

constexpr char kPawNlc[] = "x[1-1](v(a,1),x[](v(d,1),x[1-1](v(b,1),v(c,1))))";
constexpr char kPawCw[] =
    "eta(1,2)(u(v(a,2),u(v(d,1),rho(2->1)(eta(1,2)(u(v(b,1),v(c,2)))))))";
constexpr char kP3Nlc[] = "x[1-2](v(b,1),x[](v(a,2),v(c,2)))";
constexpr char kP4Nlc[] = "x[1-1](x[1-2](v(a,1),v(b,2)),x[1-2](v(d,1),v(c,2)))";

NlcExpr Paw() { return ParseNlc(kPawNlc); }

TEST(TransformUnaryTest, PawFixturesEvaluateToPaw) {
  EXPECT_EQ(RefEval(Paw()).Unlabeled(), PawGraph());
  EXPECT_EQ(RefEval(ParseCw(kPawCw)).Unlabeled(), PawGraph());
}

TEST(TransformUnaryTest, InducedSubgraph) {
  const NlcResult r = TDeleteVertex(Paw(), Id("d"));
  EXPECT_TRUE(Isomorphic(RefEval(r.expr), CompleteGraph(3)));
  const NlcResult all = TInducedSubgraph(Paw(), {Id("a"), Id("b"), Id("c"),
                                                  Id("d")});
  EXPECT_EQ(all.expr, Paw());
  EXPECT_THROW(TInducedSubgraph(Paw(), {}), PreconditionError);
  EXPECT_THROW(TInducedSubgraph(Paw(), {Id("q")}), PreconditionError);
}

TEST(TransformUnaryTest, Quotient) {
  const NlcExpr k4 = ParseNlc("x[1-1](x[1-1](v(a,1),v(b,1)),"
                              "x[1-1](v(c,1),v(d,1)))");
  const NlcResult r = TQuotient(k4, {Id("a"), Id("b")});
  EXPECT_TRUE(Isomorphic(RefEval(r.expr), CompleteGraph(3)));
  EXPECT_EQ(r.correspondence.at(Id("b")), Id("a"));
  EXPECT_EQ(TQuotient(k4, {Id("c")}).expr, k4);
  EXPECT_THROW(TQuotient(Paw(), {Id("a"), Id("d")}), PreconditionError);
}

TEST(TransformUnaryTest, QuotientOnCographModules) {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const std::string cotree = RandomCotree(rng, 2 + Draw(rng, 7));
    const BuiltExpressions b = CographExpressions(cotree, "m");
    const LabeledGraph g = RefEval(b.nlc);
    // Siblings in the cotree form modules; search all pairs for one.
    const std::vector<VertexId> ids = g.Vertices();
    for (std::size_t x = 0; x < ids.size(); ++x) {
      for (std::size_t y = x + 1; y < ids.size(); ++y) {
        const VertexSet m = {ids[x], ids[y]};
        if (!IsModule(g, m)) continue;
        EXPECT_TRUE(SameUnlabeled(RefEval(TQuotient(b.nlc, m).expr),
                                  ops::Quotient(g, m)));
        EXPECT_TRUE(SameUnlabeled(RefEval(TQuotient(b.cw, m).expr),
                                  ops::Quotient(g, m)));
      }
    }
  }
}

TEST(TransformUnaryTest, ComplementOfP4) {
  const NlcExpr p4 = ParseNlc(kP4Nlc);
  const NlcResult r = TComplement(p4);
  EXPECT_TRUE(Isomorphic(RefEval(r.expr), PathGraph(4)));
  EXPECT_LE(WidthOf(r.expr), 2);
  EXPECT_EQ(RefEval(TComplement(r.expr).expr).Unlabeled(),
            RefEval(p4).Unlabeled());
}

TEST(TransformUnaryTest, BipartiteComplement) {
  const NlcExpr m2 = ParseNlc("x[](x[1-2](v(a1,1),v(b1,2)),"
                              "x[1-2](v(a2,1),v(b2,2)))");
  const Bipartition sides{{Id("a1"), Id("a2")}, {Id("b1"), Id("b2")}};
  const LabeledGraph g = RefEval(TBipComplement(m2, sides).expr);
  EXPECT_EQ(g.Unlabeled(),
            MakeGraph({{"a1", 1}, {"a2", 1}, {"b1", 1}, {"b2", 1}},
                      {{"a1", "b2"}, {"a2", "b1"}}));
  const NlcExpr k22 = ParseNlc("x[1-2](x[](v(a1,1),v(a2,1)),"
                               "x[](v(b1,2),v(b2,2)))");
  EXPECT_EQ(RefEval(TBipComplement(k22, sides).expr).NumEdges(), 0u);
  EXPECT_THROW(TBipComplement(m2, {{Id("a1")}, {Id("b1"), Id("b2")}}),
               PreconditionError);
  EXPECT_THROW(TBipComplement(m2, {{Id("a1"), Id("b1")},
                                   {Id("a2"), Id("b2")}}),
               PreconditionError);
}

TEST(TransformUnaryTest, SwitchingPawGivesP4) {
  const NlcResult r = TSwitch(Paw(), Id("b"));
  EXPECT_TRUE(Isomorphic(RefEval(r.expr), PathGraph(4)));
  EXPECT_LE(WidthOf(r.expr), 2);
  const CwResult c = TSwitch(ParseCw(kPawCw), Id("b"));
  EXPECT_TRUE(Isomorphic(RefEval(c.expr), PathGraph(4)));
  EXPECT_LE(WidthOf(c.expr), 4);
  const NlcExpr k1 = NlcExpr::Leaf(Id("a"), 1);
  EXPECT_EQ(TSwitch(k1, Id("a")).expr, k1);
}

TEST(TransformUnaryTest, LocalComplementPawGivesP4) {
  const NlcResult r = TLocalComplement(Paw(), Id("b"));
  EXPECT_TRUE(Isomorphic(RefEval(r.expr), PathGraph(4)));
  EXPECT_LE(WidthOf(r.expr), 2);
  const NlcResult o = TLocalComplement(Paw(), Id("b"), true);
  EXPECT_TRUE(Isomorphic(RefEval(o.expr), PathGraph(4)));
  const CwResult c = TLocalComplement(ParseCw(kPawCw), Id("b"));
  EXPECT_TRUE(Isomorphic(RefEval(c.expr), PathGraph(4)));
  const NlcExpr k1 = NlcExpr::Leaf(Id("a"), 1);
  EXPECT_EQ(TLocalComplement(k1, Id("a")).expr, k1);
}

TEST(TransformUnaryTest, InvolutionsRestoreTheGraph) {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const NlcExpr x = RandomNlcExpr(rng, 1 + Draw(rng, 9), 1 + Draw(rng, 3));
    const LabeledGraph g = RefEval(x).Unlabeled();
    const VertexId v = g.Vertices()[Draw(rng, static_cast<int>(
        g.NumVertices()))];
    EXPECT_EQ(RefEval(TSwitch(TSwitch(x, v).expr, v).expr).Unlabeled(), g);
    EXPECT_EQ(RefEval(TLocalComplement(TLocalComplement(x, v).expr, v).expr)
                  .Unlabeled(),
              g);
  }
}

TEST(TransformUnaryTest, EdgeAddAndDelete) {
  const NlcExpr e2 = ParseNlc("x[](v(a,1),v(b,1))");
  const NlcResult r = TAddEdge(e2, Id("a"), Id("b"));
  EXPECT_TRUE(Isomorphic(RefEval(r.expr), CompleteGraph(2)));
  EXPECT_EQ(RefEval(TDelEdge(r.expr, Id("a"), Id("b")).expr).Unlabeled(),
            RefEval(e2).Unlabeled());
  EXPECT_THROW(TAddEdge(r.expr, Id("a"), Id("b")), PreconditionError);
  EXPECT_THROW(TDelEdge(e2, Id("a"), Id("b")), PreconditionError);
}

TEST(TransformUnaryTest, EdgeAddOnCographsStaysWithinTwo) {
  // The construction only guarantees k + 2; the graphs themselves never
  // need more than two labels when the input has NLC width one.
  Rng rng(43);
  for (int i = 0; i < 40; ++i) {
    const BuiltExpressions b =
        CographExpressions(RandomCotree(rng, 2 + Draw(rng, 6)), "c");
    const LabeledGraph g = RefEval(b.nlc);
    const std::vector<VertexId> ids = g.Vertices();
    for (std::size_t x = 0; x < ids.size(); ++x) {
      for (std::size_t y = x + 1; y < ids.size(); ++y) {
        if (g.HasEdge(ids[x], ids[y])) continue;
        const NlcResult r = TAddEdge(b.nlc, ids[x], ids[y]);
        EXPECT_LE(WidthOf(r.expr), 3);
        EXPECT_LE(ExactNlcWidth(RefEval(r.expr)), 2);
      }
    }
  }
}

TEST(TransformUnaryTest, Subdivide) {
  const NlcExpr p3 = ParseNlc(kP3Nlc);
  const NlcResult r = TSubdivide(p3, Id("a"), Id("b"), Id("z"));
  EXPECT_TRUE(Isomorphic(RefEval(r.expr), PathGraph(4)));
  const NlcExpr k2 = ParseNlc("x[1-1](v(a,1),v(b,1))");
  EXPECT_TRUE(Isomorphic(
      RefEval(TSubdivide(k2, Id("a"), Id("b"), Id("z")).expr), PathGraph(3)));
  const CwExpr k2cw = ParseCw("eta(1,2)(u(v(a,1),v(b,2)))");
  EXPECT_TRUE(Isomorphic(
      RefEval(TSubdivide(k2cw, Id("a"), Id("b"), Id("z")).expr),
      PathGraph(3)));
}

TEST(TransformUnaryTest, IdentifyAndContract) {
  const NlcExpr e2 = ParseNlc("x[](v(a,1),v(b,1))");
  const NlcResult r = TIdentify(e2, Id("a"), Id("b"), Id("z"));
  EXPECT_EQ(RefEval(r.expr).Unlabeled(), MakeGraph({{"z", 1}}, {}));
  const NlcExpr p4 = ParseNlc(kP4Nlc);
  const LabeledGraph tri =
      RefEval(TIdentify(p4, Id("b"), Id("c"), Id("z")).expr);
  EXPECT_EQ(tri.Unlabeled(),
            MakeGraph({{"a", 1}, {"d", 1}, {"z", 1}},
                      {{"a", "d"}, {"a", "z"}, {"d", "z"}}));
  const NlcExpr k3 = ParseNlc("x[1-1](v(a,1),x[1-1](v(b,1),v(c,1)))");
  EXPECT_TRUE(Isomorphic(
      RefEval(TContract(k3, Id("a"), Id("b"), Id("z")).expr),
      CompleteGraph(2)));
  EXPECT_THROW(TContract(p4, Id("a"), Id("c"), Id("z")), PreconditionError);
}

TEST(TransformUnaryTest, VertexInsertion) {
  const NlcExpr p3 = ParseNlc(kP3Nlc);
  const NlcResult r = TAddVertex(p3, Id("z"), {Id("a")});
  EXPECT_TRUE(Isomorphic(RefEval(r.expr), PathGraph(4)));
  EXPECT_LE(WidthOf(r.expr), 4);
  const NlcResult iso = TAddVertex(p3, Id("z"), {});
  EXPECT_EQ(RefEval(iso.expr).Degree(Id("z")), 0);
  EXPECT_LE(WidthOf(iso.expr), WidthOf(p3));
  EXPECT_THROW(TAddVertex(p3, Id("a"), {}), PreconditionError);
  EXPECT_THROW(TAddVertex(p3, Id("z"), {Id("q")}), PreconditionError);
}

class UnaryPropertyTest : public ::testing::TestWithParam<Op> {};

TEST_P(UnaryPropertyTest, NlcMatchesGraphOperationWithinBound) {
  EXPECT_EQ(RunProperty<NlcExpr>(GetParam(), 51, 120, 10, 3, false), "");
}

TEST_P(UnaryPropertyTest, CwMatchesGraphOperationWithinBound) {
  EXPECT_EQ(RunProperty<CwExpr>(GetParam(), 52, 120, 10, 3, false), "");
}

INSTANTIATE_TEST_SUITE_P(
    AllUnary, UnaryPropertyTest,
    ::testing::ValuesIn(::cwexpr::testing::kUnaryOps),
    [](const ::testing::TestParamInfo<Op>& info) {
      std::string name(OpName(info.param));
      std::erase(name, '-');
      return name;
    });

TEST(UnaryPropertyTest, DegreeOptimizedLocalComplement) {
  EXPECT_EQ(RunProperty<NlcExpr>(Op::kLocalComplement, 53, 200, 10, 4, true),
            "");
  EXPECT_EQ(RunProperty<CwExpr>(Op::kLocalComplement, 54, 100, 10, 3, true),
            "");
}

TEST(UnaryPropertyTest, DegreeBoundedVertexInsertion) {
  EXPECT_EQ(RunProperty<NlcExpr>(Op::kVertexAdd, 55, 200, 10, 3, true), "");
  EXPECT_EQ(RunProperty<CwExpr>(Op::kVertexAdd, 56, 200, 10, 3, true), "");
}

}  // namespace
}  // namespace cwexpr
