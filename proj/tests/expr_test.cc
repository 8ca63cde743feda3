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

#include <set>
#include <string>

#include "gtest/gtest.h"

#include "cwexpr/builders.h"
#include "cwexpr/errors.h"
#include "cwexpr/expr.h"
#include "cwexpr/expr_io.h"
#include "cwexpr/graph.h"
#include "test_util.h"

namespace cwexpr {
namespace {

using ::cwexpr::testing::Id;
using ::cwexpr::testing::MakeGraph;
using ::cwexpr::testing::RefEval;

// The four expressions of the worked example: two clique-width expressions
// and their NLC counterparts.
constexpr char kX1[] =
    "eta(1,2)(u(rho(2->1)(eta(1,2)(u(v(a,1),v(b,2)))),v(c,2)))";
constexpr char kX2[] =
    "rho(1->2)(eta(2,3)(u(u(eta(1,2)(u(v(a,1),v(b,2))),"
    "eta(1,2)(u(v(c,1),v(d,2)))),v(e,3))))";
constexpr char kX3[] = "x[1-2](x[1-1](v(a,1),v(b,1)),v(c,2))";
constexpr char kX4[] =
    "r{1->2,2->2,3->3}(x[2-3](x[](x[1-2](v(a,1),v(b,2)),"
    "x[1-2](v(c,1),v(d,2))),v(e,3)))";

LabeledGraph Triangle() {
  return MakeGraph({{"a", 1}, {"b", 1}, {"c", 2}},
                   {{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

LabeledGraph FivePath() {
  return MakeGraph({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}, {"e", 3}},
                   {{"a", "b"}, {"b", "e"}, {"e", "d"}, {"d", "c"}});
}

TEST(EvaluateTest, SingleLeaves) {
  EXPECT_EQ(Evaluate(NlcExpr::Leaf(Id("v"), 3)), MakeGraph({{"v", 3}}, {}));
  EXPECT_EQ(Evaluate(CwExpr::Leaf(Id("v"), 1)), MakeGraph({{"v", 1}}, {}));
}

TEST(EvaluateTest, WorkedExampleNlc) {
  EXPECT_EQ(Evaluate(ParseNlc(kX3)), Triangle());
  EXPECT_EQ(Evaluate(ParseNlc(kX4)), FivePath());
}

TEST(EvaluateTest, WorkedExampleCw) {
  EXPECT_EQ(Evaluate(ParseCw(kX1)), Triangle());
  EXPECT_EQ(Evaluate(ParseCw(kX2)), FivePath());
}

TEST(EvaluateTest, CalculiAgreeOnWorkedExample) {
  EXPECT_EQ(Evaluate(ParseCw(kX1)), Evaluate(ParseNlc(kX3)));
  EXPECT_EQ(Evaluate(ParseCw(kX2)), Evaluate(ParseNlc(kX4)));
}

TEST(EvaluateTest, MatchesDefinitionOnRandomExpressions) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const int leaves = 1 + Draw(rng, 12);
    const int k = 1 + Draw(rng, 4);
    const NlcExpr n = RandomNlcExpr(rng, leaves, k);
    EXPECT_EQ(Evaluate(n), RefEval(n)) << ToString(n);
    const CwExpr c = RandomCwExpr(rng, leaves, k);
    EXPECT_EQ(Evaluate(c), RefEval(c)) << ToString(c);
  }
}

TEST(EvaluateTest, EachPairDecidedExactlyOnce) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const int leaves = 1 + Draw(rng, 15);
    const NlcExpr x = RandomNlcExpr(rng, leaves, 1 + Draw(rng, 4));
    EvalStats stats;
    Evaluate(x, &stats);
    EXPECT_EQ(stats.pair_decisions,
              static_cast<std::int64_t>(leaves) * (leaves - 1) / 2);
  }
}

TEST(ExprTest, ConstructorsEnforceInvariants) {
  EXPECT_THROW(NlcExpr::Leaf(Id("a"), 0), PreconditionError);
  EXPECT_THROW(CwExpr::AddEdges(1, 1, CwExpr::Leaf(Id("a"), 1)),
               PreconditionError);
  EXPECT_THROW(CwExpr::Relabel(2, 2, CwExpr::Leaf(Id("a"), 1)),
               PreconditionError);
  const NlcExpr dup = NlcExpr::Union({}, NlcExpr::Leaf(Id("a"), 1),
                                     NlcExpr::Leaf(Id("a"), 1));
  EXPECT_THROW(Validate(dup), PreconditionError);
  EXPECT_THROW(Evaluate(dup), PreconditionError);
}

TEST(ExprTest, WidthIsLargestLabel) {
  EXPECT_EQ(WidthOf(NlcExpr::Leaf(Id("a"), 1)), 1);
  EXPECT_EQ(WidthOf(ParseNlc(kX3)), 2);
  EXPECT_EQ(WidthOf(ParseCw(kX2)), 3);
  EXPECT_EQ(WidthOf(ParseCw(kX1)), 2);
}

TEST(NormalizeLabelsTest, CompactsLabelsInOrder) {
  const NlcExpr x = ParseNlc("x[2-5](v(a,2),v(b,5))");
  const NlcExpr n = NormalizeLabels(x);
  EXPECT_EQ(ToString(n), "x[1-2](v(a,1),v(b,2))");
  const CwExpr x1 = ParseCw(kX1);
  EXPECT_EQ(NormalizeLabels(x1), x1);
}

TEST(NormalizeLabelsTest, PreservesGraphUpToLabelBijection) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const NlcExpr x = RandomNlcExpr(rng, 1 + Draw(rng, 10), 1 + Draw(rng, 5));
    const NlcExpr n = NormalizeLabels(x);
    EXPECT_LE(WidthOf(n), WidthOf(x));
    const LabeledGraph before = Evaluate(x);
    const LabeledGraph after = Evaluate(n);
    EXPECT_TRUE(SameUnlabeled(before, after));
    // Same-label relation must be preserved.
    for (const auto& [u, lu] : before.labels()) {
      for (const auto& [v, lv] : before.labels()) {
        EXPECT_EQ(lu == lv, after.LabelOf(u) == after.LabelOf(v));
      }
    }
  }
}

TEST(AnnotationTest, RootLabelOfThirdVertexInX3) {
  const NlcExpr x = ParseNlc(kX3);
  const NlcAnnotation ann(x);
  EXPECT_EQ(ann.LabelAt(Id("c"), ann.root()), 2);
  EXPECT_EQ(ann.LabelsAt(ann.root()), Evaluate(x).labels());
}

TEST(AnnotationTest, LeastCommonPredecessorInX1) {
  const CwExpr x = ParseCw(kX1);
  const CwAnnotation ann(x);
  const int lcp = ann.LeastCommonPredecessor(Id("a"), Id("b"));
  EXPECT_EQ(ann.node(lcp), ParseCw("u(v(a,1),v(b,2))"));
  EXPECT_EQ(ann.node(ann.LeastCommonPredecessor(Id("a"), Id("c"))),
            ParseCw("u(rho(2->1)(eta(1,2)(u(v(a,1),v(b,2)))),v(c,2))"));
  // Below the relabel b still carries label 2.
  EXPECT_EQ(ann.LabelAt(Id("b"), lcp), 2);
  EXPECT_EQ(ann.LabelAt(Id("b"), ann.root()), 1);
}

TEST(AnnotationTest, SingleLeaf) {
  const NlcAnnotation ann(NlcExpr::Leaf(Id("q"), 4));
  EXPECT_EQ(ann.size(), 1);
  EXPECT_EQ(ann.LabelAt(Id("q"), ann.root()), 4);
}

TEST(ParseTest, Leaf) {
  EXPECT_EQ(ParseNlc("v(a,1)"), NlcExpr::Leaf(Id("a"), 1));
  EXPECT_EQ(ParseCw(" v ( a , 1 ) "), CwExpr::Leaf(Id("a"), 1));
}

TEST(ParseTest, WorkedExampleAst) {
  const NlcExpr expected = NlcExpr::Union(
      {{1, 2}},
      NlcExpr::Union({{1, 1}}, NlcExpr::Leaf(Id("a"), 1),
                     NlcExpr::Leaf(Id("b"), 1)),
      NlcExpr::Leaf(Id("c"), 2));
  EXPECT_EQ(ParseNlc(kX3), expected);
  EXPECT_EQ(ToString(expected), kX3);
}

TEST(ParseTest, Errors) {
  try {
    ParseNlc("x[1-2](v(a,1))");
    FAIL() << "expected arity error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("two operands"), std::string::npos);
  }
  EXPECT_THROW(ParseNlc("v(a,0)"), ParseError);
  EXPECT_THROW(ParseNlc("v(a,-1)"), ParseError);
  EXPECT_THROW(ParseCw("u(v(a,1),v(a,2))"), ParseError);
  EXPECT_THROW(ParseNlc("r{1->2,1->3}(v(a,1))"), ParseError);
  EXPECT_THROW(ParseCw("eta(1,1)(v(a,1))"), ParseError);
  EXPECT_THROW(ParseNlc("v(a,1) v(b,1)"), ParseError);
  try {
    ParseNlc("x[1-1](v(a,1),\n  v(b,))");
    FAIL() << "expected syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(ParseTest, AnyExprPicksCalculus) {
  EXPECT_TRUE(std::holds_alternative<NlcExpr>(ParseAnyExpr(kX3)));
  EXPECT_TRUE(std::holds_alternative<CwExpr>(ParseAnyExpr(kX1)));
}

TEST(ParseTest, RoundTripOnRandomCorpus) {
  Rng rng(14);
  for (int i = 0; i < 1000; ++i) {
    const int leaves = 1 + Draw(rng, 14);
    const int k = 1 + Draw(rng, 5);
    const NlcExpr n = RandomNlcExpr(rng, leaves, k);
    const std::string ns = ToString(n);
    EXPECT_EQ(ParseNlc(ns), n);
    EXPECT_EQ(ToString(ParseNlc(ns)), ns);
    const CwExpr c = RandomCwExpr(rng, leaves, k);
    const std::string cs = ToString(c);
    EXPECT_EQ(ParseCw(cs), c);
    EXPECT_EQ(ToString(ParseCw(cs)), cs);
  }
}

}  // namespace
}  // namespace cwexpr
