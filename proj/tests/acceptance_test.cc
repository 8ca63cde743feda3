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

// Acceptance run: one PASS/FAIL line per criterion, with the elapsed time
// and the time limit. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cwexpr/builders.h"
#include "cwexpr/convert.h"
#include "cwexpr/expr.h"
#include "cwexpr/expr_io.h"
#include "cwexpr/graph.h"
#include "cwexpr/graph_io.h"
#include "cwexpr/graph_ops.h"
#include "cwexpr/isomorphism.h"
#include "cwexpr/transform.h"
#include "cwexpr/width_oracle.h"
#include "property_harness.h"
#include "test_util.h"

namespace cwexpr {
namespace {

using ::cwexpr::testing::Id;
using ::cwexpr::testing::RefEval;
using ::cwexpr::testing::RunProperty;

// A criterion returns "" on success or the first counterexample.
struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<std::string()> run;
};

constexpr char kPawNlc[] = "x[1-1](v(a,1),x[](v(d,1),x[1-1](v(b,1),v(c,1))))";
constexpr char kPawCw[] =
    "eta(1,2)(u(v(a,2),u(v(d,1),rho(2->1)(eta(1,2)(u(v(b,1),v(c,2)))))))";

std::string Fail(const std::string& what) { return what.empty() ? "?" : what; }

LabeledGraph Prefixed(const LabeledGraph& g, const std::string& prefix) {
  LabeledGraph out;
  for (const auto& [v, l] : g.labels()) out.AddVertex(Id(prefix + v.str()), l);
  for (const auto& [u, v] : g.Edges()) {
    out.AddEdge(Id(prefix + u.str()), Id(prefix + v.str()));
  }
  return out;
}

std::vector<LabeledGraph> GraphsUpTo(int n) {
  std::vector<LabeledGraph> out;
  for (int i = 1; i <= n; ++i) {
    for (LabeledGraph& g : NonIsomorphicGraphs(i)) out.push_back(std::move(g));
  }
  return out;
}

std::string NamedWidths() {
  struct Case {
    const char* name;
    LabeledGraph g;
    WidthParam p;
    int want;
  };
  const Case cases[] = {
      {"nlcw(paw)", PawGraph(), WidthParam::kNlc, 1},
      {"cw(paw)", PawGraph(), WidthParam::kCw, 2},
      {"nlcw(P4)", PathGraph(4), WidthParam::kNlc, 2},
      {"cw(P4)", PathGraph(4), WidthParam::kCw, 3},
  };
  for (const Case& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const WidthCertificate cert = ExactWidth(c.g, c.p);
    const double s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (cert.value != c.want) {
      return std::string(c.name) + " = " + std::to_string(cert.value);
    }
    if (s >= 1.0) return std::string(c.name) + " took over 1 s";
    const LabeledGraph w =
        std::visit([](const auto& x) { return RefEval(x); }, cert.witness);
    if (w.Unlabeled() != c.g.Unlabeled()) {
      return std::string(c.name) + " witness does not evaluate to the graph";
    }
  }
  return "";
}

std::string SwitchingClaims() {
  const NlcExpr paw = ParseNlc(kPawNlc);
  const CwExpr paw_cw = ParseCw(kPawCw);
  const LabeledGraph p4 = PathGraph(4);
  // b and c are the degree-2 vertices of the paw.
  for (const char* v : {"b", "c"}) {
    if (!Isomorphic(RefEval(TSwitch(paw, Id(v)).expr), p4)) {
      return std::string("NLC switch at ") + v;
    }
    if (!Isomorphic(RefEval(TSwitch(paw_cw, Id(v)).expr), p4)) {
      return std::string("CW switch at ") + v;
    }
    if (!Isomorphic(RefEval(TLocalComplement(paw, Id(v)).expr), p4)) {
      return std::string("NLC local complement at ") + v;
    }
    if (!Isomorphic(RefEval(TLocalComplement(paw_cw, Id(v)).expr), p4)) {
      return std::string("CW local complement at ") + v;
    }
  }
  return "";
}

std::string UnaryTable() {
  std::uint64_t seed = 1000;
  for (Op op : ::cwexpr::testing::kUnaryOps) {
    for (bool opt : {false, true}) {
      if (opt && op != Op::kLocalComplement && op != Op::kVertexAdd) continue;
      std::string f = RunProperty<NlcExpr>(op, ++seed, 500, 10, 3, opt);
      if (!f.empty()) return "NLC " + f;
      f = RunProperty<CwExpr>(op, ++seed, 500, 10, 3, opt);
      if (!f.empty()) return "CW " + f;
    }
  }
  return "";
}

std::string BinaryTable() {
  std::uint64_t seed = 2000;
  for (Op op : ::cwexpr::testing::kBinaryOps) {
    std::string f = RunProperty<NlcExpr>(op, ++seed, 500, 10, 3, false);
    if (!f.empty()) return "NLC " + f;
    f = RunProperty<CwExpr>(op, ++seed, 500, 10, 3, false);
    if (!f.empty()) return "CW " + f;
  }
  return "";
}

std::string EqualityClaims() {
  const std::vector<LabeledGraph> small = GraphsUpTo(3);
  const OracleLimits nine{9};
  for (const LabeledGraph& a : small) {
    const int wa = ExactNlcWidth(a);
    for (const LabeledGraph& b0 : small) {
      const LabeledGraph b = Prefixed(b0, "q");
      const int m = std::max(wa, ExactNlcWidth(b));
      const std::string pair = "\n" + FormatGraph(a) + "--\n" + FormatGraph(b);
      if (ExactNlcWidth(ops::DisjointUnion(a, b)) != m) {
        return "union" + pair;
      }
      if (ExactNlcWidth(ops::Join(a, b)) != m) return "join" + pair;
      if (ExactNlcWidth(ops::Lexicographic(a, b).graph, nine) != m) {
        return "lexicographic" + pair;
      }
      for (const VertexId& v : a.Vertices()) {
        if (ExactNlcWidth(ops::Substitution(a, v, b)) != m) {
          return "substitution at " + v.str() + pair;
        }
      }
    }
  }
  for (const LabeledGraph& g : GraphsUpTo(5)) {
    if (ExactNlcWidth(ops::Complement(g)) != ExactNlcWidth(g)) {
      return "complement\n" + FormatGraph(g);
    }
  }
  return "";
}

std::string SandwichAndCeiling() {
  for (const LabeledGraph& g : GraphsUpTo(5)) {
    const int nlc = ExactNlcWidth(g);
    const int cw = ExactCwWidth(g);
    const int n = static_cast<int>(g.NumVertices());
    if (nlc > cw || cw > 2 * nlc || nlc > (n + 1) / 2) {
      return "nlcw " + std::to_string(nlc) + ", cw " + std::to_string(cw) +
             "\n" + FormatGraph(g);
    }
  }
  return "";
}

std::string SwitchingDelta() {
  for (const LabeledGraph& g : GraphsUpTo(5)) {
    const int w = ExactNlcWidth(g);
    for (const VertexId& x : g.Vertices()) {
      const int s = ExactNlcWidth(ops::Switching(g, x));
      if (s > w + 1 || w > s + 1) {
        return "at " + x.str() + "\n" + FormatGraph(g);
      }
    }
  }
  return "";
}

std::string Conversions() {
  Rng rng(3000);
  for (int i = 0; i < 200; ++i) {
    const CwExpr x = RandomCwExpr(rng, 1 + Draw(rng, 12), 1 + Draw(rng, 4));
    const NlcExpr n = CwToNlc(x);
    if (RefEval(n) != RefEval(x) || WidthOf(n) > WidthOf(x)) {
      return "cw->nlc " + ToString(x);
    }
  }
  for (int i = 0; i < 200; ++i) {
    const NlcExpr x = RandomNlcExpr(rng, 1 + Draw(rng, 12), 1 + Draw(rng, 4));
    const CwExpr c = NlcToCw(x);
    if (RefEval(c) != RefEval(x) || WidthOf(c) > 2 * WidthOf(x)) {
      return "nlc->cw " + ToString(x);
    }
  }
  return "";
}

std::string TreeCographs() {
  Rng rng(4000);
  for (int i = 0; i < 100; ++i) {
    const std::string text = RandomRecipe(rng, 4);
    const auto recipe = ParseRecipe(text);
    const LabeledGraph g = RecipeGraph(*recipe);
    const BuiltExpressions b = TreeCographExpressions(*recipe);
    if (!SameUnlabeled(RefEval(b.nlc), g) || !SameUnlabeled(RefEval(b.cw), g) ||
        WidthOf(b.nlc) > 3 || WidthOf(b.cw) > 4) {
      return "recipe " + text;
    }
  }
  for (int i = 0; i < 100; ++i) {
    const LabeledGraph t = RandomTree(1 + Draw(rng, 10), rng());
    std::map<VertexId, std::string> subs;
    for (const VertexId& v : t.Vertices()) {
      if (Draw(rng, 2)) subs[v] = RandomCotree(rng, 1 + Draw(rng, 5));
    }
    const LabeledGraph g = CographTreeGraph(t, subs);
    const BuiltExpressions b = CographTreeExpressions(t, subs);
    if (!SameUnlabeled(RefEval(b.nlc), g) || !SameUnlabeled(RefEval(b.cw), g) ||
        WidthOf(b.nlc) > 3 || WidthOf(b.cw) > 3) {
      return "cograph-tree\n" + FormatGraph(t);
    }
  }
  for (int i = 0; i < 100; ++i) {
    const LabeledGraph t = RandomTree(1 + Draw(rng, 15), rng());
    const NlcExpr x = TreeToNlc3(t);
    if (RefEval(x).Unlabeled() != t || WidthOf(x) > 3) {
      return "tree\n" + FormatGraph(t);
    }
  }
  return "";
}

std::string Involutions() {
  Rng rng(5000);
  const auto pick = [&](const LabeledGraph& g) {
    const std::vector<VertexId> ids = g.Vertices();
    return ids[Draw(rng, static_cast<int>(ids.size()))];
  };
  for (int i = 0; i < 500; ++i) {
    const NlcExpr x = RandomNlcExpr(rng, 1 + Draw(rng, 10), 1 + Draw(rng, 3));
    const LabeledGraph g = RefEval(x).Unlabeled();
    if (RefEval(TComplement(TComplement(x).expr).expr).Unlabeled() != g) {
      return "complement " + ToString(x);
    }
    const VertexId v = pick(g);
    if (RefEval(TSwitch(TSwitch(x, v).expr, v).expr).Unlabeled() != g) {
      return "switch at " + v.str() + " " + ToString(x);
    }
    if (RefEval(TLocalComplement(TLocalComplement(x, v).expr, v).expr)
            .Unlabeled() != g) {
      return "local complement at " + v.str() + " " + ToString(x);
    }
    const CwExpr c = RandomCwExpr(rng, 1 + Draw(rng, 10), 1 + Draw(rng, 3));
    const LabeledGraph h = RefEval(c).Unlabeled();
    if (RefEval(TComplement(TComplement(c).expr).expr).Unlabeled() != h) {
      return "cw complement " + ToString(c);
    }
    const VertexId w = pick(h);
    if (RefEval(TSwitch(TSwitch(c, w).expr, w).expr).Unlabeled() != h) {
      return "cw switch at " + w.str() + " " + ToString(c);
    }
  }
  for (int i = 0; i < 500; ++i) {
    const BipartiteNlc b =
        RandomBipartiteNlcExpr(rng, 1 + Draw(rng, 10), 2 + Draw(rng, 2));
    const LabeledGraph g = RefEval(b.expr).Unlabeled();
    const NlcExpr once = TBipComplement(b.expr, b.sides).expr;
    if (RefEval(TBipComplement(once, b.sides).expr).Unlabeled() != g) {
      return "bipartite complement " + ToString(b.expr);
    }
  }
  int done = 0;
  while (done < 500) {
    const NlcExpr x = RandomNlcExpr(rng, 2 + Draw(rng, 9), 1 + Draw(rng, 3));
    const LabeledGraph g = RefEval(x).Unlabeled();
    const VertexId u = pick(g);
    const VertexId v = pick(g);
    if (u == v) continue;
    const NlcExpr back = g.HasEdge(u, v)
                             ? TAddEdge(TDelEdge(x, u, v).expr, u, v).expr
                             : TDelEdge(TAddEdge(x, u, v).expr, u, v).expr;
    if (RefEval(back).Unlabeled() != g) {
      return "edge round trip " + u.str() + " " + v.str() + " " + ToString(x);
    }
    ++done;
  }
  return "";
}

}  // namespace
}  // namespace cwexpr

int main() {
  using namespace cwexpr;
  const Criterion criteria[] = {
      {1, "named exact widths of the paw and P4, each under 1 s", 1.0,
       NamedWidths},
      {2, "switching and local complementation turn the paw into P4", 1.0,
       SwitchingClaims},
      {3, "unary transforms: graph and width bound on 500 random inputs",
       300.0, UnaryTable},
      {4, "binary transforms: graph and width bound on 500 random inputs",
       300.0, BinaryTable},
      {5, "width equalities for union, join, lexicographic, substitution, "
          "complement",
       1800.0, EqualityClaims},
      {6, "nlcw <= cw <= 2 nlcw and nlcw <= ceil(n/2) on all graphs n <= 5",
       1800.0, SandwichAndCeiling},
      {7, "switching changes NLC width by at most one, all graphs n <= 5",
       1800.0, SwitchingDelta},
      {8, "conversions: 200 random expressions each way", 60.0, Conversions},
      {9, "tree-cographs, cograph-trees and trees within width bounds", 120.0,
       TreeCographs},
      {10, "involutions restore the original graph on 500 instances each",
       120.0, Involutions},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("threw ") + e.what();
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (failure.empty() && s > c.limit_seconds) failure = "time limit exceeded";
    const bool ok = failure.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.2fs / limit %.0fs)\n",
                ok ? "PASS" : "FAIL", c.number, c.title, s, c.limit_seconds);
    if (!ok) std::printf("  %s\n", failure.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
