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

#include "cwexpr/builders.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "cwexpr/errors.h"
#include "cwexpr/graph_ops.h"
#include "cwexpr/transform.h"

namespace cwexpr {
namespace {

VertexId V(int i) { return VertexId("v" + std::to_string(i)); }

LabeledGraph Isolated(int n) {
  if (n < 1) throw PreconditionError("graph families need n >= 1");
  LabeledGraph g;
  for (int i = 0; i < n; ++i) g.AddVertex(V(i), 1);
  return g;
}

void RequireTree(const LabeledGraph& t) {
  if (!IsTree(t)) throw PreconditionError("input graph is not a tree");
}

VertexId Root(const LabeledGraph& t) { return t.Vertices().front(); }

// ----------------------------------------------------- small text parser

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::string Word() {
    Skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '-')) {
      ++pos_;
    }
    if (pos_ == start) Fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  long long Number() {
    Skip();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > (1LL << 40)) Fail("number too large");
    }
    if (pos_ == start) Fail("expected a number");
    return value;
  }

  void Expect(char c) {
    Skip();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      Fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool Peek(char c) {
    Skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void Finish() {
    Skip();
    if (pos_ != text_.size()) Fail("trailing input");
  }

  [[noreturn]] void Fail(const std::string& message) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

 private:
  void Skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

LabeledGraph Prefixed(const LabeledGraph& g, const std::string& prefix) {
  LabeledGraph out;
  for (const VertexId& v : g.Vertices()) {
    out.AddVertex(VertexId(prefix + v.str()), g.LabelOf(v));
  }
  for (const auto& [u, v] : g.Edges()) {
    out.AddEdge(VertexId(prefix + u.str()), VertexId(prefix + v.str()));
  }
  return out;
}

LabeledGraph ReadTree(Reader& in) {
  const std::string name = in.Word();
  if (name == "K1") return Isolated(1);
  if (name.size() > 1 && name[0] == 'P' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return PathGraph(std::stoi(name.substr(1)));
  }
  in.Expect('(');
  const int n = static_cast<int>(in.Number());
  if (n < 1) in.Fail("trees need at least one vertex");
  if (name == "random-tree") {
    in.Expect(',');
    const auto seed = static_cast<std::uint64_t>(in.Number());
    in.Expect(')');
    return RandomTree(n, seed);
  }
  in.Expect(')');
  if (name == "path") return PathGraph(n);
  if (name == "star") return StarGraph(n);
  in.Fail("unknown tree family '" + name + "'");
}

std::shared_ptr<const Recipe> ReadRecipe(Reader& in, int& trees) {
  const std::string head = in.Word();
  auto out = std::make_shared<Recipe>();
  in.Expect('(');
  if (head == "tree") {
    out->kind = Recipe::Kind::kTree;
    out->tree = Prefixed(ReadTree(in), "t" + std::to_string(trees++) + ".");
  } else if (head == "complement") {
    out->kind = Recipe::Kind::kComplement;
    out->parts = {ReadRecipe(in, trees)};
  } else if (head == "union" || head == "join") {
    out->kind = head == "union" ? Recipe::Kind::kUnion : Recipe::Kind::kJoin;
    std::shared_ptr<const Recipe> left = ReadRecipe(in, trees);
    in.Expect(',');
    out->parts = {left, ReadRecipe(in, trees)};
  } else {
    in.Fail("unknown recipe operator '" + head + "'");
  }
  in.Expect(')');
  return out;
}

std::shared_ptr<const Recipe> Normalize(
    const std::shared_ptr<const Recipe>& r, bool complemented) {
  auto out = std::make_shared<Recipe>();
  switch (r->kind) {
    case Recipe::Kind::kTree:
    case Recipe::Kind::kCotree: {
      const bool is_co = (r->kind == Recipe::Kind::kCotree) != complemented;
      out->kind = is_co ? Recipe::Kind::kCotree : Recipe::Kind::kTree;
      out->tree = r->tree;
      return out;
    }
    case Recipe::Kind::kComplement:
      return Normalize(r->parts[0], !complemented);
    case Recipe::Kind::kUnion:
    case Recipe::Kind::kJoin: {
      const bool is_union = (r->kind == Recipe::Kind::kUnion) != complemented;
      out->kind = is_union ? Recipe::Kind::kUnion : Recipe::Kind::kJoin;
      out->parts = {Normalize(r->parts[0], complemented),
                    Normalize(r->parts[1], complemented)};
      return out;
    }
  }
  return out;
}

// ------------------------------------------------------------- cotrees

struct Cotree {
  enum class Kind { kLeaf, kUnion, kJoin };
  Kind kind;
  VertexId leaf;
  std::vector<Cotree> parts;
};

Cotree ReadCotree(Reader& in, const std::string& prefix, int& next) {
  const std::string head = in.Word();
  if (head == "leaf") {
    return {Cotree::Kind::kLeaf,
            VertexId(prefix + "." + std::to_string(next++)),
            {}};
  }
  if (head != "union" && head != "join") {
    in.Fail("unknown cotree operator '" + head + "'");
  }
  in.Expect('(');
  Cotree left = ReadCotree(in, prefix, next);
  in.Expect(',');
  Cotree right = ReadCotree(in, prefix, next);
  in.Expect(')');
  return {head == "union" ? Cotree::Kind::kUnion : Cotree::Kind::kJoin,
          VertexId(),
          {std::move(left), std::move(right)}};
}

Cotree ParseCotree(std::string_view text, const std::string& prefix) {
  Reader in(text);
  int next = 0;
  Cotree c = ReadCotree(in, prefix, next);
  in.Finish();
  return c;
}

LabeledGraph CotreeGraph(const Cotree& c) {
  if (c.kind == Cotree::Kind::kLeaf) {
    LabeledGraph g;
    g.AddVertex(c.leaf, 1);
    return g;
  }
  const LabeledGraph l = CotreeGraph(c.parts[0]);
  const LabeledGraph r = CotreeGraph(c.parts[1]);
  return c.kind == Cotree::Kind::kUnion ? ops::DisjointUnion(l, r)
                                        : ops::Join(l, r);
}

BuiltExpressions CotreeExpressions(const Cotree& c) {
  if (c.kind == Cotree::Kind::kLeaf) {
    return {NlcExpr::Leaf(c.leaf, 1), CwExpr::Leaf(c.leaf, 1)};
  }
  BuiltExpressions l = CotreeExpressions(c.parts[0]);
  BuiltExpressions r = CotreeExpressions(c.parts[1]);
  if (c.kind == Cotree::Kind::kUnion) {
    return {NlcExpr::Union({}, l.nlc, r.nlc),
            CwExpr::DisjointUnion(l.cw, r.cw)};
  }
  CwExpr cw = CwExpr::DisjointUnion(l.cw, CwExpr::Relabel(1, 2, r.cw));
  cw = CwExpr::Relabel(2, 1, CwExpr::AddEdges(1, 2, cw));
  return {NlcExpr::Union({{1, 1}}, l.nlc, r.nlc), cw};
}

// --------------------------------------------------- random expressions

PairSet RandomPairs(Rng& rng, int k,
                    const std::function<bool(Label, Label)>& allowed) {
  PairSet pairs;
  for (Label a = 1; a <= k; ++a) {
    for (Label b = 1; b <= k; ++b) {
      if (allowed(a, b) && Draw(rng, 2) == 0) pairs.emplace(a, b);
    }
  }
  return pairs;
}

LabelMap RandomMap(Rng& rng, int k, bool keep_parity) {
  LabelMap map;
  for (Label a = 1; a <= k; ++a) {
    if (Draw(rng, 2) != 0) continue;
    Label b = 1 + Draw(rng, k);
    if (keep_parity && (a - b) % 2 != 0) b = b == k ? b - 1 : b + 1;
    if (b >= 1 && b <= k && b != a) map.emplace(a, b);
  }
  return map;
}

// Labels of one side: odd labels for side 0, even labels for side 1.
Label SideLabel(Rng& rng, int k, int side) {
  const int count = side == 0 ? (k + 1) / 2 : k / 2;
  return 2 * Draw(rng, count) + 1 + side;
}

struct NlcGen {
  Rng& rng;
  int k;
  std::string prefix;
  bool bipartite;
  int next = 0;
  Bipartition sides;

  NlcExpr Gen(int leaves) {
    NlcExpr e = leaves == 1 ? Leaf() : Split(leaves);
    if (Draw(rng, 3) == 0) {
      LabelMap map = RandomMap(rng, k, bipartite);
      if (!map.empty()) e = NlcExpr::Relabel(std::move(map), e);
    }
    return e;
  }

  NlcExpr Leaf() {
    VertexId id(prefix + std::to_string(next++));
    int side = bipartite && k >= 2 ? Draw(rng, 2) : 0;
    (side == 0 ? sides.side1 : sides.side2).insert(id);
    const Label l = bipartite ? SideLabel(rng, k, side) : 1 + Draw(rng, k);
    return NlcExpr::Leaf(id, l);
  }

  NlcExpr Split(int leaves) {
    const int left = 1 + Draw(rng, leaves - 1);
    NlcExpr l = Gen(left);
    NlcExpr r = Gen(leaves - left);
    PairSet pairs = RandomPairs(rng, k, [&](Label a, Label b) {
      return !bipartite || (a - b) % 2 != 0;
    });
    return NlcExpr::Union(std::move(pairs), l, r);
  }
};

struct CwGen {
  Rng& rng;
  int k;
  std::string prefix;
  bool bipartite;
  int next = 0;
  Bipartition sides;

  CwExpr Gen(int leaves) {
    CwExpr e = leaves == 1 ? Leaf() : Split(leaves);
    if (k < 2) return e;
    for (int ops = Draw(rng, 3); ops > 0; --ops) {
      const Label a = 1 + Draw(rng, k);
      Label b = 1 + Draw(rng, k - 1);
      if (b >= a) ++b;
      const bool same_parity = (a - b) % 2 == 0;
      if (Draw(rng, 3) != 0) {
        if (!bipartite || !same_parity) e = CwExpr::AddEdges(a, b, e);
      } else if (!bipartite || same_parity) {
        e = CwExpr::Relabel(a, b, e);
      }
    }
    return e;
  }

  CwExpr Leaf() {
    VertexId id(prefix + std::to_string(next++));
    int side = bipartite && k >= 2 ? Draw(rng, 2) : 0;
    (side == 0 ? sides.side1 : sides.side2).insert(id);
    const Label l = bipartite ? SideLabel(rng, k, side) : 1 + Draw(rng, k);
    return CwExpr::Leaf(id, l);
  }

  CwExpr Split(int leaves) {
    const int left = 1 + Draw(rng, leaves - 1);
    CwExpr l = Gen(left);
    return CwExpr::DisjointUnion(l, Gen(leaves - left));
  }
};

void RequireExprParams(int leaves, int k) {
  if (leaves < 1 || k < 1) {
    throw PreconditionError("random expressions need leaves >= 1, k >= 1");
  }
}

}  // namespace

// ---------------------------------------------------------------- families

LabeledGraph PathGraph(int n) {
  LabeledGraph g = Isolated(n);
  for (int i = 0; i + 1 < n; ++i) g.AddEdge(V(i), V(i + 1));
  return g;
}

LabeledGraph CycleGraph(int n) {
  if (n < 3) throw PreconditionError("cycles need n >= 3");
  LabeledGraph g = PathGraph(n);
  g.AddEdge(V(n - 1), V(0));
  return g;
}

LabeledGraph CompleteGraph(int n) {
  LabeledGraph g = Isolated(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.AddEdge(V(i), V(j));
  }
  return g;
}

LabeledGraph CompleteBipartite(int a, int b) {
  if (a < 1 || b < 1) throw PreconditionError("both sides need a vertex");
  LabeledGraph g = Isolated(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = a; j < a + b; ++j) g.AddEdge(V(i), V(j));
  }
  return g;
}

LabeledGraph StarGraph(int n) {
  LabeledGraph g = Isolated(n);
  for (int i = 1; i < n; ++i) g.AddEdge(V(0), V(i));
  return g;
}

LabeledGraph GridGraph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw PreconditionError("grid needs r, c >= 1");
  const auto id = [](int r, int c) {
    return VertexId("v" + std::to_string(r) + "_" + std::to_string(c));
  };
  LabeledGraph g;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) g.AddVertex(id(r, c), 1);
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (r + 1 < rows) g.AddEdge(id(r, c), id(r + 1, c));
      if (c + 1 < cols) g.AddEdge(id(r, c), id(r, c + 1));
    }
  }
  return g;
}

LabeledGraph PawGraph() {
  LabeledGraph g;
  for (const char* v : {"a", "b", "c", "d"}) g.AddVertex(VertexId(v), 1);
  g.AddEdge(VertexId("a"), VertexId("b"));
  g.AddEdge(VertexId("b"), VertexId("c"));
  g.AddEdge(VertexId("a"), VertexId("c"));
  g.AddEdge(VertexId("a"), VertexId("d"));
  return g;
}

LabeledGraph RandomTree(int n, std::uint64_t seed) {
  LabeledGraph g = Isolated(n);
  if (n == 2) g.AddEdge(V(0), V(1));
  if (n <= 2) return g;
  Rng rng(seed);
  std::vector<int> code(n - 2);
  for (int& c : code) c = Draw(rng, n);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.AddEdge(V(leaf), V(c));
    --degree[leaf];
    --degree[c];
  }
  int u = -1;
  for (int i = 0; i < n; ++i) {
    if (degree[i] == 1) {
      if (u < 0) {
        u = i;
      } else {
        g.AddEdge(V(u), V(i));
      }
    }
  }
  return g;
}

LabeledGraph RandomGraph(int n, int percent, std::uint64_t seed) {
  if (percent < 0 || percent > 100) {
    throw PreconditionError("edge percentage must be in [0, 100]");
  }
  LabeledGraph g = Isolated(n);
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (Draw(rng, 100) < percent) g.AddEdge(V(i), V(j));
    }
  }
  return g;
}

LabeledGraph GenFamily(std::string_view name, const std::vector<int>& params,
                       std::optional<std::uint64_t> seed) {
  const auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw PreconditionError("family " + std::string(name) + " takes " +
                              std::to_string(lo) +
                              (lo == hi ? "" : "-" + std::to_string(hi)) +
                              " parameter(s)");
    }
  };
  const auto need_seed = [&]() {
    if (!seed) {
      throw PreconditionError("family " + std::string(name) +
                              " is random and needs a seed");
    }
    return *seed;
  };
  if (name == "path") return need(1, 1), PathGraph(params[0]);
  if (name == "cycle") return need(1, 1), CycleGraph(params[0]);
  if (name == "complete") return need(1, 1), CompleteGraph(params[0]);
  if (name == "complete-bipartite") {
    return need(2, 2), CompleteBipartite(params[0], params[1]);
  }
  if (name == "star") return need(1, 1), StarGraph(params[0]);
  if (name == "grid") return need(2, 2), GridGraph(params[0], params[1]);
  if (name == "paw") return need(0, 0), PawGraph();
  if (name == "random-tree") {
    need(1, 1);
    return RandomTree(params[0], need_seed());
  }
  if (name == "random-graph") {
    need(1, 2);
    return RandomGraph(params[0], params.size() > 1 ? params[1] : 50,
                       need_seed());
  }
  throw PreconditionError("unknown graph family '" + std::string(name) + "'");
}

// ------------------------------------------------------------------- trees

NlcExpr TreeToNlc3(const LabeledGraph& t) {
  RequireTree(t);
  // Root of the current subtree carries 1, finished vertices 3.
  const std::function<NlcExpr(const VertexId&, const VertexId*)> build =
      [&](const VertexId& r, const VertexId* parent) {
        NlcExpr acc = NlcExpr::Leaf(r, 1);
        for (const VertexId& c : t.Neighbors(r)) {
          if (parent && c == *parent) continue;
          NlcExpr child = NlcExpr::Relabel({{1, 2}}, build(c, &r));
          acc = NlcExpr::Relabel({{2, 3}},
                                 NlcExpr::Union({{1, 2}}, acc, child));
        }
        return acc;
      };
  return NormalizeLabels(build(Root(t), nullptr));
}

CwExpr TreeToCw3(const LabeledGraph& t) {
  RequireTree(t);
  // Root of the current subtree carries 1, finished vertices 2.
  const std::function<CwExpr(const VertexId&, const VertexId*)> build =
      [&](const VertexId& r, const VertexId* parent) {
        CwExpr acc = CwExpr::Leaf(r, 1);
        for (const VertexId& c : t.Neighbors(r)) {
          if (parent && c == *parent) continue;
          CwExpr child = CwExpr::Relabel(1, 3, build(c, &r));
          acc = CwExpr::Relabel(
              3, 2, CwExpr::AddEdges(1, 3, CwExpr::DisjointUnion(acc, child)));
        }
        return acc;
      };
  return build(Root(t), nullptr);
}

CwExpr TreeComplementToCw4(const LabeledGraph& t) {
  RequireTree(t);
  // Complement of the subtree; its root carries 1, the rest 2. A child's
  // subtree enters as 3 (its root) and 4.
  const std::function<CwExpr(const VertexId&, const VertexId*)> build =
      [&](const VertexId& r, const VertexId* parent) {
        CwExpr acc = CwExpr::Leaf(r, 1);
        for (const VertexId& c : t.Neighbors(r)) {
          if (parent && c == *parent) continue;
          CwExpr child =
              CwExpr::Relabel(1, 3, CwExpr::Relabel(2, 4, build(c, &r)));
          CwExpr e = CwExpr::DisjointUnion(acc, child);
          e = CwExpr::AddEdges(1, 4, e);
          e = CwExpr::AddEdges(2, 3, e);
          e = CwExpr::AddEdges(2, 4, e);
          acc = CwExpr::Relabel(4, 2, CwExpr::Relabel(3, 2, e));
        }
        return acc;
      };
  return build(Root(t), nullptr);
}

// ----------------------------------------------------------- tree-cographs

std::shared_ptr<const Recipe> ParseRecipe(std::string_view text) {
  Reader in(text);
  int trees = 0;
  std::shared_ptr<const Recipe> r = ReadRecipe(in, trees);
  in.Finish();
  return r;
}

std::shared_ptr<const Recipe> NormalizeRecipe(
    const std::shared_ptr<const Recipe>& recipe) {
  return Normalize(recipe, false);
}

LabeledGraph RecipeGraph(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::kTree:
      return r.tree;
    case Recipe::Kind::kCotree:
      return ops::Complement(r.tree);
    case Recipe::Kind::kComplement:
      return ops::Complement(RecipeGraph(*r.parts[0]));
    case Recipe::Kind::kUnion:
      return ops::DisjointUnion(RecipeGraph(*r.parts[0]),
                                RecipeGraph(*r.parts[1]));
    case Recipe::Kind::kJoin:
      return ops::Join(RecipeGraph(*r.parts[0]), RecipeGraph(*r.parts[1]));
  }
  return {};
}

std::string RandomRecipe(Rng& rng, int max_depth) {
  const int pick = max_depth <= 0 ? 0 : Draw(rng, 4);
  switch (pick) {
    case 1:
      return "complement(" + RandomRecipe(rng, max_depth - 1) + ")";
    case 2:
    case 3:
      return std::string(pick == 2 ? "union(" : "join(") +
             RandomRecipe(rng, max_depth - 1) + "," +
             RandomRecipe(rng, max_depth - 1) + ")";
    default:
      break;
  }
  const int n = 1 + Draw(rng, 5);
  switch (Draw(rng, 3)) {
    case 0:
      return "tree(path(" + std::to_string(n) + "))";
    case 1:
      return "tree(star(" + std::to_string(n) + "))";
    default:
      return "tree(random-tree(" + std::to_string(n) + "," +
             std::to_string(Draw(rng, 1000)) + "))";
  }
}

BuiltExpressions TreeCographExpressions(const Recipe& recipe) {
  const std::function<BuiltExpressions(const Recipe&)> build =
      [&](const Recipe& r) -> BuiltExpressions {
    switch (r.kind) {
      case Recipe::Kind::kTree:
        return {TreeToNlc3(r.tree), TreeToCw3(r.tree)};
      case Recipe::Kind::kCotree:
        return {TComplement(TreeToNlc3(r.tree)).expr,
                TreeComplementToCw4(r.tree)};
      case Recipe::Kind::kUnion:
      case Recipe::Kind::kJoin: {
        BuiltExpressions l = build(*r.parts[0]);
        BuiltExpressions x = build(*r.parts[1]);
        if (r.kind == Recipe::Kind::kUnion) {
          return {TUnion(l.nlc, x.nlc).expr, TUnion(l.cw, x.cw).expr};
        }
        return {TJoin(l.nlc, x.nlc).expr, TJoin(l.cw, x.cw).expr};
      }
      case Recipe::Kind::kComplement:
        break;
    }
    throw std::logic_error("recipe not normalized");
  };
  auto owned = std::make_shared<Recipe>(recipe);
  return build(*NormalizeRecipe(owned));
}

// -------------------------------------------------- cographs, cograph-trees

BuiltExpressions CographExpressions(std::string_view cotree,
                                    const std::string& prefix) {
  return CotreeExpressions(ParseCotree(cotree, prefix));
}

std::string RandomCotree(Rng& rng, int leaves) {
  if (leaves <= 1) return "leaf";
  const int left = 1 + Draw(rng, leaves - 1);
  return std::string(Draw(rng, 2) == 0 ? "union(" : "join(") +
         RandomCotree(rng, left) + "," + RandomCotree(rng, leaves - left) +
         ")";
}

BuiltExpressions CographTreeExpressions(
    const LabeledGraph& tree, const std::map<VertexId, std::string>& cotrees) {
  BuiltExpressions out{TreeToNlc3(tree), TreeToCw3(tree)};
  for (const auto& [x, text] : cotrees) {
    const BuiltExpressions cograph = CographExpressions(text, x.str());
    out.nlc = TSubstitute(out.nlc, x, cograph.nlc).expr;
    out.cw = TSubstitute(out.cw, x, cograph.cw).expr;
  }
  return out;
}

LabeledGraph CographTreeGraph(const LabeledGraph& tree,
                              const std::map<VertexId, std::string>& cotrees) {
  RequireTree(tree);
  LabeledGraph g = tree;
  for (const auto& [x, text] : cotrees) {
    g = ops::Substitution(g, x, CotreeGraph(ParseCotree(text, x.str())));
  }
  return g;
}

// ------------------------------------------------------ random expressions

NlcExpr RandomNlcExpr(Rng& rng, int leaves, int k, const std::string& prefix) {
  RequireExprParams(leaves, k);
  NlcGen gen{rng, k, prefix, false, 0, {}};
  return gen.Gen(leaves);
}

CwExpr RandomCwExpr(Rng& rng, int leaves, int k, const std::string& prefix) {
  RequireExprParams(leaves, k);
  CwGen gen{rng, k, prefix, false, 0, {}};
  return gen.Gen(leaves);
}

BipartiteNlc RandomBipartiteNlcExpr(Rng& rng, int leaves, int k,
                                    const std::string& prefix) {
  RequireExprParams(leaves, k);
  NlcGen gen{rng, k, prefix, true, 0, {}};
  NlcExpr e = gen.Gen(leaves);
  return {e, gen.sides};
}

BipartiteCw RandomBipartiteCwExpr(Rng& rng, int leaves, int k,
                                  const std::string& prefix) {
  RequireExprParams(leaves, k);
  CwGen gen{rng, k, prefix, true, 0, {}};
  CwExpr e = gen.Gen(leaves);
  return {e, gen.sides};
}

// --------------------------------------------------------- small graphs

std::vector<LabeledGraph> NonIsomorphicGraphs(int n) {
  if (n < 1 || n > 6) {
    throw PreconditionError("graph enumeration supports 1 <= n <= 6");
  }
  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      slot_of[i][j] = slot_of[j][i] = static_cast<int>(slots.size());
      slots.emplace_back(i, j);
    }
  }
  // For every vertex permutation, the induced permutation of edge slots.
  std::vector<std::vector<int>> moves;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> move(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      move[s] = slot_of[perm[slots[s].first]][perm[slots[s].second]];
    }
    moves.push_back(std::move(move));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<LabeledGraph> out;
  const std::uint32_t codes = std::uint32_t{1} << slots.size();
  for (std::uint32_t code = 0; code < codes; ++code) {
    bool least = true;
    for (const std::vector<int>& move : moves) {
      std::uint32_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (code >> s & 1) image |= std::uint32_t{1} << move[s];
      }
      if (image < code) {
        least = false;
        break;
      }
    }
    if (!least) continue;
    LabeledGraph g = Isolated(n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (code >> s & 1) g.AddEdge(V(slots[s].first), V(slots[s].second));
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cwexpr
