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

#ifndef CWEXPR_BUILDERS_H_
#define CWEXPR_BUILDERS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cwexpr/expr.h"
#include "cwexpr/graph.h"

namespace cwexpr {

// All randomized builders draw from this engine, reducing with operator%
// so that outputs are identical across standard libraries.
using Rng = std::mt19937_64;

// Uniform-ish integer in [0, n).
inline int Draw(Rng& rng, int n) { return static_cast<int>(rng() % n); }

// ---- graph families. Vertex ids are v0, v1, ...; grid ids are v<r>_<c>.
// All labels are 1.

LabeledGraph PathGraph(int n);
LabeledGraph CycleGraph(int n);      // n >= 3
LabeledGraph CompleteGraph(int n);
LabeledGraph CompleteBipartite(int a, int b);  // sides v0..v(a-1), rest
LabeledGraph StarGraph(int n);       // n vertices in total, center v0
LabeledGraph GridGraph(int rows, int cols);
// Triangle a-b-c with the pendant d attached to a.
LabeledGraph PawGraph();
// Uniform labeled tree from a random Pruefer sequence.
LabeledGraph RandomTree(int n, std::uint64_t seed);
// Each edge present with probability percent / 100.
LabeledGraph RandomGraph(int n, int percent, std::uint64_t seed);

// Dispatch by name: path N | cycle N | complete N | complete-bipartite A B |
// star N | grid R C | paw | random-tree N | random-graph N [PERCENT].
// Random families require a seed.
LabeledGraph GenFamily(std::string_view name, const std::vector<int>& params,
                       std::optional<std::uint64_t> seed = std::nullopt);

// ---- trees

// NLC expression of width <= 3, rooted at the smallest id. Throws
// PreconditionError when `t` is not a tree.
NlcExpr TreeToNlc3(const LabeledGraph& t);
// Clique-width expression of width <= 3.
CwExpr TreeToCw3(const LabeledGraph& t);
// Clique-width expression of width <= 4 for the complement of `t`.
CwExpr TreeComplementToCw4(const LabeledGraph& t);

// ---- tree-cographs
//
// Recipe text:
//   R := tree(T) | complement(R) | union(R,R) | join(R,R)
//   T := path(N) | PN | star(N) | random-tree(N,SEED) | K1
// The vertices of the i-th tree (in reading order) are named t<i>.<id>.
struct Recipe {
  enum class Kind { kTree, kCotree, kUnion, kJoin, kComplement };
  Kind kind = Kind::kTree;
  LabeledGraph tree;  // kTree, kCotree (complement of this tree)
  std::vector<std::shared_ptr<const Recipe>> parts;
};

std::shared_ptr<const Recipe> ParseRecipe(std::string_view text);
// Complements pushed down to the trees (De Morgan); the result only uses
// kTree, kCotree, kUnion and kJoin.
std::shared_ptr<const Recipe> NormalizeRecipe(
    const std::shared_ptr<const Recipe>& recipe);
LabeledGraph RecipeGraph(const Recipe& recipe);
std::string RandomRecipe(Rng& rng, int max_depth);

struct BuiltExpressions {
  NlcExpr nlc;
  CwExpr cw;
};

// NLC width <= 3, CW width <= 4.
BuiltExpressions TreeCographExpressions(const Recipe& recipe);

// ---- cographs and cograph-trees
//
// Cotree text:  C := leaf | union(C,C) | join(C,C)
// Leaves are named <prefix>.<i> in reading order.
BuiltExpressions CographExpressions(std::string_view cotree,
                                    const std::string& prefix);
std::string RandomCotree(Rng& rng, int leaves);

// Substitutes each mapped tree vertex x by the cograph of its cotree (leaf
// prefix x.str()). NLC width <= 3, CW width <= 3.
BuiltExpressions CographTreeExpressions(
    const LabeledGraph& tree, const std::map<VertexId, std::string>& cotrees);
LabeledGraph CographTreeGraph(const LabeledGraph& tree,
                              const std::map<VertexId, std::string>& cotrees);

// ---- random expressions (leaf ids <prefix>0, <prefix>1, ...)

NlcExpr RandomNlcExpr(Rng& rng, int leaves, int k,
                      const std::string& prefix = "v");
CwExpr RandomCwExpr(Rng& rng, int leaves, int k,
                    const std::string& prefix = "v");

// Expressions whose graph is bipartite with respect to `sides`: odd labels
// belong to side 1, even labels to side 2, and no operator mixes them.
struct BipartiteNlc {
  NlcExpr expr;
  Bipartition sides;
};
struct BipartiteCw {
  CwExpr expr;
  Bipartition sides;
};
BipartiteNlc RandomBipartiteNlcExpr(Rng& rng, int leaves, int k,
                                    const std::string& prefix = "v");
BipartiteCw RandomBipartiteCwExpr(Rng& rng, int leaves, int k,
                                  const std::string& prefix = "v");

// One representative per isomorphism class of graphs on n <= 6 vertices
// (ids v0..v(n-1)), in a fixed order.
std::vector<LabeledGraph> NonIsomorphicGraphs(int n);

}  // namespace cwexpr

#endif  // CWEXPR_BUILDERS_H_
