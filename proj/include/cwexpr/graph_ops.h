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

#ifndef CWEXPR_GRAPH_OPS_H_
#define CWEXPR_GRAPH_OPS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "cwexpr/graph.h"

// Graph operations applied directly to labeled graphs. These are the
// semantic reference for the expression-level transforms.
//
// Vertex ids follow a fixed convention: surviving vertices keep their id and
// label; vertices minted by an operation get label 1. Vertices built from a
// pair (products, corona copies) are named by PairId.
namespace cwexpr {

enum class Op {
  kUnion,
  kJoin,
  kSum,
  kDifference,
  kCartesian,
  kCategorical,
  kNormal,
  kCoNormal,
  kLexicographic,
  kCorona,
  kSubstitution,
  kOneSum,
  kQuotient,
  kInducedSubgraph,
  kComplement,
  kBipartiteComplement,
  kSwitching,
  kLocalComplement,
  kEdgeAdd,
  kEdgeDelete,
  kSubdivide,
  kIdentify,
  kContract,
  kVertexAdd,
  kVertexDelete,
  kPower,
};

// Canonical command-line spelling, e.g. "one-sum", "bip-complement".
std::string_view OpName(Op op);
// Accepts the canonical spelling and a few aliases ("lex", "switch", ...).
std::optional<Op> ParseOp(std::string_view name);
bool IsBinaryOp(Op op);

// Id of the vertex standing for the pair (first, second): "first/second".
VertexId PairId(const VertexId& first, const VertexId& second);

// Operation arguments beyond the operand graphs. Which fields are read
// depends on the operation.
struct OpArgs {
  std::optional<VertexId> at;     // v (substitution, one-sum, switching, ...)
  std::optional<VertexId> at2;    // w (one-sum), second edge endpoint
  std::optional<VertexId> fresh;  // id for a minted vertex
  VertexSet vertices;             // keep / module / neighbors / side 2
  // sum, difference: second-operand vertex -> first-operand vertex.
  std::map<VertexId, VertexId> correspondence;
  int power = 1;
};

struct ProductGraph {
  LabeledGraph graph;
  std::map<VertexId, std::pair<VertexId, VertexId>> pairs;
};

namespace ops {

LabeledGraph DisjointUnion(const LabeledGraph& g1, const LabeledGraph& g2);
LabeledGraph Join(const LabeledGraph& g1, const LabeledGraph& g2);
// `correspondence` maps every vertex of g2 bijectively onto a vertex of g1;
// the result lives on g1's vertices.
LabeledGraph Sum(const LabeledGraph& g1, const LabeledGraph& g2,
                 const std::map<VertexId, VertexId>& correspondence);
LabeledGraph Difference(const LabeledGraph& g1, const LabeledGraph& g2,
                        const std::map<VertexId, VertexId>& correspondence);

ProductGraph Cartesian(const LabeledGraph& g1, const LabeledGraph& g2);
ProductGraph Categorical(const LabeledGraph& g1, const LabeledGraph& g2);
ProductGraph Normal(const LabeledGraph& g1, const LabeledGraph& g2);
ProductGraph CoNormal(const LabeledGraph& g1, const LabeledGraph& g2);
// G1[G2]: (u1,u2) ~ (v1,v2) iff u1 ~ v1, or u1 = v1 and u2 ~ v2.
ProductGraph Lexicographic(const LabeledGraph& g1, const LabeledGraph& g2);

// g1 plus one copy of g2 per g1 vertex u (ids PairId(u, w)), with u joined
// to its whole copy.
LabeledGraph Corona(const LabeledGraph& g1, const LabeledGraph& g2);
LabeledGraph Substitution(const LabeledGraph& g1, const VertexId& v,
                          const LabeledGraph& g2);
// Identifies v of g1 with w of g2; the merged vertex keeps w's id and label.
LabeledGraph OneSum(const LabeledGraph& g1, const VertexId& v,
                    const LabeledGraph& g2, const VertexId& w);

// Keeps the smallest id of `module` and deletes the rest.
LabeledGraph Quotient(const LabeledGraph& g, const VertexSet& module);
LabeledGraph InducedSubgraph(const LabeledGraph& g, const VertexSet& keep);
LabeledGraph Complement(const LabeledGraph& g);
LabeledGraph BipartiteComplement(const LabeledGraph& g, const Bipartition& b);
LabeledGraph Switching(const LabeledGraph& g, const VertexId& x);
LabeledGraph LocalComplement(const LabeledGraph& g, const VertexId& x);
LabeledGraph EdgeAdd(const LabeledGraph& g, const VertexId& u,
                     const VertexId& v);
LabeledGraph EdgeDelete(const LabeledGraph& g, const VertexId& u,
                        const VertexId& v);
LabeledGraph Subdivide(const LabeledGraph& g, const VertexId& u,
                       const VertexId& v, const VertexId& z);
// `z` may reuse the id of u or v.
LabeledGraph Identify(const LabeledGraph& g, const VertexId& u,
                      const VertexId& v, const VertexId& z);
LabeledGraph Contract(const LabeledGraph& g, const VertexId& u,
                      const VertexId& v, const VertexId& z);
LabeledGraph VertexAdd(const LabeledGraph& g, const VertexId& z,
                       const VertexSet& neighbors);
LabeledGraph VertexDelete(const LabeledGraph& g, const VertexId& v);
LabeledGraph Power(const LabeledGraph& g, int d);

}  // namespace ops

// Uniform entry point: one or two operands depending on IsBinaryOp(op).
// Product tags return only the graph; use the ops:: functions for the pair
// map. Bipartite complement reads side 2 from args.vertices.
LabeledGraph ApplyGraphOp(Op op, std::span<const LabeledGraph> operands,
                          const OpArgs& args);

}  // namespace cwexpr

#endif  // CWEXPR_GRAPH_OPS_H_
