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

#ifndef CWEXPR_TRANSFORM_H_
#define CWEXPR_TRANSFORM_H_

#include <map>
#include <span>
#include <utility>

#include "cwexpr/expr.h"
#include "cwexpr/graph.h"
#include "cwexpr/graph_ops.h"

// Expression-level graph operations. Each transform takes expressions for
// the operand graphs and returns an expression for the resulting graph,
// together with the width bound the construction guarantees.
//
// Vertex ids follow the conventions of graph_ops.h, so
//   Evaluate(t(x).expr)  and  ApplyGraphOp(op, Evaluate(x))
// have the same vertices and edges. Labels generally differ: constructions
// use auxiliary labels, and only the unlabeled graph is meaningful.
namespace cwexpr {

template <typename Expr>
struct TransformResult {
  Expr expr;
  // Guaranteed upper bound on WidthOf(expr), computed from input widths.
  int bound = 0;
  // Input vertex -> output vertex, for every input vertex that survives or
  // is merged into another vertex.
  std::map<VertexId, VertexId> correspondence;
  // Product-like operations: minted output vertex -> (operand-1 vertex,
  // operand-2 vertex).
  std::map<VertexId, std::pair<VertexId, VertexId>> copies;
};

using NlcResult = TransformResult<NlcExpr>;
using CwResult = TransformResult<CwExpr>;

// ---- binary operations; m = max of the input widths.

// bound m
NlcResult TUnion(const NlcExpr& x1, const NlcExpr& x2);
CwResult TUnion(const CwExpr& x1, const CwExpr& x2);
// bound m (NLC), max(m, 2) (CW)
NlcResult TJoin(const NlcExpr& x1, const NlcExpr& x2);
CwResult TJoin(const CwExpr& x1, const CwExpr& x2);
// G1[G2]; output vertex ids are PairId(u1, u2). bound m
NlcResult TLex(const NlcExpr& x1, const NlcExpr& x2);
CwResult TLex(const CwExpr& x1, const CwExpr& x2);
// Copies of G2 are named PairId(u, w). bound m + 1
NlcResult TCorona(const NlcExpr& x1, const NlcExpr& x2);
CwResult TCorona(const CwExpr& x1, const CwExpr& x2);
// bound m
NlcResult TSubstitute(const NlcExpr& x1, const VertexId& v,
                      const NlcExpr& x2);
CwResult TSubstitute(const CwExpr& x1, const VertexId& v, const CwExpr& x2);
// The merged vertex keeps w's id. bound m + 2
NlcResult TOneSum(const NlcExpr& x1, const VertexId& v, const NlcExpr& x2,
                  const VertexId& w);
CwResult TOneSum(const CwExpr& x1, const VertexId& v, const CwExpr& x2,
                 const VertexId& w);

// ---- unary operations; k = WidthOf(x).

// bound k
NlcResult TInducedSubgraph(const NlcExpr& x, const VertexSet& keep);
CwResult TInducedSubgraph(const CwExpr& x, const VertexSet& keep);
NlcResult TDeleteVertex(const NlcExpr& x, const VertexId& v);
CwResult TDeleteVertex(const CwExpr& x, const VertexId& v);
// Keeps the smallest id of the module. bound k
NlcResult TQuotient(const NlcExpr& x, const VertexSet& module);
CwResult TQuotient(const CwExpr& x, const VertexSet& module);
// bound k (NLC), 2k (CW)
NlcResult TComplement(const NlcExpr& x);
CwResult TComplement(const CwExpr& x);
// bound 2k (NLC), 4k (CW)
NlcResult TBipComplement(const NlcExpr& x, const Bipartition& b);
CwResult TBipComplement(const CwExpr& x, const Bipartition& b);
// bound k + 1 (NLC), 2k (CW)
NlcResult TSwitch(const NlcExpr& x, const VertexId& v);
CwResult TSwitch(const CwExpr& x, const VertexId& v);
// bound 2k, or k + min(k, deg v) when degree_optimized (NLC);
// CW: twice the NLC bound.
NlcResult TLocalComplement(const NlcExpr& x, const VertexId& v,
                           bool degree_optimized = false);
CwResult TLocalComplement(const CwExpr& x, const VertexId& v,
                          bool degree_optimized = false);
// bound k + 2
NlcResult TAddEdge(const NlcExpr& x, const VertexId& u, const VertexId& v);
CwResult TAddEdge(const CwExpr& x, const VertexId& u, const VertexId& v);
NlcResult TDelEdge(const NlcExpr& x, const VertexId& u, const VertexId& v);
CwResult TDelEdge(const CwExpr& x, const VertexId& u, const VertexId& v);
// New vertex z on the edge {u, v}. bound k + 2
NlcResult TSubdivide(const NlcExpr& x, const VertexId& u, const VertexId& v,
                     const VertexId& z);
CwResult TSubdivide(const CwExpr& x, const VertexId& u, const VertexId& v,
                    const VertexId& z);
// z may reuse u's or v's id. bound 2k
NlcResult TIdentify(const NlcExpr& x, const VertexId& u, const VertexId& v,
                    const VertexId& z);
CwResult TIdentify(const CwExpr& x, const VertexId& u, const VertexId& v,
                   const VertexId& z);
// TIdentify restricted to an existing edge.
NlcResult TContract(const NlcExpr& x, const VertexId& u, const VertexId& v,
                    const VertexId& z);
CwResult TContract(const CwExpr& x, const VertexId& u, const VertexId& v,
                   const VertexId& z);
// bound 2k; with degree_bounded k + |neighbors|.
NlcResult TAddVertex(const NlcExpr& x, const VertexId& z,
                     const VertexSet& neighbors, bool degree_bounded = false);
CwResult TAddVertex(const CwExpr& x, const VertexId& z,
                    const VertexSet& neighbors, bool degree_bounded = false);

// True for the operations that have an expression-level transform.
bool HasTransform(Op op);

// Uniform entry point mirroring ApplyGraphOp. Reads args.at / args.at2 /
// args.fresh / args.vertices as ApplyGraphOp does. `degree_opt` selects the
// degree-dependent variants of local complementation and vertex addition.
NlcResult ApplyTransform(Op op, std::span<const NlcExpr> operands,
                         const OpArgs& args, bool degree_opt = false);
CwResult ApplyTransform(Op op, std::span<const CwExpr> operands,
                        const OpArgs& args, bool degree_opt = false);

}  // namespace cwexpr

#endif  // CWEXPR_TRANSFORM_H_
