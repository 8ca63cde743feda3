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

// Rewriting machinery shared by the transforms. Not installed.
#ifndef CWEXPR_SRC_TRANSFORM_INTERNAL_H_
#define CWEXPR_SRC_TRANSFORM_INTERNAL_H_

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "cwexpr/expr.h"
#include "cwexpr/graph.h"

namespace cwexpr::internal {

// Throws PreconditionError unless `v` is a leaf of `x`.
void RequireLeaf(const std::vector<VertexId>& leaves, const VertexId& v);
// Throws PreconditionError if the two leaf sets share an id.
void RequireDisjoint(const std::vector<VertexId>& a,
                     const std::vector<VertexId>& b);

std::map<VertexId, VertexId> Identity(const std::vector<VertexId>& ids);

// Copy of `x` with every leaf id v replaced by rename(v).
NlcExpr RenameLeaves(const NlcExpr& x,
                     const std::function<VertexId(const VertexId&)>& rename);
CwExpr RenameLeaves(const CwExpr& x,
                    const std::function<VertexId(const VertexId&)>& rename);

// Replaces each leaf v of `x` by make(v, label) (recursively rebuilding the
// ancestors, which are otherwise unchanged).
NlcExpr ReplaceLeaves(
    const NlcExpr& x,
    const std::function<std::optional<NlcExpr>(const VertexId&, Label)>& make);
CwExpr ReplaceLeaves(
    const CwExpr& x,
    const std::function<std::optional<CwExpr>(const VertexId&, Label)>& make);

// Relabel sending every label in `present` to `target`.
NlcExpr CollapseNlc(const NlcExpr& x, const LabelSet& present, Label target);
// Chain of rho operators with the same effect.
CwExpr CollapseCw(CwExpr x, const LabelSet& present, Label target);

// Leaves outside `keep` removed; unions left with one operand are spliced
// out. nullopt when nothing is kept.
std::optional<NlcExpr> Prune(const NlcExpr& x, const VertexSet& keep);
std::optional<CwExpr> Prune(const CwExpr& x, const VertexSet& keep);

// Path-fix: every marked leaf w receives its own fresh label (> WidthOf(x)),
// and the operators on its leaf-to-root path are extended so that w keeps
// its edges to unmarked vertices (or gets exactly the complementary ones
// when w is in `complement`). For two marked vertices u, w whose least
// common predecessor decides their adjacency, `marked_rule(u, w, edge)`
// says whether the output has the edge (default: keep it as it is).
struct PathFix {
  std::map<VertexId, Label> fresh;
  VertexSet complement;  // NLC only
  std::function<bool(const VertexId&, const VertexId&, bool)> marked_rule;
};
NlcExpr ApplyPathFix(const NlcExpr& x, const PathFix& fix);
CwExpr ApplyPathFix(const CwExpr& x, const PathFix& fix);

// Label banks: leaves in `shifted` move from label a to a + k, relabels are
// mirrored on the upper bank, and the pairs of every union are rebuilt from
// connect(left bank, right bank, (a, b) in S) over the original labels.
// Width at most 2k.
NlcExpr ApplyBankShift(
    const NlcExpr& x, int k, const VertexSet& shifted,
    const std::function<bool(int, int, bool)>& connect);
// CW counterpart with every bank combination connected as the original
// labels are (AddEdges replicated four ways). Width at most 2k.
CwExpr ApplyBankShift(const CwExpr& x, int k, const VertexSet& shifted);

}  // namespace cwexpr::internal

#endif  // CWEXPR_SRC_TRANSFORM_INTERNAL_H_
