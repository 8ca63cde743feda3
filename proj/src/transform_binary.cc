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

#include <algorithm>

#include "cwexpr/errors.h"
#include "cwexpr/graph_ops.h"
#include "cwexpr/transform.h"
#include "transform_internal.h"

namespace cwexpr {

using internal::CollapseCw;
using internal::CollapseNlc;
using internal::Identity;
using internal::RequireDisjoint;
using internal::RequireLeaf;

namespace {

template <typename Expr>
struct Operands {
  Operands(const Expr& x1, const Expr& x2)
      : ids1(LeafIds(x1)),
        ids2(LeafIds(x2)),
        k1(WidthOf(x1)),
        k2(WidthOf(x2)),
        m(std::max(k1, k2)) {}

  std::vector<VertexId> ids1;
  std::vector<VertexId> ids2;
  int k1;
  int k2;
  int m;

  std::map<VertexId, VertexId> BothIdentity() const {
    std::map<VertexId, VertexId> out = Identity(ids1);
    for (const VertexId& v : ids2) out.emplace(v, v);
    return out;
  }
};

// Renamed copy of x2 for the x1 vertex u, registering the new ids.
template <typename Expr, typename Result>
Expr CopyFor(const VertexId& u, const Expr& x2, Result& result) {
  return internal::RenameLeaves(x2, [&](const VertexId& w) {
    VertexId id = PairId(u, w);
    result.copies.emplace(id, std::make_pair(u, w));
    return id;
  });
}

}  // namespace

// ---------------------------------------------------------------- union

NlcResult TUnion(const NlcExpr& x1, const NlcExpr& x2) {
  const Operands<NlcExpr> in(x1, x2);
  RequireDisjoint(in.ids1, in.ids2);
  return {NlcExpr::Union({}, x1, x2), in.m, in.BothIdentity(), {}};
}

CwResult TUnion(const CwExpr& x1, const CwExpr& x2) {
  const Operands<CwExpr> in(x1, x2);
  RequireDisjoint(in.ids1, in.ids2);
  return {CwExpr::DisjointUnion(x1, x2), in.m, in.BothIdentity(), {}};
}

// ----------------------------------------------------------------- join

NlcResult TJoin(const NlcExpr& x1, const NlcExpr& x2) {
  const Operands<NlcExpr> in(x1, x2);
  RequireDisjoint(in.ids1, in.ids2);
  PairSet all;
  for (Label a : RootLabels(x1)) {
    for (Label b : RootLabels(x2)) all.emplace(a, b);
  }
  return {NlcExpr::Union(std::move(all), x1, x2), in.m, in.BothIdentity(), {}};
}

CwResult TJoin(const CwExpr& x1, const CwExpr& x2) {
  const Operands<CwExpr> in(x1, x2);
  RequireDisjoint(in.ids1, in.ids2);
  CwExpr e = CwExpr::DisjointUnion(CollapseCw(x1, RootLabels(x1), 1),
                                   CollapseCw(x2, RootLabels(x2), 2));
  return {CwExpr::AddEdges(1, 2, e), std::max(in.m, 2), in.BothIdentity(),
          {}};
}

// -------------------------------------------------- lexicographic product

NlcResult TLex(const NlcExpr& x1, const NlcExpr& x2) {
  const Operands<NlcExpr> in(x1, x2);
  const LabelSet labels2 = RootLabels(x2);
  NlcResult result{x1, in.m, {}, {}};
  result.expr = internal::ReplaceLeaves(x1, [&](const VertexId& u, Label a) {
    return std::optional<NlcExpr>(
        CollapseNlc(CopyFor(u, x2, result), labels2, a));
  });
  Validate(result.expr);
  return result;
}

CwResult TLex(const CwExpr& x1, const CwExpr& x2) {
  const Operands<CwExpr> in(x1, x2);
  const LabelSet labels2 = RootLabels(x2);
  CwResult result{x1, in.m, {}, {}};
  result.expr = internal::ReplaceLeaves(x1, [&](const VertexId& u, Label a) {
    return std::optional<CwExpr>(
        CollapseCw(CopyFor(u, x2, result), labels2, a));
  });
  Validate(result.expr);
  return result;
}

// --------------------------------------------------------------- corona

// Each copy is parked on the label k1 + 1, which no operator of x1 touches.
NlcResult TCorona(const NlcExpr& x1, const NlcExpr& x2) {
  const Operands<NlcExpr> in(x1, x2);
  const LabelSet labels2 = RootLabels(x2);
  const Label dead = in.k1 + 1;
  NlcResult result{x1, in.m + 1, Identity(in.ids1), {}};
  result.expr = internal::ReplaceLeaves(x1, [&](const VertexId& u, Label a) {
    NlcExpr copy = CollapseNlc(CopyFor(u, x2, result), labels2, dead);
    return std::optional<NlcExpr>(
        NlcExpr::Union({{a, dead}}, NlcExpr::Leaf(u, a), copy));
  });
  Validate(result.expr);
  return result;
}

CwResult TCorona(const CwExpr& x1, const CwExpr& x2) {
  const Operands<CwExpr> in(x1, x2);
  const LabelSet labels2 = RootLabels(x2);
  const Label dead = in.k1 + 1;
  CwResult result{x1, in.m + 1, Identity(in.ids1), {}};
  result.expr = internal::ReplaceLeaves(x1, [&](const VertexId& u, Label a) {
    CwExpr copy = CollapseCw(CopyFor(u, x2, result), labels2, dead);
    return std::optional<CwExpr>(CwExpr::AddEdges(
        a, dead, CwExpr::DisjointUnion(CwExpr::Leaf(u, a), copy)));
  });
  Validate(result.expr);
  return result;
}

// --------------------------------------------------------- substitution

NlcResult TSubstitute(const NlcExpr& x1, const VertexId& v,
                      const NlcExpr& x2) {
  const Operands<NlcExpr> in(x1, x2);
  RequireLeaf(in.ids1, v);
  RequireDisjoint(in.ids1, in.ids2);
  const LabelSet labels2 = RootLabels(x2);
  NlcResult result{x1, in.m, in.BothIdentity(), {}};
  result.correspondence.erase(v);
  result.expr = internal::ReplaceLeaves(
      x1, [&](const VertexId& u, Label a) -> std::optional<NlcExpr> {
        if (u != v) return std::nullopt;
        return CollapseNlc(x2, labels2, a);
      });
  return result;
}

CwResult TSubstitute(const CwExpr& x1, const VertexId& v, const CwExpr& x2) {
  const Operands<CwExpr> in(x1, x2);
  RequireLeaf(in.ids1, v);
  RequireDisjoint(in.ids1, in.ids2);
  const LabelSet labels2 = RootLabels(x2);
  CwResult result{x1, in.m, in.BothIdentity(), {}};
  result.correspondence.erase(v);
  result.expr = internal::ReplaceLeaves(
      x1, [&](const VertexId& u, Label a) -> std::optional<CwExpr> {
        if (u != v) return std::nullopt;
        return CollapseCw(x2, labels2, a);
      });
  return result;
}

// ---------------------------------------------------------------- 1-sum

// w is path-fixed inside x2 onto the fresh label k2 + 1; the fixed x2 then
// replaces leaf v behind a relabel sending w's label to lab(v) and all
// other labels to a label no operator of x1 uses.
NlcResult TOneSum(const NlcExpr& x1, const VertexId& v, const NlcExpr& x2,
                  const VertexId& w) {
  const Operands<NlcExpr> in(x1, x2);
  RequireLeaf(in.ids1, v);
  RequireLeaf(in.ids2, w);
  RequireDisjoint(in.ids1, in.ids2);
  const Label fresh = in.k2 + 1;
  const Label dead = in.k1 + 1;
  const NlcExpr fixed = internal::ApplyPathFix(x2, {{{w, fresh}}, {}, {}});
  NlcResult result{x1, in.m + 2, in.BothIdentity(), {}};
  result.correspondence[v] = w;
  result.expr = internal::ReplaceLeaves(
      x1, [&](const VertexId& u, Label a) -> std::optional<NlcExpr> {
        if (u != v) return std::nullopt;
        LabelMap map;
        for (Label l : RootLabels(fixed)) {
          const Label to = l == fresh ? a : dead;
          if (to != l) map.emplace(l, to);
        }
        return map.empty() ? fixed : NlcExpr::Relabel(map, fixed);
      });
  return result;
}

CwResult TOneSum(const CwExpr& x1, const VertexId& v, const CwExpr& x2,
                 const VertexId& w) {
  const Operands<CwExpr> in(x1, x2);
  RequireLeaf(in.ids1, v);
  RequireLeaf(in.ids2, w);
  RequireDisjoint(in.ids1, in.ids2);
  const Label fresh = in.k2 + 1;
  // Sequential relabels need the dead label apart from the fresh one.
  const Label dead = std::max(in.k1, fresh) + 1;
  const CwExpr fixed = internal::ApplyPathFix(x2, {{{w, fresh}}, {}, {}});
  CwResult result{x1, in.m + 2, in.BothIdentity(), {}};
  result.correspondence[v] = w;
  result.expr = internal::ReplaceLeaves(
      x1, [&](const VertexId& u, Label a) -> std::optional<CwExpr> {
        if (u != v) return std::nullopt;
        LabelSet others = RootLabels(fixed);
        others.erase(fresh);
        CwExpr e = CollapseCw(fixed, others, dead);
        return a == fresh ? e : CwExpr::Relabel(fresh, a, e);
      });
  return result;
}

}  // namespace cwexpr
