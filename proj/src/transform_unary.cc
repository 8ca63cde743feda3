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

#include "cwexpr/convert.h"
#include "cwexpr/errors.h"
#include "cwexpr/graph_ops.h"
#include "cwexpr/transform.h"
#include "transform_internal.h"

namespace cwexpr {

using internal::ApplyBankShift;
using internal::ApplyPathFix;
using internal::Identity;
using internal::PathFix;
using internal::RequireLeaf;

namespace {

template <typename Expr>
void RequireFresh(const std::vector<VertexId>& ids, const VertexId& z) {
  if (std::find(ids.begin(), ids.end(), z) != ids.end()) {
    throw PreconditionError("vertex " + z.str() + " already exists");
  }
}

void RequireDistinct(const VertexId& u, const VertexId& v) {
  if (u == v) throw PreconditionError("the two vertices must differ");
}

void RequireEdge(const LabeledGraph& g, const VertexId& u, const VertexId& v,
                 bool present) {
  if (g.HasEdge(u, v) != present) {
    throw PreconditionError("{" + u.str() + ", " + v.str() + "} is " +
                            (present ? "not" : "already") + " an edge");
  }
}

VertexSet AllBut(const std::vector<VertexId>& ids, const VertexSet& drop) {
  VertexSet out;
  for (const VertexId& v : ids) {
    if (!drop.count(v)) out.insert(v);
  }
  return out;
}

template <typename Expr>
TransformResult<Expr> Keep(const Expr& x, int bound) {
  return {x, bound, Identity(LeafIds(x)), {}};
}

template <typename Expr>
TransformResult<Expr> InducedImpl(const Expr& x, const VertexSet& keep) {
  const std::vector<VertexId> ids = LeafIds(x);
  for (const VertexId& v : keep) RequireLeaf(ids, v);
  if (keep.empty()) {
    throw PreconditionError("an induced subgraph needs at least one vertex");
  }
  std::optional<Expr> pruned = internal::Prune(x, keep);
  std::map<VertexId, VertexId> corr;
  for (const VertexId& v : keep) corr.emplace(v, v);
  return {*pruned, WidthOf(x), std::move(corr), {}};
}

template <typename Expr>
TransformResult<Expr> QuotientImpl(const Expr& x, const VertexSet& module) {
  const std::vector<VertexId> ids = LeafIds(x);
  for (const VertexId& v : module) RequireLeaf(ids, v);
  if (module.empty()) throw PreconditionError("module is empty");
  if (!IsModule(Evaluate(x), module)) {
    throw PreconditionError("vertex set is not a module");
  }
  const VertexId rep = *module.begin();
  VertexSet drop = module;
  drop.erase(rep);
  TransformResult<Expr> result = InducedImpl(x, AllBut(ids, drop));
  for (const VertexId& v : drop) result.correspondence.emplace(v, rep);
  return result;
}

NlcExpr ComplementNlc(const NlcExpr& x, LabelSet& labels) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf:
      labels = {x.label()};
      return x;
    case NlcExpr::Kind::kUnion: {
      LabelSet left_labels, right_labels;
      NlcExpr left = ComplementNlc(x.left(), left_labels);
      NlcExpr right = ComplementNlc(x.right(), right_labels);
      PairSet pairs;
      for (Label a : left_labels) {
        for (Label b : right_labels) {
          if (!x.pairs().count({a, b})) pairs.emplace(a, b);
        }
      }
      labels = left_labels;
      labels.insert(right_labels.begin(), right_labels.end());
      return NlcExpr::Union(std::move(pairs), left, right);
    }
    case NlcExpr::Kind::kRelabel: {
      LabelSet child_labels;
      NlcExpr child = ComplementNlc(x.child(), child_labels);
      labels.clear();
      for (Label l : child_labels) {
        auto it = x.map().find(l);
        labels.insert(it == x.map().end() ? l : it->second);
      }
      return NlcExpr::Relabel(x.map(), child);
    }
  }
  return x;
}

// Runs an NLC transform on the converted expression and converts back.
// The NLC bound b (in terms of the CW width, which conversion preserves)
// becomes 2b.
CwResult ViaNlc(const CwExpr& x,
                const std::function<NlcResult(const NlcExpr&)>& transform) {
  NlcResult r = transform(CwToNlc(x));
  return {NlcToCw(r.expr), 2 * r.bound, std::move(r.correspondence),
          std::move(r.copies)};
}

// Local complementation with the neighbor bank compacted at every node to
// the labels that N(v) actually carries there.
NlcExpr CompactLocalComplement(const NlcExpr& x, int k,
                               const VertexSet& neighbors) {
  const NlcAnnotation ann(x);
  const int n = ann.size();
  std::vector<std::optional<NlcExpr>> out(n);
  std::vector<LabelSet> plain(n);    // labels of vertices outside N(v)
  std::vector<LabelSet> in_bank(n);  // original labels of N(v) vertices
  const auto slot = [k](const LabelSet& bank, Label l) {
    return k + 1 +
           static_cast<Label>(std::distance(bank.begin(), bank.find(l)));
  };
  const auto re_slot = [&](const NlcExpr& e, const LabelSet& from,
                           const LabelSet& to) {
    LabelMap map;
    for (Label l : from) {
      if (slot(from, l) != slot(to, l)) map.emplace(slot(from, l), slot(to, l));
    }
    return map.empty() ? e : NlcExpr::Relabel(std::move(map), e);
  };
  for (int id = 0; id < n; ++id) {
    const NlcExpr& node = ann.node(id);
    const std::vector<int>& kids = ann.children(id);
    switch (node.kind()) {
      case NlcExpr::Kind::kLeaf:
        if (neighbors.count(node.vertex())) {
          in_bank[id] = {node.label()};
          out[id] = NlcExpr::Leaf(node.vertex(), k + 1);
        } else {
          plain[id] = {node.label()};
          out[id] = node;
        }
        break;
      case NlcExpr::Kind::kRelabel: {
        const int c = kids[0];
        const auto image = [&](Label l) {
          auto it = node.map().find(l);
          return it == node.map().end() ? l : it->second;
        };
        for (Label l : plain[c]) plain[id].insert(image(l));
        for (Label l : in_bank[c]) in_bank[id].insert(image(l));
        LabelMap map;
        for (Label l : plain[c]) {
          if (image(l) != l) map.emplace(l, image(l));
        }
        for (Label l : in_bank[c]) {
          const Label from = slot(in_bank[c], l);
          const Label to = slot(in_bank[id], image(l));
          if (from != to) map.emplace(from, to);
        }
        out[id] = map.empty() ? *out[c] : NlcExpr::Relabel(map, *out[c]);
        break;
      }
      case NlcExpr::Kind::kUnion: {
        const int l = kids[0];
        const int r = kids[1];
        LabelSet bank = in_bank[l];
        bank.insert(in_bank[r].begin(), in_bank[r].end());
        const PairSet& s = node.pairs();
        PairSet pairs;
        for (Label a : plain[l]) {
          for (Label b : plain[r]) {
            if (s.count({a, b})) pairs.emplace(a, b);
          }
          for (Label b : in_bank[r]) {
            if (s.count({a, b})) pairs.emplace(a, slot(bank, b));
          }
        }
        for (Label a : in_bank[l]) {
          for (Label b : plain[r]) {
            if (s.count({a, b})) pairs.emplace(slot(bank, a), b);
          }
          for (Label b : in_bank[r]) {
            if (!s.count({a, b})) pairs.emplace(slot(bank, a), slot(bank, b));
          }
        }
        plain[id] = plain[l];
        plain[id].insert(plain[r].begin(), plain[r].end());
        in_bank[id] = bank;
        out[id] = NlcExpr::Union(std::move(pairs),
                                 re_slot(*out[l], in_bank[l], bank),
                                 re_slot(*out[r], in_bank[r], bank));
        break;
      }
    }
  }
  return *out[ann.root()];
}

PathFix EdgeFix(const VertexId& u, const VertexId& v, int k, bool keep_uv) {
  PathFix fix;
  fix.fresh = {{u, k + 1}, {v, k + 2}};
  fix.marked_rule = [keep_uv](const VertexId&, const VertexId&, bool) {
    return keep_uv;
  };
  return fix;
}

// Fresh labels k+1..k+d for the neighbors, in id order.
PathFix NeighborFix(const VertexSet& neighbors, int k) {
  PathFix fix;
  Label next = k + 1;
  for (const VertexId& w : neighbors) fix.fresh.emplace(w, next++);
  return fix;
}

// z joined to `neighbors` of an edgeless graph: a star plus isolated
// vertices, built directly with two labels.
CwExpr StarWithIsolated(const std::vector<VertexId>& ids, const VertexId& z,
                        const VertexSet& neighbors) {
  CwExpr e = CwExpr::Leaf(z, 2);
  for (const VertexId& w : neighbors) {
    e = CwExpr::DisjointUnion(e, CwExpr::Leaf(w, 1));
  }
  if (!neighbors.empty()) e = CwExpr::AddEdges(1, 2, e);
  for (const VertexId& w : ids) {
    if (!neighbors.count(w)) e = CwExpr::DisjointUnion(e, CwExpr::Leaf(w, 1));
  }
  return e;
}

template <typename Expr>
void CheckAddVertexArgs(const std::vector<VertexId>& ids, const VertexId& z,
                        const VertexSet& neighbors) {
  RequireFresh<Expr>(ids, z);
  for (const VertexId& w : neighbors) RequireLeaf(ids, w);
}

template <typename Expr>
TransformResult<Expr> IdentifyImpl(const Expr& x, const VertexId& u,
                                   const VertexId& v, const VertexId& z) {
  const std::vector<VertexId> ids = LeafIds(x);
  RequireLeaf(ids, u);
  RequireLeaf(ids, v);
  RequireDistinct(u, v);
  if (z != u && z != v) RequireFresh<Expr>(ids, z);
  const int k = WidthOf(x);
  const LabeledGraph g = Evaluate(x);
  VertexSet neighbors = g.Neighbors(u);
  neighbors.insert(g.Neighbors(v).begin(), g.Neighbors(v).end());
  neighbors.erase(u);
  neighbors.erase(v);
  const VertexSet rest = AllBut(ids, {u, v});
  TransformResult<Expr> result{Expr::Leaf(z, 1), 2 * k, {}, {}};
  if (!rest.empty()) {
    TransformResult<Expr> pruned = InducedImpl(x, rest);
    TransformResult<Expr> added = TAddVertex(pruned.expr, z, neighbors);
    result.expr = added.expr;
    result.correspondence = std::move(pruned.correspondence);
  }
  result.correspondence[u] = z;
  result.correspondence[v] = z;
  return result;
}

}  // namespace

// ------------------------------------------------- subgraphs and quotients

NlcResult TInducedSubgraph(const NlcExpr& x, const VertexSet& keep) {
  return InducedImpl(x, keep);
}
CwResult TInducedSubgraph(const CwExpr& x, const VertexSet& keep) {
  return InducedImpl(x, keep);
}

NlcResult TDeleteVertex(const NlcExpr& x, const VertexId& v) {
  const std::vector<VertexId> ids = LeafIds(x);
  RequireLeaf(ids, v);
  return InducedImpl(x, AllBut(ids, {v}));
}
CwResult TDeleteVertex(const CwExpr& x, const VertexId& v) {
  const std::vector<VertexId> ids = LeafIds(x);
  RequireLeaf(ids, v);
  return InducedImpl(x, AllBut(ids, {v}));
}

NlcResult TQuotient(const NlcExpr& x, const VertexSet& module) {
  return QuotientImpl(x, module);
}
CwResult TQuotient(const CwExpr& x, const VertexSet& module) {
  return QuotientImpl(x, module);
}

// ------------------------------------------------------------ complements

NlcResult TComplement(const NlcExpr& x) {
  LabelSet labels;
  NlcExpr e = ComplementNlc(x, labels);
  return {e, WidthOf(x), Identity(LeafIds(x)), {}};
}

CwResult TComplement(const CwExpr& x) {
  CwResult r = ViaNlc(x, [](const NlcExpr& y) { return TComplement(y); });
  r.bound = 2 * WidthOf(x);
  return r;
}

NlcResult TBipComplement(const NlcExpr& x, const Bipartition& b) {
  const BipartitionVerdict verdict = ValidateBipartition(Evaluate(x), b);
  if (verdict == BipartitionVerdict::kCoverageMismatch) {
    throw PreconditionError("bipartition does not cover the vertex set");
  }
  if (verdict == BipartitionVerdict::kSameSideEdge) {
    throw PreconditionError("bipartition has an edge inside one side");
  }
  const int k = WidthOf(x);
  NlcExpr e = ApplyBankShift(x, k, b.side2, [](int bl, int br, bool in_s) {
    return bl == br ? in_s : !in_s;
  });
  return {e, 2 * k, Identity(LeafIds(x)), {}};
}

CwResult TBipComplement(const CwExpr& x, const Bipartition& b) {
  CwResult r =
      ViaNlc(x, [&](const NlcExpr& y) { return TBipComplement(y, b); });
  r.bound = 4 * WidthOf(x);
  return r;
}

// -------------------------------------------------------------- switching

NlcResult TSwitch(const NlcExpr& x, const VertexId& v) {
  const std::vector<VertexId> ids = LeafIds(x);
  RequireLeaf(ids, v);
  const int k = WidthOf(x);
  if (ids.size() == 1) return Keep(x, k + 1);
  PathFix fix;
  fix.fresh = {{v, k + 1}};
  fix.complement = {v};
  return {ApplyPathFix(x, fix), k + 1, Identity(ids), {}};
}

CwResult TSwitch(const CwExpr& x, const VertexId& v) {
  const std::vector<VertexId> ids = LeafIds(x);
  RequireLeaf(ids, v);
  const int k = WidthOf(x);
  if (ids.size() == 1) return Keep(x, 2 * k);
  const LabeledGraph g = Evaluate(x);
  VertexSet others = AllBut(ids, g.Neighbors(v));
  others.erase(v);
  CwResult pruned = InducedImpl(x, AllBut(ids, {v}));
  CwResult added = TAddVertex(pruned.expr, v, others);
  return {added.expr, 2 * k, Identity(ids), {}};
}

// ------------------------------------------------- local complementation

NlcResult TLocalComplement(const NlcExpr& x, const VertexId& v,
                           bool degree_optimized) {
  const std::vector<VertexId> ids = LeafIds(x);
  RequireLeaf(ids, v);
  const int k = WidthOf(x);
  const VertexSet neighbors = Evaluate(x).Neighbors(v);
  const int d = static_cast<int>(neighbors.size());
  const int bound = degree_optimized ? k + std::min(k, d) : 2 * k;
  if (d < 2) return Keep(x, bound);  // nothing to complement
  NlcExpr e =
      degree_optimized
          ? CompactLocalComplement(x, k, neighbors)
          : ApplyBankShift(x, k, neighbors, [](int bl, int br, bool in_s) {
              return bl == 1 && br == 1 ? !in_s : in_s;
            });
  return {e, bound, Identity(ids), {}};
}

CwResult TLocalComplement(const CwExpr& x, const VertexId& v,
                          bool degree_optimized) {
  CwResult r = ViaNlc(x, [&](const NlcExpr& y) {
    return TLocalComplement(y, v, degree_optimized);
  });
  const int k = WidthOf(x);
  const int d = Evaluate(x).Degree(v);
  r.bound = 2 * (degree_optimized ? k + std::min(k, d) : 2 * k);
  return r;
}

// ------------------------------------------------------------ edge edits

NlcResult TAddEdge(const NlcExpr& x, const VertexId& u, const VertexId& v) {
  const std::vector<VertexId> ids = LeafIds(x);
  RequireLeaf(ids, u);
  RequireLeaf(ids, v);
  RequireDistinct(u, v);
  RequireEdge(Evaluate(x), u, v, false);
  const int k = WidthOf(x);
  return {ApplyPathFix(x, EdgeFix(u, v, k, true)), k + 2, Identity(ids), {}};
}

CwResult TAddEdge(const CwExpr& x, const VertexId& u, const VertexId& v) {
  const std::vector<VertexId> ids = LeafIds(x);
  RequireLeaf(ids, u);
  RequireLeaf(ids, v);
  RequireDistinct(u, v);
  RequireEdge(Evaluate(x), u, v, false);
  const int k = WidthOf(x);
  CwExpr e = CwExpr::AddEdges(k + 1, k + 2,
                              ApplyPathFix(x, EdgeFix(u, v, k, true)));
  return {e, k + 2, Identity(ids), {}};
}

NlcResult TDelEdge(const NlcExpr& x, const VertexId& u, const VertexId& v) {
  const std::vector<VertexId> ids = LeafIds(x);
  RequireLeaf(ids, u);
  RequireLeaf(ids, v);
  RequireDistinct(u, v);
  RequireEdge(Evaluate(x), u, v, true);
  const int k = WidthOf(x);
  return {ApplyPathFix(x, EdgeFix(u, v, k, false)), k + 2, Identity(ids), {}};
}

CwResult TDelEdge(const CwExpr& x, const VertexId& u, const VertexId& v) {
  const std::vector<VertexId> ids = LeafIds(x);
  RequireLeaf(ids, u);
  RequireLeaf(ids, v);
  RequireDistinct(u, v);
  RequireEdge(Evaluate(x), u, v, true);
  const int k = WidthOf(x);
  return {ApplyPathFix(x, EdgeFix(u, v, k, false)), k + 2, Identity(ids), {}};
}

NlcResult TSubdivide(const NlcExpr& x, const VertexId& u, const VertexId& v,
                     const VertexId& z) {
  NlcResult r = TDelEdge(x, u, v);
  RequireFresh<NlcExpr>(LeafIds(x), z);
  const int k = WidthOf(x);
  r.expr = NlcExpr::Union({{k + 1, k + 1}, {k + 2, k + 1}}, r.expr,
                          NlcExpr::Leaf(z, k + 1));
  return r;
}

CwResult TSubdivide(const CwExpr& x, const VertexId& u, const VertexId& v,
                    const VertexId& z) {
  CwResult r = TDelEdge(x, u, v);
  RequireFresh<CwExpr>(LeafIds(x), z);
  const int k = WidthOf(x);
  CwExpr e = CwExpr::Relabel(k + 1, k + 2, r.expr);
  e = CwExpr::DisjointUnion(e, CwExpr::Leaf(z, k + 1));
  r.expr = CwExpr::AddEdges(k + 1, k + 2, e);
  return r;
}

// --------------------------------------------- identification, insertion

NlcResult TIdentify(const NlcExpr& x, const VertexId& u, const VertexId& v,
                    const VertexId& z) {
  return IdentifyImpl(x, u, v, z);
}
CwResult TIdentify(const CwExpr& x, const VertexId& u, const VertexId& v,
                   const VertexId& z) {
  return IdentifyImpl(x, u, v, z);
}

NlcResult TContract(const NlcExpr& x, const VertexId& u, const VertexId& v,
                    const VertexId& z) {
  RequireEdge(Evaluate(x), u, v, true);
  return IdentifyImpl(x, u, v, z);
}
CwResult TContract(const CwExpr& x, const VertexId& u, const VertexId& v,
                   const VertexId& z) {
  RequireEdge(Evaluate(x), u, v, true);
  return IdentifyImpl(x, u, v, z);
}

NlcResult TAddVertex(const NlcExpr& x, const VertexId& z,
                     const VertexSet& neighbors, bool degree_bounded) {
  const std::vector<VertexId> ids = LeafIds(x);
  CheckAddVertexArgs<NlcExpr>(ids, z, neighbors);
  const int k = WidthOf(x);
  const int d = static_cast<int>(neighbors.size());
  NlcResult result{x, degree_bounded ? k + d : 2 * k, Identity(ids), {}};
  if (neighbors.empty()) {
    result.expr = NlcExpr::Union({}, NlcExpr::Leaf(z, 1), x);
    return result;
  }
  PairSet pairs;
  NlcExpr e = x;
  if (degree_bounded) {
    const PathFix fix = NeighborFix(neighbors, k);
    e = ApplyPathFix(x, fix);
    for (const auto& [w, f] : fix.fresh) pairs.emplace(1, f);
  } else {
    e = ApplyBankShift(x, k, AllBut(ids, neighbors),
                       [](int, int, bool in_s) { return in_s; });
    for (Label l : RootLabels(e)) {
      if (l <= k) pairs.emplace(1, l);
    }
  }
  result.expr = NlcExpr::Union(std::move(pairs), NlcExpr::Leaf(z, 1), e);
  return result;
}

CwResult TAddVertex(const CwExpr& x, const VertexId& z,
                    const VertexSet& neighbors, bool degree_bounded) {
  const std::vector<VertexId> ids = LeafIds(x);
  CheckAddVertexArgs<CwExpr>(ids, z, neighbors);
  const int k = WidthOf(x);
  const int d = static_cast<int>(neighbors.size());
  CwResult result{x, degree_bounded ? k + d : 2 * k, Identity(ids), {}};
  if (neighbors.empty()) {
    result.expr = CwExpr::DisjointUnion(CwExpr::Leaf(z, 1), x);
    return result;
  }
  if (k == 1) {
    // Width-1 CW expressions define edgeless graphs.
    result.expr = StarWithIsolated(ids, z, neighbors);
    return result;
  }
  if (degree_bounded) {
    const PathFix fix = NeighborFix(neighbors, k);
    CwExpr e = ApplyPathFix(x, fix);
    LabelSet fresh, old;
    for (Label l : RootLabels(e)) (l > k ? fresh : old).insert(l);
    e = internal::CollapseCw(e, fresh, k + 1);
    e = internal::CollapseCw(e, old, 1);
    e = CwExpr::DisjointUnion(e, CwExpr::Leaf(z, 2));
    result.expr = CwExpr::AddEdges(2, k + 1, e);
    return result;
  }
  // Non-neighbors go to the upper bank, which is then collapsed onto k + 1
  // so that 2k is free for z.
  CwExpr e = ApplyBankShift(x, k, AllBut(ids, neighbors));
  LabelSet upper, lower;
  for (Label l : RootLabels(e)) (l > k ? upper : lower).insert(l);
  e = internal::CollapseCw(e, upper, k + 1);
  e = CwExpr::DisjointUnion(e, CwExpr::Leaf(z, 2 * k));
  for (Label l : lower) e = CwExpr::AddEdges(l, 2 * k, e);
  result.expr = e;
  return result;
}

}  // namespace cwexpr
