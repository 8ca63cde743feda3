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
#include <array>
#include <stdexcept>
#include <vector>

#include "cwexpr/errors.h"
#include "transform_internal.h"

namespace cwexpr::internal {

void RequireLeaf(const std::vector<VertexId>& leaves, const VertexId& v) {
  if (std::find(leaves.begin(), leaves.end(), v) == leaves.end()) {
    throw PreconditionError("vertex " + v.str() +
                            " is not a leaf of the expression");
  }
}

void RequireDisjoint(const std::vector<VertexId>& a,
                     const std::vector<VertexId>& b) {
  const VertexSet in_a(a.begin(), a.end());
  for (const VertexId& v : b) {
    if (in_a.count(v)) {
      throw PreconditionError("operands share vertex id " + v.str());
    }
  }
}

std::map<VertexId, VertexId> Identity(const std::vector<VertexId>& ids) {
  std::map<VertexId, VertexId> out;
  for (const VertexId& v : ids) out.emplace(v, v);
  return out;
}

NlcExpr RenameLeaves(const NlcExpr& x,
                     const std::function<VertexId(const VertexId&)>& rename) {
  return ReplaceLeaves(x, [&](const VertexId& v, Label l) {
    return std::optional<NlcExpr>(NlcExpr::Leaf(rename(v), l));
  });
}

CwExpr RenameLeaves(const CwExpr& x,
                    const std::function<VertexId(const VertexId&)>& rename) {
  return ReplaceLeaves(x, [&](const VertexId& v, Label l) {
    return std::optional<CwExpr>(CwExpr::Leaf(rename(v), l));
  });
}

NlcExpr ReplaceLeaves(
    const NlcExpr& x,
    const std::function<std::optional<NlcExpr>(const VertexId&, Label)>&
        make) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf: {
      std::optional<NlcExpr> r = make(x.vertex(), x.label());
      return r ? *r : x;
    }
    case NlcExpr::Kind::kUnion:
      return NlcExpr::Union(x.pairs(), ReplaceLeaves(x.left(), make),
                            ReplaceLeaves(x.right(), make));
    case NlcExpr::Kind::kRelabel:
      return NlcExpr::Relabel(x.map(), ReplaceLeaves(x.child(), make));
  }
  return x;
}

CwExpr ReplaceLeaves(
    const CwExpr& x,
    const std::function<std::optional<CwExpr>(const VertexId&, Label)>&
        make) {
  switch (x.kind()) {
    case CwExpr::Kind::kLeaf: {
      std::optional<CwExpr> r = make(x.vertex(), x.label());
      return r ? *r : x;
    }
    case CwExpr::Kind::kUnion:
      return CwExpr::DisjointUnion(ReplaceLeaves(x.left(), make),
                                   ReplaceLeaves(x.right(), make));
    case CwExpr::Kind::kAddEdges:
      return CwExpr::AddEdges(x.a(), x.b(), ReplaceLeaves(x.child(), make));
    case CwExpr::Kind::kRelabel:
      return CwExpr::Relabel(x.a(), x.b(), ReplaceLeaves(x.child(), make));
  }
  return x;
}

NlcExpr CollapseNlc(const NlcExpr& x, const LabelSet& present, Label target) {
  LabelMap map;
  for (Label l : present) {
    if (l != target) map.emplace(l, target);
  }
  if (map.empty()) return x;
  return NlcExpr::Relabel(std::move(map), x);
}

CwExpr CollapseCw(CwExpr x, const LabelSet& present, Label target) {
  for (Label l : present) {
    if (l != target) x = CwExpr::Relabel(l, target, x);
  }
  return x;
}

std::optional<NlcExpr> Prune(const NlcExpr& x, const VertexSet& keep) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf:
      if (keep.count(x.vertex())) return x;
      return std::nullopt;
    case NlcExpr::Kind::kUnion: {
      std::optional<NlcExpr> left = Prune(x.left(), keep);
      std::optional<NlcExpr> right = Prune(x.right(), keep);
      if (left && right) return NlcExpr::Union(x.pairs(), *left, *right);
      return left ? left : right;
    }
    case NlcExpr::Kind::kRelabel: {
      std::optional<NlcExpr> child = Prune(x.child(), keep);
      if (!child) return std::nullopt;
      return NlcExpr::Relabel(x.map(), *child);
    }
  }
  return std::nullopt;
}

std::optional<CwExpr> Prune(const CwExpr& x, const VertexSet& keep) {
  switch (x.kind()) {
    case CwExpr::Kind::kLeaf:
      if (keep.count(x.vertex())) return x;
      return std::nullopt;
    case CwExpr::Kind::kUnion: {
      std::optional<CwExpr> left = Prune(x.left(), keep);
      std::optional<CwExpr> right = Prune(x.right(), keep);
      if (left && right) return CwExpr::DisjointUnion(*left, *right);
      return left ? left : right;
    }
    case CwExpr::Kind::kAddEdges: {
      std::optional<CwExpr> child = Prune(x.child(), keep);
      if (!child) return std::nullopt;
      return CwExpr::AddEdges(x.a(), x.b(), *child);
    }
    case CwExpr::Kind::kRelabel: {
      std::optional<CwExpr> child = Prune(x.child(), keep);
      if (!child) return std::nullopt;
      return CwExpr::Relabel(x.a(), x.b(), *child);
    }
  }
  return std::nullopt;
}

namespace {

bool Rule(const PathFix& fix, const VertexId& u, const VertexId& w,
          bool edge) {
  return fix.marked_rule ? fix.marked_rule(u, w, edge) : edge;
}

Label MapLabel(const LabelMap& map, Label l) {
  auto it = map.find(l);
  return it == map.end() ? l : it->second;
}

}  // namespace

NlcExpr ApplyPathFix(const NlcExpr& x, const PathFix& fix) {
  const NlcAnnotation ann(x);
  const int n = ann.size();
  std::vector<std::optional<NlcExpr>> out(n);
  std::vector<LabelSet> unmarked(n);              // labels of unmarked leaves
  std::vector<std::vector<VertexId>> marked(n);   // marked leaves below
  for (int id = 0; id < n; ++id) {
    const NlcExpr& node = ann.node(id);
    const std::vector<int>& kids = ann.children(id);
    switch (node.kind()) {
      case NlcExpr::Kind::kLeaf: {
        auto it = fix.fresh.find(node.vertex());
        if (it == fix.fresh.end()) {
          out[id] = node;
          unmarked[id] = {node.label()};
        } else {
          out[id] = NlcExpr::Leaf(node.vertex(), it->second);
          marked[id] = {node.vertex()};
        }
        break;
      }
      case NlcExpr::Kind::kRelabel: {
        const int c = kids[0];
        for (Label l : unmarked[c]) unmarked[id].insert(MapLabel(node.map(), l));
        marked[id] = marked[c];
        out[id] = NlcExpr::Relabel(node.map(), *out[c]);
        break;
      }
      case NlcExpr::Kind::kUnion: {
        const int l = kids[0];
        const int r = kids[1];
        const PairSet& s = node.pairs();
        PairSet pairs = s;
        for (const VertexId& w : marked[l]) {
          const Label c = ann.LabelAt(w, l);
          const bool flip = fix.complement.count(w) > 0;
          for (Label b : unmarked[r]) {
            if ((s.count({c, b}) > 0) != flip) {
              pairs.emplace(fix.fresh.at(w), b);
            }
          }
        }
        for (const VertexId& w : marked[r]) {
          const Label c = ann.LabelAt(w, r);
          const bool flip = fix.complement.count(w) > 0;
          for (Label a : unmarked[l]) {
            if ((s.count({a, c}) > 0) != flip) {
              pairs.emplace(a, fix.fresh.at(w));
            }
          }
        }
        for (const VertexId& u : marked[l]) {
          for (const VertexId& w : marked[r]) {
            const bool edge =
                s.count({ann.LabelAt(u, l), ann.LabelAt(w, r)}) > 0;
            if (Rule(fix, u, w, edge)) {
              pairs.emplace(fix.fresh.at(u), fix.fresh.at(w));
            }
          }
        }
        unmarked[id] = unmarked[l];
        unmarked[id].insert(unmarked[r].begin(), unmarked[r].end());
        marked[id] = marked[l];
        marked[id].insert(marked[id].end(), marked[r].begin(), marked[r].end());
        out[id] = NlcExpr::Union(std::move(pairs), *out[l], *out[r]);
        break;
      }
    }
  }
  return *out[ann.root()];
}

CwExpr ApplyPathFix(const CwExpr& x, const PathFix& fix) {
  if (!fix.complement.empty()) {
    throw std::logic_error("complementing path-fix is NLC-only");
  }
  const CwAnnotation ann(x);
  const int n = ann.size();
  std::vector<std::optional<CwExpr>> out(n);
  std::vector<LabelSet> unmarked(n);
  std::vector<std::vector<VertexId>> marked(n);
  for (int id = 0; id < n; ++id) {
    const CwExpr& node = ann.node(id);
    const std::vector<int>& kids = ann.children(id);
    switch (node.kind()) {
      case CwExpr::Kind::kLeaf: {
        auto it = fix.fresh.find(node.vertex());
        if (it == fix.fresh.end()) {
          out[id] = node;
          unmarked[id] = {node.label()};
        } else {
          out[id] = CwExpr::Leaf(node.vertex(), it->second);
          marked[id] = {node.vertex()};
        }
        break;
      }
      case CwExpr::Kind::kUnion: {
        const int l = kids[0];
        const int r = kids[1];
        unmarked[id] = unmarked[l];
        unmarked[id].insert(unmarked[r].begin(), unmarked[r].end());
        marked[id] = marked[l];
        marked[id].insert(marked[id].end(), marked[r].begin(), marked[r].end());
        out[id] = CwExpr::DisjointUnion(*out[l], *out[r]);
        break;
      }
      case CwExpr::Kind::kRelabel: {
        const int c = kids[0];
        unmarked[id] = unmarked[c];
        if (unmarked[id].erase(node.a())) unmarked[id].insert(node.b());
        marked[id] = marked[c];
        out[id] = CwExpr::Relabel(node.a(), node.b(), *out[c]);
        break;
      }
      case CwExpr::Kind::kAddEdges: {
        const int c = kids[0];
        const Label a = node.a();
        const Label b = node.b();
        unmarked[id] = unmarked[c];
        marked[id] = marked[c];
        CwExpr e = CwExpr::AddEdges(a, b, *out[c]);
        const std::vector<VertexId>& below = marked[c];
        for (std::size_t i = 0; i < below.size(); ++i) {
          const VertexId& w = below[i];
          const Label lw = ann.LabelAt(w, c);
          const Label f = fix.fresh.at(w);
          if (lw == a && unmarked[c].count(b)) e = CwExpr::AddEdges(f, b, e);
          if (lw == b && unmarked[c].count(a)) e = CwExpr::AddEdges(a, f, e);
          for (std::size_t j = i + 1; j < below.size(); ++j) {
            const VertexId& u = below[j];
            const Label lu = ann.LabelAt(u, c);
            const bool edge = (lw == a && lu == b) || (lw == b && lu == a);
            if (edge && Rule(fix, w, u, true)) {
              e = CwExpr::AddEdges(f, fix.fresh.at(u), e);
            }
          }
        }
        out[id] = e;
        break;
      }
    }
  }
  return *out[ann.root()];
}

NlcExpr ApplyBankShift(const NlcExpr& x, int k, const VertexSet& shifted,
                       const std::function<bool(int, int, bool)>& connect) {
  const NlcAnnotation ann(x);
  const int n = ann.size();
  std::vector<std::optional<NlcExpr>> out(n);
  // present[id][bank]: original labels carried in that bank
  std::vector<std::array<LabelSet, 2>> present(n);
  for (int id = 0; id < n; ++id) {
    const NlcExpr& node = ann.node(id);
    const std::vector<int>& kids = ann.children(id);
    switch (node.kind()) {
      case NlcExpr::Kind::kLeaf: {
        const int bank = shifted.count(node.vertex()) ? 1 : 0;
        present[id][bank] = {node.label()};
        out[id] = NlcExpr::Leaf(node.vertex(), node.label() + bank * k);
        break;
      }
      case NlcExpr::Kind::kRelabel: {
        const int c = kids[0];
        LabelMap map;
        for (int bank = 0; bank < 2; ++bank) {
          for (Label l : present[c][bank]) {
            const Label to = MapLabel(node.map(), l);
            present[id][bank].insert(to);
            if (to != l) map.emplace(l + bank * k, to + bank * k);
          }
        }
        out[id] = map.empty() ? *out[c] : NlcExpr::Relabel(map, *out[c]);
        break;
      }
      case NlcExpr::Kind::kUnion: {
        const int l = kids[0];
        const int r = kids[1];
        PairSet pairs;
        for (int bl = 0; bl < 2; ++bl) {
          for (int br = 0; br < 2; ++br) {
            for (Label a : present[l][bl]) {
              for (Label b : present[r][br]) {
                if (connect(bl, br, node.pairs().count({a, b}) > 0)) {
                  pairs.emplace(a + bl * k, b + br * k);
                }
              }
            }
          }
        }
        for (int bank = 0; bank < 2; ++bank) {
          present[id][bank] = present[l][bank];
          present[id][bank].insert(present[r][bank].begin(),
                                   present[r][bank].end());
        }
        out[id] = NlcExpr::Union(std::move(pairs), *out[l], *out[r]);
        break;
      }
    }
  }
  return *out[ann.root()];
}

CwExpr ApplyBankShift(const CwExpr& x, int k, const VertexSet& shifted) {
  const CwAnnotation ann(x);
  const int n = ann.size();
  std::vector<std::optional<CwExpr>> out(n);
  std::vector<std::array<LabelSet, 2>> present(n);
  for (int id = 0; id < n; ++id) {
    const CwExpr& node = ann.node(id);
    const std::vector<int>& kids = ann.children(id);
    switch (node.kind()) {
      case CwExpr::Kind::kLeaf: {
        const int bank = shifted.count(node.vertex()) ? 1 : 0;
        present[id][bank] = {node.label()};
        out[id] = CwExpr::Leaf(node.vertex(), node.label() + bank * k);
        break;
      }
      case CwExpr::Kind::kUnion: {
        const int l = kids[0];
        const int r = kids[1];
        for (int bank = 0; bank < 2; ++bank) {
          present[id][bank] = present[l][bank];
          present[id][bank].insert(present[r][bank].begin(),
                                   present[r][bank].end());
        }
        out[id] = CwExpr::DisjointUnion(*out[l], *out[r]);
        break;
      }
      case CwExpr::Kind::kRelabel: {
        const int c = kids[0];
        CwExpr e = *out[c];
        for (int bank = 0; bank < 2; ++bank) {
          present[id][bank] = present[c][bank];
          if (present[id][bank].erase(node.a())) {
            present[id][bank].insert(node.b());
            e = CwExpr::Relabel(node.a() + bank * k, node.b() + bank * k, e);
          }
        }
        out[id] = e;
        break;
      }
      case CwExpr::Kind::kAddEdges: {
        const int c = kids[0];
        present[id] = present[c];
        CwExpr e = *out[c];
        for (int ba = 0; ba < 2; ++ba) {
          for (int bb = 0; bb < 2; ++bb) {
            if (present[c][ba].count(node.a()) &&
                present[c][bb].count(node.b())) {
              e = CwExpr::AddEdges(node.a() + ba * k, node.b() + bb * k, e);
            }
          }
        }
        out[id] = e;
        break;
      }
    }
  }
  return *out[ann.root()];
}

}  // namespace cwexpr::internal
