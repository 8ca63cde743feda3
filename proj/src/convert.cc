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

#include "cwexpr/convert.h"

#include <vector>

namespace cwexpr {
namespace {

// Labels present at every node of a CW expression, in annotation order.
std::vector<LabelSet> NodeLabelSets(const CwAnnotation& ann) {
  std::vector<LabelSet> sets(ann.size());
  for (int id = 0; id < ann.size(); ++id) {
    const CwExpr& x = ann.node(id);
    switch (x.kind()) {
      case CwExpr::Kind::kLeaf:
        sets[id] = {x.label()};
        break;
      case CwExpr::Kind::kUnion:
        sets[id] = sets[ann.children(id)[0]];
        sets[id].insert(sets[ann.children(id)[1]].begin(),
                        sets[ann.children(id)[1]].end());
        break;
      case CwExpr::Kind::kAddEdges:
        sets[id] = sets[ann.children(id)[0]];
        break;
      case CwExpr::Kind::kRelabel:
        sets[id] = sets[ann.children(id)[0]];
        if (sets[id].erase(x.a())) sets[id].insert(x.b());
        break;
    }
  }
  return sets;
}

class CwToNlcConverter {
 public:
  explicit CwToNlcConverter(const CwExpr& x)
      : ann_(x), labels_(NodeLabelSets(ann_)) {}

  NlcExpr Run() { return Convert(ann_.root(), {}); }

 private:
  // `pending` is a symmetric relation on the labels present at `id`: pairs
  // that AddEdges operators above this node will connect.
  NlcExpr Convert(int id, PairSet pending) {
    const CwExpr& x = ann_.node(id);
    const std::vector<int>& kids = ann_.children(id);
    switch (x.kind()) {
      case CwExpr::Kind::kLeaf:
        return NlcExpr::Leaf(x.vertex(), x.label());
      case CwExpr::Kind::kAddEdges:
        if (labels_[id].count(x.a()) && labels_[id].count(x.b())) {
          pending.emplace(x.a(), x.b());
          pending.emplace(x.b(), x.a());
        }
        return Convert(kids[0], std::move(pending));
      case CwExpr::Kind::kRelabel: {
        const LabelSet& below = labels_[kids[0]];
        const auto image = [&](Label l) { return l == x.a() ? x.b() : l; };
        PairSet inner;
        for (Label s : below) {
          for (Label t : below) {
            if (s != t && pending.count({image(s), image(t)})) {
              inner.emplace(s, t);
            }
          }
        }
        NlcExpr child = Convert(kids[0], std::move(inner));
        if (!below.count(x.a())) return child;
        return NlcExpr::Relabel({{x.a(), x.b()}}, std::move(child));
      }
      case CwExpr::Kind::kUnion: {
        const LabelSet& left = labels_[kids[0]];
        const LabelSet& right = labels_[kids[1]];
        PairSet across, in_left, in_right;
        for (const auto& [a, b] : pending) {
          if (left.count(a) && right.count(b)) across.emplace(a, b);
          if (left.count(a) && left.count(b)) in_left.emplace(a, b);
          if (right.count(a) && right.count(b)) in_right.emplace(a, b);
        }
        return NlcExpr::Union(std::move(across),
                              Convert(kids[0], std::move(in_left)),
                              Convert(kids[1], std::move(in_right)));
      }
    }
    return NlcExpr::Leaf(VertexId("unreachable"), 1);
  }

  CwAnnotation ann_;
  std::vector<LabelSet> labels_;
};

struct Converted {
  CwExpr expr;
  LabelSet labels;
};

Converted ToCw(const NlcExpr& x, int k) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf:
      return {CwExpr::Leaf(x.vertex(), x.label()), {x.label()}};
    case NlcExpr::Kind::kUnion: {
      Converted left = ToCw(x.left(), k);
      Converted right = ToCw(x.right(), k);
      CwExpr shifted = right.expr;
      for (Label l : right.labels) shifted = CwExpr::Relabel(l, l + k, shifted);
      CwExpr e = CwExpr::DisjointUnion(left.expr, shifted);
      for (const auto& [a, b] : x.pairs()) {
        if (left.labels.count(a) && right.labels.count(b)) {
          e = CwExpr::AddEdges(a, b + k, e);
        }
      }
      for (Label l : right.labels) e = CwExpr::Relabel(l + k, l, e);
      left.labels.insert(right.labels.begin(), right.labels.end());
      return {e, left.labels};
    }
    case NlcExpr::Kind::kRelabel: {
      Converted child = ToCw(x.child(), k);
      std::vector<std::pair<Label, Label>> moves;
      LabelSet out;
      for (Label l : child.labels) {
        auto it = x.map().find(l);
        const Label to = it == x.map().end() ? l : it->second;
        if (to != l) moves.emplace_back(l, to);
        out.insert(to);
      }
      CwExpr e = child.expr;
      if (moves.size() == 1) {
        e = CwExpr::Relabel(moves[0].first, moves[0].second, e);
      } else if (!moves.empty()) {
        // Park every moving label in the upper bank, then fold back, so a
        // label that is both source and target is never merged early.
        LabelSet targets;
        for (const auto& [from, to] : moves) {
          e = CwExpr::Relabel(from, to + k, e);
          targets.insert(to);
        }
        for (Label t : targets) e = CwExpr::Relabel(t + k, t, e);
      }
      return {e, out};
    }
  }
  return {CwExpr::Leaf(VertexId("unreachable"), 1), {}};
}

}  // namespace

NlcExpr CwToNlc(const CwExpr& x) { return CwToNlcConverter(x).Run(); }

CwExpr NlcToCw(const NlcExpr& x) { return ToCw(x, WidthOf(x)).expr; }

}  // namespace cwexpr
