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

#include "cwexpr/expr.h"

#include <algorithm>
#include <functional>

#include "cwexpr/errors.h"

namespace cwexpr {

struct NlcExpr::Node {
  Kind kind;
  VertexId vertex;
  Label label = 0;
  PairSet pairs;
  LabelMap map;
  std::vector<NlcExpr> children;
};

struct CwExpr::Node {
  Kind kind;
  VertexId vertex;
  Label label = 0;
  Label a = 0;
  Label b = 0;
  std::vector<CwExpr> children;
};

namespace {

void CheckLabel(Label l) {
  if (l < 1) {
    throw PreconditionError("label " + std::to_string(l) + " must be >= 1");
  }
}

[[noreturn]] void WrongKind(const char* accessor) {
  throw std::logic_error(std::string("expression accessor ") + accessor +
                         " used on a node of another kind");
}

}  // namespace

// ---------------------------------------------------------------- NlcExpr

NlcExpr::NlcExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

NlcExpr NlcExpr::Leaf(VertexId vertex, Label label) {
  CheckLabel(label);
  auto node = std::make_shared<Node>();
  node->kind = Kind::kLeaf;
  node->vertex = std::move(vertex);
  node->label = label;
  return NlcExpr(std::move(node));
}

NlcExpr NlcExpr::Union(PairSet pairs, NlcExpr left, NlcExpr right) {
  for (const auto& [a, b] : pairs) {
    CheckLabel(a);
    CheckLabel(b);
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::kUnion;
  node->pairs = std::move(pairs);
  node->children = {std::move(left), std::move(right)};
  return NlcExpr(std::move(node));
}

NlcExpr NlcExpr::Relabel(LabelMap map, NlcExpr child) {
  for (const auto& [a, b] : map) {
    CheckLabel(a);
    CheckLabel(b);
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::kRelabel;
  node->map = std::move(map);
  node->children = {std::move(child)};
  return NlcExpr(std::move(node));
}

NlcExpr::Kind NlcExpr::kind() const { return node_->kind; }

const VertexId& NlcExpr::vertex() const {
  if (kind() != Kind::kLeaf) WrongKind("vertex");
  return node_->vertex;
}
Label NlcExpr::label() const {
  if (kind() != Kind::kLeaf) WrongKind("label");
  return node_->label;
}
const PairSet& NlcExpr::pairs() const {
  if (kind() != Kind::kUnion) WrongKind("pairs");
  return node_->pairs;
}
const LabelMap& NlcExpr::map() const {
  if (kind() != Kind::kRelabel) WrongKind("map");
  return node_->map;
}
const NlcExpr& NlcExpr::left() const {
  if (kind() != Kind::kUnion) WrongKind("left");
  return node_->children[0];
}
const NlcExpr& NlcExpr::right() const {
  if (kind() != Kind::kUnion) WrongKind("right");
  return node_->children[1];
}
const NlcExpr& NlcExpr::child() const {
  if (kind() != Kind::kRelabel) WrongKind("child");
  return node_->children[0];
}

bool NlcExpr::operator==(const NlcExpr& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::kLeaf:
      return a.vertex == b.vertex && a.label == b.label;
    case Kind::kUnion:
      return a.pairs == b.pairs && a.children[0] == b.children[0] &&
             a.children[1] == b.children[1];
    case Kind::kRelabel:
      return a.map == b.map && a.children[0] == b.children[0];
  }
  return false;
}

// ----------------------------------------------------------------- CwExpr

CwExpr::CwExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

CwExpr CwExpr::Leaf(VertexId vertex, Label label) {
  CheckLabel(label);
  auto node = std::make_shared<Node>();
  node->kind = Kind::kLeaf;
  node->vertex = std::move(vertex);
  node->label = label;
  return CwExpr(std::move(node));
}

CwExpr CwExpr::DisjointUnion(CwExpr left, CwExpr right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kUnion;
  node->children = {std::move(left), std::move(right)};
  return CwExpr(std::move(node));
}

CwExpr CwExpr::AddEdges(Label a, Label b, CwExpr child) {
  CheckLabel(a);
  CheckLabel(b);
  if (a == b) throw PreconditionError("eta needs two distinct labels");
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAddEdges;
  node->a = a;
  node->b = b;
  node->children = {std::move(child)};
  return CwExpr(std::move(node));
}

CwExpr CwExpr::Relabel(Label from, Label to, CwExpr child) {
  CheckLabel(from);
  CheckLabel(to);
  if (from == to) throw PreconditionError("rho needs two distinct labels");
  auto node = std::make_shared<Node>();
  node->kind = Kind::kRelabel;
  node->a = from;
  node->b = to;
  node->children = {std::move(child)};
  return CwExpr(std::move(node));
}

CwExpr::Kind CwExpr::kind() const { return node_->kind; }

const VertexId& CwExpr::vertex() const {
  if (kind() != Kind::kLeaf) WrongKind("vertex");
  return node_->vertex;
}
Label CwExpr::label() const {
  if (kind() != Kind::kLeaf) WrongKind("label");
  return node_->label;
}
Label CwExpr::a() const {
  if (kind() != Kind::kAddEdges && kind() != Kind::kRelabel) WrongKind("a");
  return node_->a;
}
Label CwExpr::b() const {
  if (kind() != Kind::kAddEdges && kind() != Kind::kRelabel) WrongKind("b");
  return node_->b;
}
const CwExpr& CwExpr::left() const {
  if (kind() != Kind::kUnion) WrongKind("left");
  return node_->children[0];
}
const CwExpr& CwExpr::right() const {
  if (kind() != Kind::kUnion) WrongKind("right");
  return node_->children[1];
}
const CwExpr& CwExpr::child() const {
  if (kind() != Kind::kAddEdges && kind() != Kind::kRelabel) {
    WrongKind("child");
  }
  return node_->children[0];
}

bool CwExpr::operator==(const CwExpr& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::kLeaf:
      return a.vertex == b.vertex && a.label == b.label;
    case Kind::kUnion:
      return a.children[0] == b.children[0] && a.children[1] == b.children[1];
    case Kind::kAddEdges:
    case Kind::kRelabel:
      return a.a == b.a && a.b == b.b && a.children[0] == b.children[0];
  }
  return false;
}

// ------------------------------------------------------------- traversal

namespace {

void CollectLeaves(const NlcExpr& x, std::vector<VertexId>& out) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf:
      out.push_back(x.vertex());
      return;
    case NlcExpr::Kind::kUnion:
      CollectLeaves(x.left(), out);
      CollectLeaves(x.right(), out);
      return;
    case NlcExpr::Kind::kRelabel:
      CollectLeaves(x.child(), out);
      return;
  }
}

void CollectLeaves(const CwExpr& x, std::vector<VertexId>& out) {
  switch (x.kind()) {
    case CwExpr::Kind::kLeaf:
      out.push_back(x.vertex());
      return;
    case CwExpr::Kind::kUnion:
      CollectLeaves(x.left(), out);
      CollectLeaves(x.right(), out);
      return;
    default:
      CollectLeaves(x.child(), out);
      return;
  }
}

void RequireDistinct(const std::vector<VertexId>& ids) {
  std::vector<VertexId> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw PreconditionError("duplicate leaf id " + dup->str());
  }
}

// Post-order evaluation over leaf indices; `label` holds each vertex's label
// at the node currently being processed.
struct Evaluator {
  std::map<VertexId, int> index;
  std::vector<Label> label;
  std::vector<std::pair<int, int>> edges;
  EvalStats* stats = nullptr;

  std::vector<int> Run(const NlcExpr& x) {
    switch (x.kind()) {
      case NlcExpr::Kind::kLeaf: {
        const int i = index.at(x.vertex());
        label[i] = x.label();
        return {i};
      }
      case NlcExpr::Kind::kUnion: {
        std::vector<int> left = Run(x.left());
        std::vector<int> right = Run(x.right());
        const PairSet& pairs = x.pairs();
        for (int u : left) {
          for (int w : right) {
            if (stats) ++stats->pair_decisions;
            if (pairs.count({label[u], label[w]})) edges.emplace_back(u, w);
          }
        }
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
      case NlcExpr::Kind::kRelabel: {
        std::vector<int> members = Run(x.child());
        const LabelMap& map = x.map();
        for (int u : members) {
          auto it = map.find(label[u]);
          if (it != map.end()) label[u] = it->second;
        }
        return members;
      }
    }
    return {};
  }

  std::vector<int> Run(const CwExpr& x) {
    switch (x.kind()) {
      case CwExpr::Kind::kLeaf: {
        const int i = index.at(x.vertex());
        label[i] = x.label();
        return {i};
      }
      case CwExpr::Kind::kUnion: {
        std::vector<int> left = Run(x.left());
        std::vector<int> right = Run(x.right());
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
      case CwExpr::Kind::kAddEdges: {
        std::vector<int> members = Run(x.child());
        std::vector<int> as, bs;
        for (int u : members) {
          if (label[u] == x.a()) as.push_back(u);
          if (label[u] == x.b()) bs.push_back(u);
        }
        for (int u : as) {
          for (int w : bs) edges.emplace_back(u, w);
        }
        return members;
      }
      case CwExpr::Kind::kRelabel: {
        std::vector<int> members = Run(x.child());
        for (int u : members) {
          if (label[u] == x.a()) label[u] = x.b();
        }
        return members;
      }
    }
    return {};
  }
};

template <typename Expr>
LabeledGraph EvaluateImpl(const Expr& x, EvalStats* stats) {
  const std::vector<VertexId> ids = LeafIds(x);
  Evaluator ev;
  ev.stats = stats;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ev.index.emplace(ids[i], static_cast<int>(i));
  }
  ev.label.assign(ids.size(), 0);
  ev.Run(x);
  LabeledGraph g;
  for (std::size_t i = 0; i < ids.size(); ++i) g.AddVertex(ids[i], ev.label[i]);
  for (const auto& [u, w] : ev.edges) g.AddEdge(ids[u], ids[w]);
  return g;
}

void CollectLabels(const NlcExpr& x, LabelSet& out, bool skip_identity) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf:
      out.insert(x.label());
      return;
    case NlcExpr::Kind::kUnion:
      for (const auto& [a, b] : x.pairs()) {
        out.insert(a);
        out.insert(b);
      }
      CollectLabels(x.left(), out, skip_identity);
      CollectLabels(x.right(), out, skip_identity);
      return;
    case NlcExpr::Kind::kRelabel:
      for (const auto& [a, b] : x.map()) {
        if (skip_identity && a == b) continue;
        out.insert(a);
        out.insert(b);
      }
      CollectLabels(x.child(), out, skip_identity);
      return;
  }
}

void CollectLabels(const CwExpr& x, LabelSet& out) {
  switch (x.kind()) {
    case CwExpr::Kind::kLeaf:
      out.insert(x.label());
      return;
    case CwExpr::Kind::kUnion:
      CollectLabels(x.left(), out);
      CollectLabels(x.right(), out);
      return;
    default:
      out.insert(x.a());
      out.insert(x.b());
      CollectLabels(x.child(), out);
      return;
  }
}

std::map<Label, Label> Compaction(const LabelSet& used) {
  std::map<Label, Label> rename;
  Label next = 1;
  for (Label l : used) rename[l] = next++;
  return rename;
}

NlcExpr Rename(const NlcExpr& x, const std::map<Label, Label>& r) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf:
      return NlcExpr::Leaf(x.vertex(), r.at(x.label()));
    case NlcExpr::Kind::kUnion: {
      PairSet pairs;
      for (const auto& [a, b] : x.pairs()) pairs.emplace(r.at(a), r.at(b));
      return NlcExpr::Union(std::move(pairs), Rename(x.left(), r),
                            Rename(x.right(), r));
    }
    case NlcExpr::Kind::kRelabel: {
      LabelMap map;
      for (const auto& [a, b] : x.map()) {
        if (a != b) map.emplace(r.at(a), r.at(b));
      }
      return NlcExpr::Relabel(std::move(map), Rename(x.child(), r));
    }
  }
  return x;
}

CwExpr Rename(const CwExpr& x, const std::map<Label, Label>& r) {
  switch (x.kind()) {
    case CwExpr::Kind::kLeaf:
      return CwExpr::Leaf(x.vertex(), r.at(x.label()));
    case CwExpr::Kind::kUnion:
      return CwExpr::DisjointUnion(Rename(x.left(), r), Rename(x.right(), r));
    case CwExpr::Kind::kAddEdges:
      return CwExpr::AddEdges(r.at(x.a()), r.at(x.b()), Rename(x.child(), r));
    case CwExpr::Kind::kRelabel:
      return CwExpr::Relabel(r.at(x.a()), r.at(x.b()), Rename(x.child(), r));
  }
  return x;
}

}  // namespace

std::vector<VertexId> LeafIds(const NlcExpr& x) {
  std::vector<VertexId> out;
  CollectLeaves(x, out);
  RequireDistinct(out);
  return out;
}

std::vector<VertexId> LeafIds(const CwExpr& x) {
  std::vector<VertexId> out;
  CollectLeaves(x, out);
  RequireDistinct(out);
  return out;
}

int LeafCount(const NlcExpr& x) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf:
      return 1;
    case NlcExpr::Kind::kUnion:
      return LeafCount(x.left()) + LeafCount(x.right());
    case NlcExpr::Kind::kRelabel:
      return LeafCount(x.child());
  }
  return 0;
}

int LeafCount(const CwExpr& x) {
  switch (x.kind()) {
    case CwExpr::Kind::kLeaf:
      return 1;
    case CwExpr::Kind::kUnion:
      return LeafCount(x.left()) + LeafCount(x.right());
    default:
      return LeafCount(x.child());
  }
}

void Validate(const NlcExpr& x) { LeafIds(x); }
void Validate(const CwExpr& x) { LeafIds(x); }

LabeledGraph Evaluate(const NlcExpr& x, EvalStats* stats) {
  return EvaluateImpl(x, stats);
}

LabeledGraph Evaluate(const CwExpr& x) { return EvaluateImpl(x, nullptr); }

int WidthOf(const NlcExpr& x) {
  LabelSet used;
  CollectLabels(x, used, /*skip_identity=*/false);
  return *used.rbegin();
}

int WidthOf(const CwExpr& x) {
  LabelSet used;
  CollectLabels(x, used);
  return *used.rbegin();
}

LabelSet RootLabels(const NlcExpr& x) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf:
      return {x.label()};
    case NlcExpr::Kind::kUnion: {
      LabelSet out = RootLabels(x.left());
      LabelSet right = RootLabels(x.right());
      out.insert(right.begin(), right.end());
      return out;
    }
    case NlcExpr::Kind::kRelabel: {
      LabelSet out;
      for (Label l : RootLabels(x.child())) {
        auto it = x.map().find(l);
        out.insert(it == x.map().end() ? l : it->second);
      }
      return out;
    }
  }
  return {};
}

LabelSet RootLabels(const CwExpr& x) {
  switch (x.kind()) {
    case CwExpr::Kind::kLeaf:
      return {x.label()};
    case CwExpr::Kind::kUnion: {
      LabelSet out = RootLabels(x.left());
      LabelSet right = RootLabels(x.right());
      out.insert(right.begin(), right.end());
      return out;
    }
    case CwExpr::Kind::kAddEdges:
      return RootLabels(x.child());
    case CwExpr::Kind::kRelabel: {
      LabelSet out = RootLabels(x.child());
      if (out.erase(x.a())) out.insert(x.b());
      return out;
    }
  }
  return {};
}

NlcExpr NormalizeLabels(const NlcExpr& x) {
  LabelSet used;
  CollectLabels(x, used, /*skip_identity=*/true);
  return Rename(x, Compaction(used));
}

CwExpr NormalizeLabels(const CwExpr& x) {
  LabelSet used;
  CollectLabels(x, used);
  return Rename(x, Compaction(used));
}

// ------------------------------------------------------------ Annotation

namespace {

std::vector<const NlcExpr*> Children(const NlcExpr& x) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf:
      return {};
    case NlcExpr::Kind::kUnion:
      return {&x.left(), &x.right()};
    case NlcExpr::Kind::kRelabel:
      return {&x.child()};
  }
  return {};
}

std::vector<const CwExpr*> Children(const CwExpr& x) {
  switch (x.kind()) {
    case CwExpr::Kind::kLeaf:
      return {};
    case CwExpr::Kind::kUnion:
      return {&x.left(), &x.right()};
    default:
      return {&x.child()};
  }
}

Label ApplyNode(const NlcExpr& x, Label l) {
  if (x.kind() != NlcExpr::Kind::kRelabel) return l;
  auto it = x.map().find(l);
  return it == x.map().end() ? l : it->second;
}

Label ApplyNode(const CwExpr& x, Label l) {
  if (x.kind() == CwExpr::Kind::kRelabel && l == x.a()) return x.b();
  return l;
}

}  // namespace

template <typename Expr>
Annotation<Expr>::Annotation(const Expr& x) {
  Build(x);
  for (int id = 0; id < size(); ++id) {
    for (int c : children_[id]) parent_[c] = id;
  }
  depth_.assign(size(), 0);
  for (int id = root() - 1; id >= 0; --id) {
    depth_[id] = depth_[parent_[id]] + 1;
  }
}

template <typename Expr>
int Annotation<Expr>::Build(const Expr& x) {
  std::vector<int> kids;
  for (const Expr* c : Children(x)) kids.push_back(Build(*c));
  const int id = size();
  nodes_.push_back(x);
  parent_.push_back(-1);
  children_.push_back(kids);
  std::vector<std::pair<int, Label>> labels;
  if (kids.empty()) {
    const int pos = static_cast<int>(leaves_.size());
    if (!leaf_index_.emplace(x.vertex(), pos).second) {
      throw PreconditionError("duplicate leaf id " + x.vertex().str());
    }
    leaves_.push_back(x.vertex());
    leaf_node_.push_back(id);
    labels.emplace_back(pos, x.label());
  } else {
    for (int c : kids) {
      for (const auto& [pos, l] : labels_[c]) {
        labels.emplace_back(pos, ApplyNode(x, l));
      }
    }
  }
  labels_.push_back(std::move(labels));
  return id;
}

template <typename Expr>
int Annotation<Expr>::LeafNode(const VertexId& v) const {
  auto it = leaf_index_.find(v);
  if (it == leaf_index_.end()) {
    throw PreconditionError("vertex " + v.str() + " is not a leaf");
  }
  return leaf_node_[it->second];
}

template <typename Expr>
bool Annotation<Expr>::IsBelow(const VertexId& u, int node) const {
  int n = LeafNode(u);
  while (n != -1 && n != node) n = parent_[n];
  return n == node;
}

template <typename Expr>
Label Annotation<Expr>::LabelAt(const VertexId& u, int node) const {
  auto it = leaf_index_.find(u);
  if (it == leaf_index_.end()) {
    throw PreconditionError("vertex " + u.str() + " is not a leaf");
  }
  const auto& labels = labels_[node];
  auto pos = std::lower_bound(
      labels.begin(), labels.end(), std::make_pair(it->second, 0));
  if (pos == labels.end() || pos->first != it->second) {
    throw PreconditionError("vertex " + u.str() + " is not below node " +
                            std::to_string(node));
  }
  return pos->second;
}

template <typename Expr>
std::map<VertexId, Label> Annotation<Expr>::LabelsAt(int node) const {
  std::map<VertexId, Label> out;
  for (const auto& [pos, l] : labels_[node]) out.emplace(leaves_[pos], l);
  return out;
}

template <typename Expr>
int Annotation<Expr>::LeastCommonPredecessor(const VertexId& u,
                                             const VertexId& v) const {
  int a = LeafNode(u);
  int b = LeafNode(v);
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

template <typename Expr>
std::vector<int> Annotation<Expr>::PathToRoot(const VertexId& u) const {
  std::vector<int> out;
  for (int n = LeafNode(u); n != -1; n = parent_[n]) out.push_back(n);
  return out;
}

template class Annotation<NlcExpr>;
template class Annotation<CwExpr>;

}  // namespace cwexpr
