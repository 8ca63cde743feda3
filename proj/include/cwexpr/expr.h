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

#ifndef CWEXPR_EXPR_H_
#define CWEXPR_EXPR_H_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "cwexpr/graph.h"

namespace cwexpr {

using LabelPair = std::pair<Label, Label>;
using PairSet = std::set<LabelPair>;
// A relabeling with an explicit finite domain. Labels outside the domain
// are left unchanged.
using LabelMap = std::map<Label, Label>;
using LabelSet = std::set<Label>;

// NLC-width expression:
//   Leaf(v, a)            single vertex v labeled a
//   Union(S, left, right) disjoint union plus every edge {u, w} with u in
//                         left, w in right and (lab(u), lab(w)) in S
//   Relabel(R, child)     every label a in R's domain becomes R(a)
// Immutable; copies share structure.
class NlcExpr {
 public:
  enum class Kind { kLeaf, kUnion, kRelabel };

  static NlcExpr Leaf(VertexId vertex, Label label);
  static NlcExpr Union(PairSet pairs, NlcExpr left, NlcExpr right);
  static NlcExpr Relabel(LabelMap map, NlcExpr child);

  Kind kind() const;
  bool is_leaf() const { return kind() == Kind::kLeaf; }

  const VertexId& vertex() const;  // Leaf
  Label label() const;             // Leaf
  const PairSet& pairs() const;    // Union
  const LabelMap& map() const;     // Relabel
  const NlcExpr& left() const;     // Union
  const NlcExpr& right() const;    // Union
  const NlcExpr& child() const;    // Relabel

  // Structural equality.
  bool operator==(const NlcExpr& other) const;

 private:
  struct Node;
  explicit NlcExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Clique-width expression:
//   Leaf(v, a), DisjointUnion(left, right),
//   AddEdges(a, b, child)  edges between all a- and all b-labeled vertices
//   Relabel(a, b, child)   every a becomes b
// AddEdges and Relabel require a != b.
class CwExpr {
 public:
  enum class Kind { kLeaf, kUnion, kAddEdges, kRelabel };

  static CwExpr Leaf(VertexId vertex, Label label);
  static CwExpr DisjointUnion(CwExpr left, CwExpr right);
  static CwExpr AddEdges(Label a, Label b, CwExpr child);
  static CwExpr Relabel(Label from, Label to, CwExpr child);

  Kind kind() const;
  bool is_leaf() const { return kind() == Kind::kLeaf; }

  const VertexId& vertex() const;  // Leaf
  Label label() const;             // Leaf
  Label a() const;                 // AddEdges, Relabel (source)
  Label b() const;                 // AddEdges, Relabel (target)
  const CwExpr& left() const;      // DisjointUnion
  const CwExpr& right() const;     // DisjointUnion
  const CwExpr& child() const;     // AddEdges, Relabel

  bool operator==(const CwExpr& other) const;

 private:
  struct Node;
  explicit CwExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Counters filled by the NLC evaluator.
struct EvalStats {
  // Number of (unordered) vertex pairs whose adjacency was decided.
  std::int64_t pair_decisions = 0;
};

// Leaf ids in left-to-right order. Throws PreconditionError on duplicates.
std::vector<VertexId> LeafIds(const NlcExpr& x);
std::vector<VertexId> LeafIds(const CwExpr& x);
int LeafCount(const NlcExpr& x);
int LeafCount(const CwExpr& x);

// Throws PreconditionError when leaf ids repeat.
void Validate(const NlcExpr& x);
void Validate(const CwExpr& x);

LabeledGraph Evaluate(const NlcExpr& x, EvalStats* stats = nullptr);
LabeledGraph Evaluate(const CwExpr& x);

// Largest label literal anywhere in the expression.
int WidthOf(const NlcExpr& x);
int WidthOf(const CwExpr& x);

// Labels carried by the vertices of the graph the expression defines.
LabelSet RootLabels(const NlcExpr& x);
LabelSet RootLabels(const CwExpr& x);

// Renames the label literals order-preservingly onto 1..k. NLC relabel
// entries a -> a are dropped. The defined graph changes only by a label
// bijection; WidthOf never increases.
NlcExpr NormalizeLabels(const NlcExpr& x);
CwExpr NormalizeLabels(const CwExpr& x);

// Per-node view of an expression tree. Nodes are numbered in post-order
// (children before parents, left before right), so the root is size() - 1.
// For every node v and leaf u below it, LabelAt(u, v) is the label u carries
// in the graph defined by the subtree at v.
template <typename Expr>
class Annotation {
 public:
  explicit Annotation(const Expr& root);

  int size() const { return static_cast<int>(nodes_.size()); }
  int root() const { return size() - 1; }
  const Expr& node(int id) const { return nodes_[id]; }
  int parent(int id) const { return parent_[id]; }
  const std::vector<int>& children(int id) const { return children_[id]; }

  const std::vector<VertexId>& leaves() const { return leaves_; }
  bool HasLeaf(const VertexId& v) const { return leaf_index_.count(v) > 0; }
  int LeafNode(const VertexId& v) const;

  bool IsBelow(const VertexId& u, int node) const;
  Label LabelAt(const VertexId& u, int node) const;
  std::map<VertexId, Label> LabelsAt(int node) const;

  // The deepest node having both leaves below it. For distinct leaves this
  // is always a binary (union) node.
  int LeastCommonPredecessor(const VertexId& u, const VertexId& v) const;
  // Node ids from the leaf of `u` up to the root.
  std::vector<int> PathToRoot(const VertexId& u) const;

 private:
  int Build(const Expr& x);

  std::vector<Expr> nodes_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  std::vector<VertexId> leaves_;
  std::map<VertexId, int> leaf_index_;  // -> position in leaves_
  std::vector<int> leaf_node_;          // leaf position -> node id
  // node -> (leaf position, label) sorted by leaf position
  std::vector<std::vector<std::pair<int, Label>>> labels_;
};

using NlcAnnotation = Annotation<NlcExpr>;
using CwAnnotation = Annotation<CwExpr>;

inline NlcAnnotation Annotate(const NlcExpr& x) { return NlcAnnotation(x); }
inline CwAnnotation Annotate(const CwExpr& x) { return CwAnnotation(x); }

}  // namespace cwexpr

#endif  // CWEXPR_EXPR_H_
