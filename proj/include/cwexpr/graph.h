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

#ifndef CWEXPR_GRAPH_H_
#define CWEXPR_GRAPH_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cwexpr {

// Opaque vertex identity. Tokens are nonempty and contain no whitespace and
// none of the characters used by the expression grammar: ( ) , [ ] { } #.
class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::string token);

  const std::string& str() const { return token_; }

  auto operator<=>(const VertexId&) const = default;

  static bool IsValidToken(std::string_view token);

 private:
  std::string token_;
};

namespace literals {
inline VertexId operator""_v(const char* s, std::size_t n) {
  return VertexId(std::string(s, n));
}
}  // namespace literals

// Vertex label. Always >= 1; a width-k context uses labels 1..k.
using Label = int;

using VertexSet = std::set<VertexId>;
using Edge = std::pair<VertexId, VertexId>;

// Finite undirected loop-free graph with a total vertex labeling.
class LabeledGraph {
 public:
  void AddVertex(const VertexId& v, Label label = 1);
  void RemoveVertex(const VertexId& v);
  void SetLabel(const VertexId& v, Label label);

  void AddEdge(const VertexId& u, const VertexId& v);
  void RemoveEdge(const VertexId& u, const VertexId& v);

  bool HasVertex(const VertexId& v) const;
  bool HasEdge(const VertexId& u, const VertexId& v) const;
  Label LabelOf(const VertexId& v) const;
  const VertexSet& Neighbors(const VertexId& v) const;
  int Degree(const VertexId& v) const {
    return static_cast<int>(Neighbors(v).size());
  }

  // Sorted by id.
  std::vector<VertexId> Vertices() const;
  VertexSet VertexIds() const;
  // Each edge once, as (smaller id, larger id), sorted.
  std::vector<Edge> Edges() const;

  std::size_t NumVertices() const { return labels_.size(); }
  std::size_t NumEdges() const { return num_edges_; }
  bool empty() const { return labels_.empty(); }

  const std::map<VertexId, Label>& labels() const { return labels_; }

  // Same vertices and edges, every label set to `label`.
  LabeledGraph Unlabeled(Label label = 1) const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  const VertexSet& NeighborsOrThrow(const VertexId& v) const;

  std::map<VertexId, Label> labels_;
  std::map<VertexId, VertexSet> adjacency_;
  std::size_t num_edges_ = 0;
};

// Equal vertex ids and edges; labels are not compared.
bool SameUnlabeled(const LabeledGraph& a, const LabeledGraph& b);

// Human-readable first difference between two graphs, or "" if equal
// (labels compared only when `compare_labels`).
std::string DescribeDifference(const LabeledGraph& expected,
                               const LabeledGraph& actual,
                               bool compare_labels);

struct Bipartition {
  VertexSet side1;
  VertexSet side2;
};

enum class BipartitionVerdict {
  kValid,
  kCoverageMismatch,  // sides overlap or do not cover exactly the vertices
  kSameSideEdge,
};

BipartitionVerdict ValidateBipartition(const LabeledGraph& g,
                                       const Bipartition& b);

// True iff every member of `set` has the same neighbors outside `set`.
// The empty set is not a module.
bool IsModule(const LabeledGraph& g, const VertexSet& set);

bool IsConnected(const LabeledGraph& g);
bool IsTree(const LabeledGraph& g);

}  // namespace cwexpr

template <>
struct std::hash<cwexpr::VertexId> {
  std::size_t operator()(const cwexpr::VertexId& v) const noexcept {
    return std::hash<std::string>{}(v.str());
  }
};

#endif  // CWEXPR_GRAPH_H_
