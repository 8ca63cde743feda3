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

#include "cwexpr/graph.h"

#include <algorithm>
#include <deque>

#include "cwexpr/errors.h"

namespace cwexpr {

VertexId::VertexId(std::string token) : token_(std::move(token)) {
  if (!IsValidToken(token_)) {
    throw PreconditionError("invalid vertex id '" + token_ + "'");
  }
}

bool VertexId::IsValidToken(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    switch (c) {
      case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
      case '(': case ')': case ',': case '[': case ']': case '{': case '}':
      case '#':
        return false;
      default:
        break;
    }
  }
  return true;
}

void LabeledGraph::AddVertex(const VertexId& v, Label label) {
  if (label < 1) {
    throw PreconditionError("label of vertex " + v.str() + " must be >= 1");
  }
  if (!labels_.emplace(v, label).second) {
    throw PreconditionError("duplicate vertex " + v.str());
  }
  adjacency_.emplace(v, VertexSet{});
}

void LabeledGraph::RemoveVertex(const VertexId& v) {
  const VertexSet neighbors = NeighborsOrThrow(v);
  for (const VertexId& w : neighbors) adjacency_[w].erase(v);
  num_edges_ -= neighbors.size();
  adjacency_.erase(v);
  labels_.erase(v);
}

void LabeledGraph::SetLabel(const VertexId& v, Label label) {
  auto it = labels_.find(v);
  if (it == labels_.end()) throw PreconditionError("no vertex " + v.str());
  if (label < 1) throw PreconditionError("labels must be >= 1");
  it->second = label;
}

void LabeledGraph::AddEdge(const VertexId& u, const VertexId& v) {
  if (u == v) throw PreconditionError("self-loop at " + u.str());
  NeighborsOrThrow(u);
  NeighborsOrThrow(v);
  if (adjacency_[u].insert(v).second) {
    adjacency_[v].insert(u);
    ++num_edges_;
  }
}

void LabeledGraph::RemoveEdge(const VertexId& u, const VertexId& v) {
  NeighborsOrThrow(u);
  NeighborsOrThrow(v);
  if (adjacency_[u].erase(v) > 0) {
    adjacency_[v].erase(u);
    --num_edges_;
  }
}

bool LabeledGraph::HasVertex(const VertexId& v) const {
  return labels_.count(v) > 0;
}

bool LabeledGraph::HasEdge(const VertexId& u, const VertexId& v) const {
  auto it = adjacency_.find(u);
  return it != adjacency_.end() && it->second.count(v) > 0;
}

Label LabeledGraph::LabelOf(const VertexId& v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) throw PreconditionError("no vertex " + v.str());
  return it->second;
}

const VertexSet& LabeledGraph::Neighbors(const VertexId& v) const {
  return NeighborsOrThrow(v);
}

const VertexSet& LabeledGraph::NeighborsOrThrow(const VertexId& v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw PreconditionError("no vertex " + v.str());
  return it->second;
}

std::vector<VertexId> LabeledGraph::Vertices() const {
  std::vector<VertexId> out;
  out.reserve(labels_.size());
  for (const auto& [v, label] : labels_) out.push_back(v);
  return out;
}

VertexSet LabeledGraph::VertexIds() const {
  VertexSet out;
  for (const auto& [v, label] : labels_) out.insert(out.end(), v);
  return out;
}

std::vector<Edge> LabeledGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (const auto& [u, nbrs] : adjacency_) {
    for (auto it = nbrs.upper_bound(u); it != nbrs.end(); ++it) {
      out.emplace_back(u, *it);
    }
  }
  return out;
}

LabeledGraph LabeledGraph::Unlabeled(Label label) const {
  LabeledGraph out = *this;
  for (auto& [v, l] : out.labels_) l = label;
  return out;
}

bool SameUnlabeled(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.NumVertices() != b.NumVertices() || a.NumEdges() != b.NumEdges()) {
    return false;
  }
  return a.Unlabeled() == b.Unlabeled();
}

std::string DescribeDifference(const LabeledGraph& expected,
                               const LabeledGraph& actual,
                               bool compare_labels) {
  for (const VertexId& v : expected.Vertices()) {
    if (!actual.HasVertex(v)) return "missing vertex " + v.str();
    if (compare_labels && actual.LabelOf(v) != expected.LabelOf(v)) {
      return "label of " + v.str() + " is " +
             std::to_string(actual.LabelOf(v)) + ", expected " +
             std::to_string(expected.LabelOf(v));
    }
  }
  for (const VertexId& v : actual.Vertices()) {
    if (!expected.HasVertex(v)) return "unexpected vertex " + v.str();
  }
  for (const auto& [u, v] : expected.Edges()) {
    if (!actual.HasEdge(u, v)) {
      return "missing edge " + u.str() + "-" + v.str();
    }
  }
  for (const auto& [u, v] : actual.Edges()) {
    if (!expected.HasEdge(u, v)) {
      return "unexpected edge " + u.str() + "-" + v.str();
    }
  }
  return "";
}

BipartitionVerdict ValidateBipartition(const LabeledGraph& g,
                                       const Bipartition& b) {
  if (b.side1.size() + b.side2.size() != g.NumVertices()) {
    return BipartitionVerdict::kCoverageMismatch;
  }
  for (const VertexId& v : b.side1) {
    if (!g.HasVertex(v) || b.side2.count(v)) {
      return BipartitionVerdict::kCoverageMismatch;
    }
  }
  for (const VertexId& v : b.side2) {
    if (!g.HasVertex(v)) return BipartitionVerdict::kCoverageMismatch;
  }
  for (const auto& [u, v] : g.Edges()) {
    if (b.side1.count(u) == b.side1.count(v)) {
      return BipartitionVerdict::kSameSideEdge;
    }
  }
  return BipartitionVerdict::kValid;
}

bool IsModule(const LabeledGraph& g, const VertexSet& set) {
  if (set.empty()) return false;
  for (const VertexId& v : set) {
    if (!g.HasVertex(v)) return false;
  }
  auto outside = [&](const VertexId& v) {
    VertexSet out;
    for (const VertexId& w : g.Neighbors(v)) {
      if (!set.count(w)) out.insert(w);
    }
    return out;
  };
  const VertexSet reference = outside(*set.begin());
  return std::all_of(set.begin(), set.end(), [&](const VertexId& v) {
    return outside(v) == reference;
  });
}

bool IsConnected(const LabeledGraph& g) {
  if (g.empty()) return true;
  VertexSet seen;
  std::deque<VertexId> queue;
  const VertexId start = g.labels().begin()->first;
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const VertexId& w : g.Neighbors(v)) {
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size() == g.NumVertices();
}

bool IsTree(const LabeledGraph& g) {
  return !g.empty() && g.NumEdges() + 1 == g.NumVertices() && IsConnected(g);
}

}  // namespace cwexpr
