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

#include "cwexpr/isomorphism.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cwexpr/errors.h"

namespace cwexpr {
namespace {

struct Indexed {
  std::vector<VertexId> ids;
  std::vector<std::uint32_t> adj;
  std::vector<Label> labels;
  std::vector<int> degree;
};

Indexed Index(const LabeledGraph& g) {
  Indexed out;
  out.ids = g.Vertices();
  const int n = static_cast<int>(out.ids.size());
  out.adj.assign(n, 0);
  out.degree.assign(n, 0);
  std::map<VertexId, int> pos;
  for (int i = 0; i < n; ++i) {
    pos[out.ids[i]] = i;
    out.labels.push_back(g.LabelOf(out.ids[i]));
  }
  for (const auto& [u, v] : g.Edges()) {
    out.adj[pos[u]] |= 1u << pos[v];
    out.adj[pos[v]] |= 1u << pos[u];
  }
  for (int i = 0; i < n; ++i) out.degree[i] = __builtin_popcount(out.adj[i]);
  return out;
}

class Matcher {
 public:
  Matcher(const Indexed& a, const Indexed& b, bool respect_labels)
      : a_(a), b_(b), respect_labels_(respect_labels),
        map_(a.ids.size(), -1) {}

  bool Run() { return Extend(0, 0); }
  const std::vector<int>& mapping() const { return map_; }

 private:
  bool Compatible(int u, int v) const {
    if (a_.degree[u] != b_.degree[v]) return false;
    if (respect_labels_ && a_.labels[u] != b_.labels[v]) return false;
    for (int w = 0; w < u; ++w) {
      const bool ea = (a_.adj[u] >> w) & 1u;
      const bool eb = (b_.adj[v] >> map_[w]) & 1u;
      if (ea != eb) return false;
    }
    return true;
  }

  bool Extend(int u, std::uint32_t used) {
    if (u == static_cast<int>(map_.size())) return true;
    for (int v = 0; v < static_cast<int>(map_.size()); ++v) {
      if ((used >> v) & 1u) continue;
      if (!Compatible(u, v)) continue;
      map_[u] = v;
      if (Extend(u + 1, used | (1u << v))) return true;
    }
    map_[u] = -1;
    return false;
  }

  const Indexed& a_;
  const Indexed& b_;
  bool respect_labels_;
  std::vector<int> map_;
};

}  // namespace

std::optional<std::map<VertexId, VertexId>> FindIsomorphism(
    const LabeledGraph& g1, const LabeledGraph& g2, bool respect_labels) {
  if (static_cast<int>(g1.NumVertices()) > kIsomorphismVertexCap ||
      static_cast<int>(g2.NumVertices()) > kIsomorphismVertexCap) {
    throw LimitError("isomorphism search is capped at " +
                     std::to_string(kIsomorphismVertexCap) + " vertices");
  }
  if (g1.NumVertices() != g2.NumVertices() ||
      g1.NumEdges() != g2.NumEdges()) {
    return std::nullopt;
  }
  const Indexed a = Index(g1);
  const Indexed b = Index(g2);
  std::vector<int> da = a.degree, db = b.degree;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  if (respect_labels) {
    std::vector<Label> la = a.labels, lb = b.labels;
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return std::nullopt;
  }
  Matcher matcher(a, b, respect_labels);
  if (!matcher.Run()) return std::nullopt;
  std::map<VertexId, VertexId> out;
  for (std::size_t i = 0; i < a.ids.size(); ++i) {
    out.emplace(a.ids[i], b.ids[matcher.mapping()[i]]);
  }
  return out;
}

}  // namespace cwexpr
