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

#include "cwexpr/width_oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "cwexpr/errors.h"

namespace cwexpr {
namespace {

using Mask = std::uint32_t;

int Count(Mask m) { return std::popcount(m); }
Mask LowBit(Mask m) { return m & (~m + 1); }
int Index(Mask single) { return std::countr_zero(single); }

// Vertex ids in sorted order with bitmask adjacency.
struct Indexed {
  explicit Indexed(const LabeledGraph& g) : ids(g.Vertices()) {
    n = static_cast<int>(ids.size());
    full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::map<VertexId, int> pos;
    for (int i = 0; i < n; ++i) pos.emplace(ids[i], i);
    adj.assign(n, 0);
    for (const auto& [u, v] : g.Edges()) {
      adj[pos[u]] |= Mask{1} << pos[v];
      adj[pos[v]] |= Mask{1} << pos[u];
    }
  }

  // Vertices of s grouped by their neighborhood outside s, ordered by
  // lowest member.
  std::vector<Mask> Twins(Mask s) const {
    std::vector<Mask> classes;
    std::vector<Mask> keys;
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = Index(LowBit(rest));
      const Mask key = adj[v] & ~s & full;
      auto it = std::find(keys.begin(), keys.end(), key);
      if (it == keys.end()) {
        keys.push_back(key);
        classes.push_back(Mask{1} << v);
      } else {
        classes[it - keys.begin()] |= Mask{1} << v;
      }
    }
    return classes;
  }

  bool Complete(Mask a, Mask b) const {
    for (Mask rest = a; rest; rest &= rest - 1) {
      if ((adj[Index(LowBit(rest))] & b) != b) return false;
    }
    return true;
  }

  bool AnyEdge(Mask a, Mask b) const {
    for (Mask rest = a; rest; rest &= rest - 1) {
      if (adj[Index(LowBit(rest))] & b) return true;
    }
    return false;
  }

  int n = 0;
  Mask full = 0;
  std::vector<VertexId> ids;
  std::vector<Mask> adj;
};

void CheckCap(const LabeledGraph& g, WidthParam param,
              const OracleLimits& limits) {
  const int cap = VertexCap(param, limits);
  if (static_cast<int>(g.NumVertices()) > cap) {
    throw LimitError(std::to_string(g.NumVertices()) +
                     " vertices exceed the exact-width cap of " +
                     std::to_string(cap));
  }
  if (g.NumVertices() == 0) {
    throw PreconditionError("width of the empty graph is undefined");
  }
}

int IndexOfClassContaining(const std::vector<Mask>& classes, Mask v) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] & v) return static_cast<int>(i);
  }
  return -1;
}

// ------------------------------------------------------------- NLC-width
//
// The labels at the root of an NLC sub-expression for G[S] can be merged
// down to the classes of Tw(S) (vertices with equal neighborhoods outside
// S), and no expression can do with fewer. Joining S1 and S2 then needs,
// for each class C of Tw(S), max(#Tw(S1) classes in C, #Tw(S2) classes in
// C) labels: classes of both sides that end in C may share a label, all
// others must differ. Edges across the union are always expressible
// because a Tw(S1) class has a uniform neighborhood in S2.
class NlcSolver {
 public:
  explicit NlcSolver(const Indexed& g) : g_(g) {
    twins_.resize(std::size_t{1} << g_.n);
    for (Mask s = 1; s <= g_.full && s != 0; ++s) twins_[s] = g_.Twins(s);
  }

  std::optional<NlcExpr> Decide(int k) {
    split_.assign(std::size_t{1} << g_.n, 0);
    ok_.assign(std::size_t{1} << g_.n, false);
    for (Mask s = 1; s <= g_.full && s != 0; ++s) {
      if (Count(s) == 1) {
        ok_[s] = true;
        continue;
      }
      if (static_cast<int>(twins_[s].size()) > k) continue;
      const Mask low = LowBit(s);
      const Mask rest = s ^ low;
      // Submasks of `rest` in decreasing order; the first hit is kept.
      for (Mask t = (rest - 1) & rest;; t = (t - 1) & rest) {
        const Mask s1 = low | t;
        const Mask s2 = s ^ s1;
        if (ok_[s1] && ok_[s2] && Cost(s, s1, s2) <= k) {
          ok_[s] = true;
          split_[s] = s1;
          break;
        }
        if (t == 0) break;
      }
    }
    if (!ok_[g_.full]) return std::nullopt;
    return Build(g_.full, {1});
  }

 private:
  int Cost(Mask s, Mask s1, Mask s2) const {
    const std::vector<Mask>& outer = twins_[s];
    std::vector<int> left(outer.size(), 0), right(outer.size(), 0);
    for (Mask a : twins_[s1]) ++left[IndexOfClassContaining(outer, a)];
    for (Mask b : twins_[s2]) ++right[IndexOfClassContaining(outer, b)];
    int cost = 0;
    for (std::size_t i = 0; i < outer.size(); ++i) {
      cost += std::max(left[i], right[i]);
    }
    return cost;
  }

  // Expression for G[s] in which class i of Tw(s) carries target[i].
  NlcExpr Build(Mask s, const std::vector<Label>& target) const {
    if (Count(s) == 1) return NlcExpr::Leaf(g_.ids[Index(s)], target[0]);
    const Mask s1 = split_[s];
    const Mask s2 = s ^ s1;
    const std::vector<Mask>& outer = twins_[s];
    const std::vector<Mask>& c1 = twins_[s1];
    const std::vector<Mask>& c2 = twins_[s2];
    // Union-time labels: each outer class owns a consecutive bank.
    std::vector<int> used_left(outer.size(), 0), used_right(outer.size(), 0);
    std::vector<Label> bank_start(outer.size(), 1);
    {
      std::vector<int> left(outer.size(), 0), right(outer.size(), 0);
      for (Mask a : c1) ++left[IndexOfClassContaining(outer, a)];
      for (Mask b : c2) ++right[IndexOfClassContaining(outer, b)];
      Label next = 1;
      for (std::size_t i = 0; i < outer.size(); ++i) {
        bank_start[i] = next;
        next += std::max(left[i], right[i]);
      }
    }
    std::vector<Label> t1(c1.size()), t2(c2.size());
    LabelMap back;
    for (std::size_t i = 0; i < c1.size(); ++i) {
      const int o = IndexOfClassContaining(outer, c1[i]);
      t1[i] = bank_start[o] + used_left[o]++;
      if (t1[i] != target[o]) back[t1[i]] = target[o];
    }
    for (std::size_t j = 0; j < c2.size(); ++j) {
      const int o = IndexOfClassContaining(outer, c2[j]);
      t2[j] = bank_start[o] + used_right[o]++;
      if (t2[j] != target[o]) back[t2[j]] = target[o];
    }
    PairSet pairs;
    for (std::size_t i = 0; i < c1.size(); ++i) {
      for (std::size_t j = 0; j < c2.size(); ++j) {
        if (g_.adj[Index(LowBit(c1[i]))] & LowBit(c2[j])) {
          pairs.emplace(t1[i], t2[j]);
        }
      }
    }
    NlcExpr e = NlcExpr::Union(std::move(pairs), Build(s1, t1), Build(s2, t2));
    return back.empty() ? e : NlcExpr::Relabel(std::move(back), e);
  }

  const Indexed& g_;
  std::vector<std::vector<Mask>> twins_;
  std::vector<Mask> split_;
  std::vector<bool> ok_;
};

// ------------------------------------------------------------ clique-width
//
// A state is (S, P): an expression for G[S] whose label classes form the
// partition P. Because AddEdges is admissible as soon as two classes are
// completely adjacent and classes only ever grow, an edge of G[S] that is
// not created while the state is formed can never be created later; so
// every live state has created exactly E(G[S]), and P must refine Tw(S).
// States are built by disjoint union (a partial matching of classes that
// share a label) followed by merging classes.
class CwSolver {
 public:
  CwSolver(const Indexed& g, int k) : g_(g), k_(k) {
    twins_.resize(std::size_t{1} << g_.n);
    states_.resize(std::size_t{1} << g_.n);
    index_.resize(std::size_t{1} << g_.n);
  }

  std::optional<CwExpr> Decide() {
    for (Mask s = 1; s <= g_.full && s != 0; ++s) {
      twins_[s] = g_.Twins(s);
      if (Count(s) == 1) {
        Add(s, {s}, {Kind::kLeaf, 0, 0, 0});
        continue;
      }
      // Every class count is at least |Tw(S)| unless S is everything.
      if (s != g_.full && static_cast<int>(twins_[s].size()) > k_) continue;
      const Mask low = LowBit(s);
      const Mask rest = s ^ low;
      for (Mask t = (rest - 1) & rest;; t = (t - 1) & rest) {
        const Mask s1 = low | t;
        const Mask s2 = s ^ s1;
        for (int a = 0; a < static_cast<int>(states_[s1].size()); ++a) {
          for (int b = 0; b < static_cast<int>(states_[s2].size()); ++b) {
            Combine(s, s1, a, b);
          }
        }
        if (t == 0) break;
      }
      CloseUnderMerges(s);
    }
    if (states_[g_.full].empty()) return std::nullopt;
    const std::vector<Mask>& root = states_[g_.full][0].classes;
    std::vector<Label> target(root.size());
    for (std::size_t i = 0; i < root.size(); ++i) {
      target[i] = static_cast<Label>(i + 1);
    }
    return Build(g_.full, 0, target);
  }

 private:
  enum class Kind { kLeaf, kUnion, kMerge };
  struct Record {
    Kind kind;
    Mask left;  // kUnion: S1
    int a;      // kUnion: state of S1; kMerge: finer state of S
    int b;      // kUnion: state of S \ S1
  };
  struct State {
    std::vector<Mask> classes;  // sorted
    Record record;
  };

  bool InOneTwinClass(Mask s, Mask m) const {
    for (Mask c : twins_[s]) {
      if ((c & m) == m) return true;
    }
    return false;
  }

  void Add(Mask s, std::vector<Mask> classes, Record record) {
    std::sort(classes.begin(), classes.end());
    if (index_[s].count(classes)) return;
    index_[s].emplace(classes, static_cast<int>(states_[s].size()));
    states_[s].push_back({std::move(classes), record});
  }

  void Combine(Mask s, Mask s1, int a, int b) {
    const Mask s2 = s ^ s1;
    const std::vector<Mask>& p1 = states_[s1][a].classes;
    const std::vector<Mask>& p2 = states_[s2][b].classes;
    const int n1 = static_cast<int>(p1.size());
    const int n2 = static_cast<int>(p2.size());
    std::vector<int> partner(n1, -1);
    std::vector<bool> taken(n2, false);
    // Matched classes share a label: they must be non-adjacent and stay
    // inside one class of Tw(S).
    const auto compatible = [&](int i, int j) {
      return !g_.AnyEdge(p1[i], p2[j]) &&
             (s == g_.full || InOneTwinClass(s, p1[i] | p2[j]));
    };
    const auto emit = [&]() {
      std::vector<Mask> q;
      std::vector<Mask> side1;  // part of each result class inside S1
      for (int i = 0; i < n1; ++i) {
        q.push_back(p1[i] | (partner[i] >= 0 ? p2[partner[i]] : 0));
        side1.push_back(p1[i]);
      }
      for (int j = 0; j < n2; ++j) {
        if (!taken[j]) {
          q.push_back(p2[j]);
          side1.push_back(0);
        }
      }
      for (std::size_t x = 0; x < q.size(); ++x) {
        for (std::size_t y = x + 1; y < q.size(); ++y) {
          const bool cross = g_.AnyEdge(side1[x], q[y] & ~side1[y]) ||
                             g_.AnyEdge(q[x] & ~side1[x], side1[y]);
          if (cross && !g_.Complete(q[x], q[y])) return;
        }
      }
      Add(s, std::move(q), {Kind::kUnion, s1, a, b});
    };
    // Depth-first over partial matchings; `labels` counts classes so far.
    const std::function<void(int, int)> go = [&](int i, int labels) {
      if (labels > k_) return;
      if (i == n1) {
        emit();
        return;
      }
      // Fixed exploration order; the first derivation of a state is kept.
      partner[i] = -1;
      go(i + 1, labels + 1);
      for (int j = 0; j < n2; ++j) {
        if (taken[j] || !compatible(i, j)) continue;
        taken[j] = true;
        partner[i] = j;
        go(i + 1, labels);
        taken[j] = false;
        partner[i] = -1;
      }
    };
    go(0, n2);
  }

  void CloseUnderMerges(Mask s) {
    for (int idx = 0; idx < static_cast<int>(states_[s].size()); ++idx) {
      const std::vector<Mask> classes = states_[s][idx].classes;
      for (std::size_t x = 0; x < classes.size(); ++x) {
        for (std::size_t y = x + 1; y < classes.size(); ++y) {
          const Mask merged = classes[x] | classes[y];
          if (s != g_.full && !InOneTwinClass(s, merged)) continue;
          std::vector<Mask> next;
          for (std::size_t z = 0; z < classes.size(); ++z) {
            if (z != x && z != y) next.push_back(classes[z]);
          }
          next.push_back(merged);
          Add(s, std::move(next), {Kind::kMerge, 0, idx, 0});
        }
      }
    }
  }

  // Expression for G[s] realizing state idx, class i labeled target[i].
  CwExpr Build(Mask s, int idx, const std::vector<Label>& target) const {
    const State& st = states_[s][idx];
    const std::vector<Mask>& q = st.classes;
    switch (st.record.kind) {
      case Kind::kLeaf:
        return CwExpr::Leaf(g_.ids[Index(s)], target[0]);
      case Kind::kMerge: {
        const std::vector<Mask>& finer = states_[s][st.record.a].classes;
        Label free = 1;
        while (std::find(target.begin(), target.end(), free) != target.end()) {
          ++free;
        }
        std::vector<Label> inner(finer.size());
        std::vector<bool> seen(q.size(), false);
        Label moved_to = 0;
        for (std::size_t i = 0; i < finer.size(); ++i) {
          const int o = IndexOfClassContaining(q, finer[i]);
          if (!seen[o]) {
            seen[o] = true;
            inner[i] = target[o];
          } else {
            inner[i] = free;
            moved_to = target[o];
          }
        }
        return CwExpr::Relabel(free, moved_to,
                               Build(s, st.record.a, inner));
      }
      case Kind::kUnion: {
        const Mask s1 = st.record.left;
        const Mask s2 = s ^ s1;
        const std::vector<Mask>& p1 = states_[s1][st.record.a].classes;
        const std::vector<Mask>& p2 = states_[s2][st.record.b].classes;
        std::vector<Label> t1(p1.size()), t2(p2.size());
        for (std::size_t i = 0; i < p1.size(); ++i) {
          t1[i] = target[IndexOfClassContaining(q, p1[i])];
        }
        for (std::size_t j = 0; j < p2.size(); ++j) {
          t2[j] = target[IndexOfClassContaining(q, p2[j])];
        }
        CwExpr e = CwExpr::DisjointUnion(Build(s1, st.record.a, t1),
                                         Build(s2, st.record.b, t2));
        for (std::size_t x = 0; x < q.size(); ++x) {
          for (std::size_t y = x + 1; y < q.size(); ++y) {
            const bool cross = g_.AnyEdge(q[x] & s1, q[y] & s2) ||
                               g_.AnyEdge(q[x] & s2, q[y] & s1);
            if (cross) e = CwExpr::AddEdges(target[x], target[y], e);
          }
        }
        return e;
      }
    }
    return CwExpr::Leaf(g_.ids[0], 1);
  }

  const Indexed& g_;
  int k_;
  std::vector<std::vector<Mask>> twins_;
  std::vector<std::vector<State>> states_;
  std::vector<std::map<std::vector<Mask>, int>> index_;
};

}  // namespace

int VertexCap(WidthParam param, const OracleLimits& limits) {
  const int hard =
      param == WidthParam::kNlc ? kMaxNlcVertexCap : kMaxCwVertexCap;
  if (limits.max_vertices > hard) {
    throw LimitError("vertex cap " + std::to_string(limits.max_vertices) +
                     " is above the supported maximum " +
                     std::to_string(hard));
  }
  if (limits.max_vertices > 0) return limits.max_vertices;
  return param == WidthParam::kNlc ? kDefaultNlcVertexCap
                                   : kDefaultCwVertexCap;
}

std::optional<NlcExpr> DecideNlcWidth(const LabeledGraph& g, int k,
                                      const OracleLimits& limits) {
  CheckCap(g, WidthParam::kNlc, limits);
  if (k < 1) return std::nullopt;
  const Indexed indexed(g);
  return NlcSolver(indexed).Decide(k);
}

std::optional<CwExpr> DecideCwWidth(const LabeledGraph& g, int k,
                                    const OracleLimits& limits) {
  CheckCap(g, WidthParam::kCw, limits);
  if (k < 1) return std::nullopt;
  const Indexed indexed(g);
  return CwSolver(indexed, k).Decide();
}

WidthCertificate ExactWidth(const LabeledGraph& g, WidthParam param,
                            const OracleLimits& limits) {
  CheckCap(g, param, limits);
  const Indexed indexed(g);
  if (param == WidthParam::kNlc) {
    NlcSolver solver(indexed);
    for (int k = 1;; ++k) {
      if (std::optional<NlcExpr> w = solver.Decide(k)) {
        return {g, param, k, *w};
      }
    }
  }
  for (int k = 1;; ++k) {
    if (std::optional<CwExpr> w = CwSolver(indexed, k).Decide()) {
      return {g, param, k, *w};
    }
  }
}

}  // namespace cwexpr
