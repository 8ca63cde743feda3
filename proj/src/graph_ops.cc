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

#include "cwexpr/graph_ops.h"

#include <array>
#include <deque>
#include <functional>

#include "cwexpr/errors.h"

namespace cwexpr {
namespace {

struct OpSpelling {
  Op op;
  std::string_view name;
};

constexpr std::array<OpSpelling, 26> kOpNames = {{
    {Op::kUnion, "union"},
    {Op::kJoin, "join"},
    {Op::kSum, "sum"},
    {Op::kDifference, "difference"},
    {Op::kCartesian, "cartesian"},
    {Op::kCategorical, "categorical"},
    {Op::kNormal, "normal"},
    {Op::kCoNormal, "co-normal"},
    {Op::kLexicographic, "lexicographic"},
    {Op::kCorona, "corona"},
    {Op::kSubstitution, "substitution"},
    {Op::kOneSum, "one-sum"},
    {Op::kQuotient, "quotient"},
    {Op::kInducedSubgraph, "induced"},
    {Op::kComplement, "complement"},
    {Op::kBipartiteComplement, "bip-complement"},
    {Op::kSwitching, "switching"},
    {Op::kLocalComplement, "local-complement"},
    {Op::kEdgeAdd, "edge-add"},
    {Op::kEdgeDelete, "edge-delete"},
    {Op::kSubdivide, "subdivide"},
    {Op::kIdentify, "identify"},
    {Op::kContract, "contract"},
    {Op::kVertexAdd, "vertex-add"},
    {Op::kVertexDelete, "vertex-delete"},
    {Op::kPower, "power"},
}};

constexpr std::array<OpSpelling, 10> kOpAliases = {{
    {Op::kUnion, "co-join"},
    {Op::kLexicographic, "lex"},
    {Op::kLexicographic, "composition"},
    {Op::kSubstitution, "substitute"},
    {Op::kSwitching, "switch"},
    {Op::kLocalComplement, "lc"},
    {Op::kEdgeAdd, "add-edge"},
    {Op::kEdgeDelete, "del-edge"},
    {Op::kVertexAdd, "add-vertex"},
    {Op::kVertexDelete, "delete-vertex"},
}};

void RequireVertex(const LabeledGraph& g, const VertexId& v) {
  if (!g.HasVertex(v)) {
    throw PreconditionError("vertex " + v.str() + " is not in the graph");
  }
}

void RequireDisjoint(const LabeledGraph& g1, const LabeledGraph& g2) {
  for (const VertexId& v : g2.Vertices()) {
    if (g1.HasVertex(v)) {
      throw PreconditionError("operands share vertex " + v.str());
    }
  }
}

void CopyInto(const LabeledGraph& from, LabeledGraph& to) {
  for (const auto& [v, label] : from.labels()) to.AddVertex(v, label);
  for (const auto& [u, v] : from.Edges()) to.AddEdge(u, v);
}

// Checks that `correspondence` is a bijection V2 -> V1.
void RequireCorrespondence(const LabeledGraph& g1, const LabeledGraph& g2,
                           const std::map<VertexId, VertexId>& corr) {
  if (g1.NumVertices() != g2.NumVertices()) {
    throw PreconditionError("operands differ in size (" +
                            std::to_string(g1.NumVertices()) + " vs " +
                            std::to_string(g2.NumVertices()) + ")");
  }
  if (corr.size() != g2.NumVertices()) {
    throw PreconditionError("vertex correspondence must cover the second "
                            "operand");
  }
  VertexSet image;
  for (const auto& [from, to] : corr) {
    RequireVertex(g2, from);
    RequireVertex(g1, to);
    if (!image.insert(to).second) {
      throw PreconditionError("vertex correspondence is not injective at " +
                              to.str());
    }
  }
}

using PairAdjacency =
    std::function<bool(const VertexId&, const VertexId&, const VertexId&,
                       const VertexId&)>;

ProductGraph Product(const LabeledGraph& g1, const LabeledGraph& g2,
                     const PairAdjacency& adjacent) {
  ProductGraph out;
  std::vector<std::pair<VertexId, std::pair<VertexId, VertexId>>> nodes;
  for (const VertexId& u1 : g1.Vertices()) {
    for (const VertexId& u2 : g2.Vertices()) {
      VertexId id = PairId(u1, u2);
      if (!out.pairs.emplace(id, std::make_pair(u1, u2)).second) {
        throw PreconditionError("pair id " + id.str() + " is ambiguous");
      }
      out.graph.AddVertex(id, 1);
      nodes.push_back({id, {u1, u2}});
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const auto& [a1, a2] = nodes[i].second;
      const auto& [b1, b2] = nodes[j].second;
      if (adjacent(a1, a2, b1, b2)) {
        out.graph.AddEdge(nodes[i].first, nodes[j].first);
      }
    }
  }
  return out;
}

const VertexId& Need(const std::optional<VertexId>& v, std::string_view what) {
  if (!v) throw PreconditionError("missing argument: " + std::string(what));
  return *v;
}

}  // namespace

std::string_view OpName(Op op) {
  for (const auto& entry : kOpNames) {
    if (entry.op == op) return entry.name;
  }
  return "?";
}

std::optional<Op> ParseOp(std::string_view name) {
  for (const auto& entry : kOpNames) {
    if (entry.name == name) return entry.op;
  }
  for (const auto& entry : kOpAliases) {
    if (entry.name == name) return entry.op;
  }
  return std::nullopt;
}

bool IsBinaryOp(Op op) {
  switch (op) {
    case Op::kUnion:
    case Op::kJoin:
    case Op::kSum:
    case Op::kDifference:
    case Op::kCartesian:
    case Op::kCategorical:
    case Op::kNormal:
    case Op::kCoNormal:
    case Op::kLexicographic:
    case Op::kCorona:
    case Op::kSubstitution:
    case Op::kOneSum:
      return true;
    default:
      return false;
  }
}

VertexId PairId(const VertexId& first, const VertexId& second) {
  return VertexId(first.str() + "/" + second.str());
}

namespace ops {

LabeledGraph DisjointUnion(const LabeledGraph& g1, const LabeledGraph& g2) {
  RequireDisjoint(g1, g2);
  LabeledGraph out = g1;
  CopyInto(g2, out);
  return out;
}

LabeledGraph Join(const LabeledGraph& g1, const LabeledGraph& g2) {
  LabeledGraph out = DisjointUnion(g1, g2);
  for (const VertexId& u : g1.Vertices()) {
    for (const VertexId& v : g2.Vertices()) out.AddEdge(u, v);
  }
  return out;
}

LabeledGraph Sum(const LabeledGraph& g1, const LabeledGraph& g2,
                 const std::map<VertexId, VertexId>& correspondence) {
  RequireCorrespondence(g1, g2, correspondence);
  LabeledGraph out = g1;
  for (const auto& [u, v] : g2.Edges()) {
    out.AddEdge(correspondence.at(u), correspondence.at(v));
  }
  return out;
}

LabeledGraph Difference(const LabeledGraph& g1, const LabeledGraph& g2,
                        const std::map<VertexId, VertexId>& correspondence) {
  RequireCorrespondence(g1, g2, correspondence);
  LabeledGraph out = g1;
  for (const auto& [u, v] : g2.Edges()) {
    out.RemoveEdge(correspondence.at(u), correspondence.at(v));
  }
  return out;
}

ProductGraph Cartesian(const LabeledGraph& g1, const LabeledGraph& g2) {
  return Product(g1, g2, [&](const VertexId& u1, const VertexId& u2,
                             const VertexId& v1, const VertexId& v2) {
    return (u1 == v1 && g2.HasEdge(u2, v2)) ||
           (u2 == v2 && g1.HasEdge(u1, v1));
  });
}

ProductGraph Categorical(const LabeledGraph& g1, const LabeledGraph& g2) {
  return Product(g1, g2, [&](const VertexId& u1, const VertexId& u2,
                             const VertexId& v1, const VertexId& v2) {
    return g1.HasEdge(u1, v1) && g2.HasEdge(u2, v2);
  });
}

ProductGraph Normal(const LabeledGraph& g1, const LabeledGraph& g2) {
  return Product(g1, g2, [&](const VertexId& u1, const VertexId& u2,
                             const VertexId& v1, const VertexId& v2) {
    const bool e1 = g1.HasEdge(u1, v1);
    const bool e2 = g2.HasEdge(u2, v2);
    return (u1 == v1 && e2) || (e1 && u2 == v2) || (e1 && e2);
  });
}

ProductGraph CoNormal(const LabeledGraph& g1, const LabeledGraph& g2) {
  return Product(g1, g2, [&](const VertexId& u1, const VertexId& u2,
                             const VertexId& v1, const VertexId& v2) {
    return g1.HasEdge(u1, v1) || g2.HasEdge(u2, v2);
  });
}

ProductGraph Lexicographic(const LabeledGraph& g1, const LabeledGraph& g2) {
  return Product(g1, g2, [&](const VertexId& u1, const VertexId& u2,
                             const VertexId& v1, const VertexId& v2) {
    return g1.HasEdge(u1, v1) || (u1 == v1 && g2.HasEdge(u2, v2));
  });
}

LabeledGraph Corona(const LabeledGraph& g1, const LabeledGraph& g2) {
  LabeledGraph out = g1;
  for (const VertexId& u : g1.Vertices()) {
    for (const VertexId& w : g2.Vertices()) {
      const VertexId id = PairId(u, w);
      if (out.HasVertex(id)) {
        throw PreconditionError("pair id " + id.str() + " is ambiguous");
      }
      out.AddVertex(id, 1);
      out.AddEdge(u, id);
    }
    for (const auto& [a, b] : g2.Edges()) {
      out.AddEdge(PairId(u, a), PairId(u, b));
    }
  }
  return out;
}

LabeledGraph Substitution(const LabeledGraph& g1, const VertexId& v,
                          const LabeledGraph& g2) {
  RequireVertex(g1, v);
  RequireDisjoint(g1, g2);
  const VertexSet neighbors = g1.Neighbors(v);
  LabeledGraph out = g1;
  out.RemoveVertex(v);
  CopyInto(g2, out);
  for (const VertexId& u : g2.Vertices()) {
    for (const VertexId& w : neighbors) out.AddEdge(u, w);
  }
  return out;
}

LabeledGraph OneSum(const LabeledGraph& g1, const VertexId& v,
                    const LabeledGraph& g2, const VertexId& w) {
  RequireVertex(g1, v);
  RequireVertex(g2, w);
  RequireDisjoint(g1, g2);
  LabeledGraph out = g1;
  out.RemoveVertex(v);
  CopyInto(g2, out);
  for (const VertexId& u : g1.Neighbors(v)) out.AddEdge(w, u);
  return out;
}

LabeledGraph Quotient(const LabeledGraph& g, const VertexSet& module) {
  if (!IsModule(g, module)) {
    throw PreconditionError("vertex set is not a module");
  }
  LabeledGraph out = g;
  for (auto it = std::next(module.begin()); it != module.end(); ++it) {
    out.RemoveVertex(*it);
  }
  return out;
}

LabeledGraph InducedSubgraph(const LabeledGraph& g, const VertexSet& keep) {
  for (const VertexId& v : keep) RequireVertex(g, v);
  LabeledGraph out = g;
  for (const VertexId& v : g.Vertices()) {
    if (!keep.count(v)) out.RemoveVertex(v);
  }
  return out;
}

LabeledGraph Complement(const LabeledGraph& g) {
  LabeledGraph out;
  for (const auto& [v, label] : g.labels()) out.AddVertex(v, label);
  const std::vector<VertexId> vs = g.Vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.HasEdge(vs[i], vs[j])) out.AddEdge(vs[i], vs[j]);
    }
  }
  return out;
}

LabeledGraph BipartiteComplement(const LabeledGraph& g, const Bipartition& b) {
  switch (ValidateBipartition(g, b)) {
    case BipartitionVerdict::kValid:
      break;
    case BipartitionVerdict::kCoverageMismatch:
      throw PreconditionError("bipartition does not cover the vertex set");
    case BipartitionVerdict::kSameSideEdge:
      throw PreconditionError("bipartition has an edge inside one side");
  }
  LabeledGraph out;
  for (const auto& [v, label] : g.labels()) out.AddVertex(v, label);
  for (const VertexId& u : b.side1) {
    for (const VertexId& v : b.side2) {
      if (!g.HasEdge(u, v)) out.AddEdge(u, v);
    }
  }
  return out;
}

LabeledGraph Switching(const LabeledGraph& g, const VertexId& x) {
  RequireVertex(g, x);
  LabeledGraph out = g;
  for (const VertexId& y : g.Vertices()) {
    if (y == x) continue;
    if (g.HasEdge(x, y)) {
      out.RemoveEdge(x, y);
    } else {
      out.AddEdge(x, y);
    }
  }
  return out;
}

LabeledGraph LocalComplement(const LabeledGraph& g, const VertexId& x) {
  RequireVertex(g, x);
  LabeledGraph out = g;
  const std::vector<VertexId> nbrs(g.Neighbors(x).begin(),
                                   g.Neighbors(x).end());
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.HasEdge(nbrs[i], nbrs[j])) {
        out.RemoveEdge(nbrs[i], nbrs[j]);
      } else {
        out.AddEdge(nbrs[i], nbrs[j]);
      }
    }
  }
  return out;
}

LabeledGraph EdgeAdd(const LabeledGraph& g, const VertexId& u,
                     const VertexId& v) {
  RequireVertex(g, u);
  RequireVertex(g, v);
  if (u == v) throw PreconditionError("edge endpoints must differ");
  if (g.HasEdge(u, v)) {
    throw PreconditionError("edge " + u.str() + "-" + v.str() +
                            " already exists");
  }
  LabeledGraph out = g;
  out.AddEdge(u, v);
  return out;
}

LabeledGraph EdgeDelete(const LabeledGraph& g, const VertexId& u,
                        const VertexId& v) {
  RequireVertex(g, u);
  RequireVertex(g, v);
  if (!g.HasEdge(u, v)) {
    throw PreconditionError("no edge " + u.str() + "-" + v.str());
  }
  LabeledGraph out = g;
  out.RemoveEdge(u, v);
  return out;
}

LabeledGraph Subdivide(const LabeledGraph& g, const VertexId& u,
                       const VertexId& v, const VertexId& z) {
  LabeledGraph out = EdgeDelete(g, u, v);
  if (out.HasVertex(z)) {
    throw PreconditionError("vertex " + z.str() + " already exists");
  }
  out.AddVertex(z, 1);
  out.AddEdge(u, z);
  out.AddEdge(v, z);
  return out;
}

LabeledGraph Identify(const LabeledGraph& g, const VertexId& u,
                      const VertexId& v, const VertexId& z) {
  RequireVertex(g, u);
  RequireVertex(g, v);
  if (u == v) throw PreconditionError("identified vertices must differ");
  if (z != u && z != v && g.HasVertex(z)) {
    throw PreconditionError("vertex " + z.str() + " already exists");
  }
  VertexSet neighbors = g.Neighbors(u);
  neighbors.insert(g.Neighbors(v).begin(), g.Neighbors(v).end());
  neighbors.erase(u);
  neighbors.erase(v);
  LabeledGraph out = g;
  out.RemoveVertex(u);
  out.RemoveVertex(v);
  out.AddVertex(z, 1);
  for (const VertexId& w : neighbors) out.AddEdge(z, w);
  return out;
}

LabeledGraph Contract(const LabeledGraph& g, const VertexId& u,
                      const VertexId& v, const VertexId& z) {
  RequireVertex(g, u);
  RequireVertex(g, v);
  if (!g.HasEdge(u, v)) {
    throw PreconditionError("no edge " + u.str() + "-" + v.str() +
                            " to contract");
  }
  return Identify(g, u, v, z);
}

LabeledGraph VertexAdd(const LabeledGraph& g, const VertexId& z,
                       const VertexSet& neighbors) {
  if (g.HasVertex(z)) {
    throw PreconditionError("vertex " + z.str() + " already exists");
  }
  for (const VertexId& w : neighbors) RequireVertex(g, w);
  LabeledGraph out = g;
  out.AddVertex(z, 1);
  for (const VertexId& w : neighbors) out.AddEdge(z, w);
  return out;
}

LabeledGraph VertexDelete(const LabeledGraph& g, const VertexId& v) {
  RequireVertex(g, v);
  LabeledGraph out = g;
  out.RemoveVertex(v);
  return out;
}

LabeledGraph Power(const LabeledGraph& g, int d) {
  if (d < 1) throw PreconditionError("graph power needs d >= 1");
  LabeledGraph out;
  for (const auto& [v, label] : g.labels()) out.AddVertex(v, label);
  for (const VertexId& s : g.Vertices()) {
    std::map<VertexId, int> dist{{s, 0}};
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      if (dist[v] == d) continue;
      for (const VertexId& w : g.Neighbors(v)) {
        if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
      }
    }
    for (const auto& [t, len] : dist) {
      if (s < t) out.AddEdge(s, t);
    }
  }
  return out;
}

}  // namespace ops

LabeledGraph ApplyGraphOp(Op op, std::span<const LabeledGraph> operands,
                          const OpArgs& args) {
  const std::size_t arity = IsBinaryOp(op) ? 2 : 1;
  if (operands.size() != arity) {
    throw PreconditionError(std::string(OpName(op)) + " takes " +
                            std::to_string(arity) + " operand(s)");
  }
  const LabeledGraph& g = operands[0];
  auto second = [&]() -> const LabeledGraph& { return operands[1]; };
  auto fresh_or = [&](std::string fallback) {
    return args.fresh ? *args.fresh : VertexId(std::move(fallback));
  };
  switch (op) {
    case Op::kUnion:
      return ops::DisjointUnion(g, second());
    case Op::kJoin:
      return ops::Join(g, second());
    case Op::kSum:
      return ops::Sum(g, second(), args.correspondence);
    case Op::kDifference:
      return ops::Difference(g, second(), args.correspondence);
    case Op::kCartesian:
      return ops::Cartesian(g, second()).graph;
    case Op::kCategorical:
      return ops::Categorical(g, second()).graph;
    case Op::kNormal:
      return ops::Normal(g, second()).graph;
    case Op::kCoNormal:
      return ops::CoNormal(g, second()).graph;
    case Op::kLexicographic:
      return ops::Lexicographic(g, second()).graph;
    case Op::kCorona:
      return ops::Corona(g, second());
    case Op::kSubstitution:
      return ops::Substitution(g, Need(args.at, "--at"), second());
    case Op::kOneSum:
      return ops::OneSum(g, Need(args.at, "--at"), second(),
                         Need(args.at2, "--at2"));
    case Op::kQuotient:
      return ops::Quotient(g, args.vertices);
    case Op::kInducedSubgraph:
      return ops::InducedSubgraph(g, args.vertices);
    case Op::kComplement:
      return ops::Complement(g);
    case Op::kBipartiteComplement: {
      Bipartition b;
      b.side2 = args.vertices;
      for (const VertexId& v : g.Vertices()) {
        if (!b.side2.count(v)) b.side1.insert(v);
      }
      return ops::BipartiteComplement(g, b);
    }
    case Op::kSwitching:
      return ops::Switching(g, Need(args.at, "--at"));
    case Op::kLocalComplement:
      return ops::LocalComplement(g, Need(args.at, "--at"));
    case Op::kEdgeAdd:
      return ops::EdgeAdd(g, Need(args.at, "--at"), Need(args.at2, "--at2"));
    case Op::kEdgeDelete:
      return ops::EdgeDelete(g, Need(args.at, "--at"),
                             Need(args.at2, "--at2"));
    case Op::kSubdivide: {
      const VertexId& u = Need(args.at, "--at");
      const VertexId& v = Need(args.at2, "--at2");
      return ops::Subdivide(g, u, v, fresh_or(u.str() + "~" + v.str()));
    }
    case Op::kIdentify:
    case Op::kContract: {
      const VertexId& u = Need(args.at, "--at");
      const VertexId& v = Need(args.at2, "--at2");
      const VertexId z = fresh_or(u.str() + "+" + v.str());
      return op == Op::kIdentify ? ops::Identify(g, u, v, z)
                                 : ops::Contract(g, u, v, z);
    }
    case Op::kVertexAdd:
      return ops::VertexAdd(g, Need(args.fresh, "--new-id"), args.vertices);
    case Op::kVertexDelete:
      return ops::VertexDelete(g, Need(args.at, "--at"));
    case Op::kPower:
      return ops::Power(g, args.power);
  }
  throw PreconditionError("unknown operation");
}

}  // namespace cwexpr
