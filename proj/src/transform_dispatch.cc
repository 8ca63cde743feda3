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

#include "cwexpr/errors.h"
#include "cwexpr/transform.h"

namespace cwexpr {
namespace {

const VertexId& Need(const std::optional<VertexId>& v, const char* flag) {
  if (!v) throw PreconditionError(std::string("missing ") + flag);
  return *v;
}

template <typename Expr>
TransformResult<Expr> Dispatch(Op op, std::span<const Expr> operands,
                               const OpArgs& args, bool degree_opt) {
  if (!HasTransform(op)) {
    throw PreconditionError("no expression-level transform for " +
                            std::string(OpName(op)));
  }
  const std::size_t arity = IsBinaryOp(op) ? 2 : 1;
  if (operands.size() != arity) {
    throw PreconditionError(std::string(OpName(op)) + " takes " +
                            std::to_string(arity) + " operand(s)");
  }
  const Expr& x = operands[0];
  const auto second = [&]() -> const Expr& { return operands[1]; };
  const auto fresh_or = [&](std::string fallback) {
    return args.fresh ? *args.fresh : VertexId(std::move(fallback));
  };
  switch (op) {
    case Op::kUnion:
      return TUnion(x, second());
    case Op::kJoin:
      return TJoin(x, second());
    case Op::kLexicographic:
      return TLex(x, second());
    case Op::kCorona:
      return TCorona(x, second());
    case Op::kSubstitution:
      return TSubstitute(x, Need(args.at, "--at"), second());
    case Op::kOneSum:
      return TOneSum(x, Need(args.at, "--at"), second(),
                     Need(args.at2, "--at2"));
    case Op::kQuotient:
      return TQuotient(x, args.vertices);
    case Op::kInducedSubgraph:
      return TInducedSubgraph(x, args.vertices);
    case Op::kComplement:
      return TComplement(x);
    case Op::kBipartiteComplement: {
      Bipartition b;
      b.side2 = args.vertices;
      for (const VertexId& v : LeafIds(x)) {
        if (!b.side2.count(v)) b.side1.insert(v);
      }
      return TBipComplement(x, b);
    }
    case Op::kSwitching:
      return TSwitch(x, Need(args.at, "--at"));
    case Op::kLocalComplement:
      return TLocalComplement(x, Need(args.at, "--at"), degree_opt);
    case Op::kEdgeAdd:
      return TAddEdge(x, Need(args.at, "--at"), Need(args.at2, "--at2"));
    case Op::kEdgeDelete:
      return TDelEdge(x, Need(args.at, "--at"), Need(args.at2, "--at2"));
    case Op::kSubdivide: {
      const VertexId& u = Need(args.at, "--at");
      const VertexId& v = Need(args.at2, "--at2");
      return TSubdivide(x, u, v, fresh_or(u.str() + "~" + v.str()));
    }
    case Op::kIdentify:
    case Op::kContract: {
      const VertexId& u = Need(args.at, "--at");
      const VertexId& v = Need(args.at2, "--at2");
      const VertexId z = fresh_or(u.str() + "+" + v.str());
      return op == Op::kIdentify ? TIdentify(x, u, v, z)
                                 : TContract(x, u, v, z);
    }
    case Op::kVertexAdd:
      return TAddVertex(x, Need(args.fresh, "--new-id"), args.vertices,
                        degree_opt);
    case Op::kVertexDelete:
      return TDeleteVertex(x, Need(args.at, "--at"));
    default:
      break;
  }
  throw PreconditionError("no expression-level transform for " +
                          std::string(OpName(op)));
}

}  // namespace

bool HasTransform(Op op) {
  switch (op) {
    case Op::kSum:
    case Op::kDifference:
    case Op::kCartesian:
    case Op::kCategorical:
    case Op::kNormal:
    case Op::kCoNormal:
    case Op::kPower:
      return false;
    default:
      return true;
  }
}

NlcResult ApplyTransform(Op op, std::span<const NlcExpr> operands,
                         const OpArgs& args, bool degree_opt) {
  return Dispatch(op, operands, args, degree_opt);
}

CwResult ApplyTransform(Op op, std::span<const CwExpr> operands,
                        const OpArgs& args, bool degree_opt) {
  return Dispatch(op, operands, args, degree_opt);
}

}  // namespace cwexpr
