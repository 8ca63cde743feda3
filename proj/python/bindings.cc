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

// Python bindings. Expressions and graphs cross the boundary as library
// objects; ids are plain strings.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cwexpr/builders.h"
#include "cwexpr/convert.h"
#include "cwexpr/errors.h"
#include "cwexpr/expr.h"
#include "cwexpr/expr_io.h"
#include "cwexpr/graph.h"
#include "cwexpr/graph_io.h"
#include "cwexpr/graph_ops.h"
#include "cwexpr/isomorphism.h"
#include "cwexpr/transform.h"
#include "cwexpr/width_oracle.h"

namespace py = pybind11;

namespace cwexpr {
namespace {

VertexSet ToSet(const std::vector<std::string>& ids) {
  VertexSet out;
  for (const std::string& s : ids) out.insert(VertexId(s));
  return out;
}

std::optional<VertexId> ToId(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return VertexId(*s);
}

Op ToOp(const std::string& name) {
  const std::optional<Op> op = ParseOp(name);
  if (!op) throw PreconditionError("unknown operation '" + name + "'");
  return *op;
}

OpArgs MakeArgs(const std::optional<std::string>& at,
                const std::optional<std::string>& at2,
                const std::optional<std::string>& new_id,
                const std::vector<std::string>& vertices) {
  OpArgs args;
  args.at = ToId(at);
  args.at2 = ToId(at2);
  args.fresh = ToId(new_id);
  args.vertices = ToSet(vertices);
  return args;
}

template <typename Expr>
py::tuple Transform(const std::string& op, const std::vector<Expr>& operands,
                    const std::optional<std::string>& at,
                    const std::optional<std::string>& at2,
                    const std::optional<std::string>& new_id,
                    const std::vector<std::string>& vertices,
                    bool degree_opt) {
  const TransformResult<Expr> r =
      ApplyTransform(ToOp(op), std::span<const Expr>(operands),
                     MakeArgs(at, at2, new_id, vertices), degree_opt);
  return py::make_tuple(r.expr, r.bound);
}

template <typename Expr>
void BindExpr(py::module_& m, const char* name) {
  py::class_<Expr>(m, name)
      .def("__str__", [](const Expr& x) { return ToString(x); })
      .def("__repr__",
           [name](const Expr& x) {
             return std::string(name) + "('" + ToString(x) + "')";
           })
      .def("__eq__", [](const Expr& a, const Expr& b) { return a == b; })
      .def_property_readonly("width", [](const Expr& x) { return WidthOf(x); })
      .def("leaves",
           [](const Expr& x) {
             std::vector<std::string> out;
             for (const VertexId& v : LeafIds(x)) out.push_back(v.str());
             return out;
           })
      .def("evaluate", [](const Expr& x) { return Evaluate(x); })
      .def("normalized", [](const Expr& x) { return NormalizeLabels(x); });
}

}  // namespace
}  // namespace cwexpr

PYBIND11_MODULE(_cwexpr, m) {
  using namespace cwexpr;
  m.doc() = "Clique-width and NLC-width expressions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);

  py::class_<LabeledGraph>(m, "Graph")
      .def(py::init<>())
      .def_static("parse", [](const std::string& s) { return ParseGraph(s); })
      .def("add_vertex",
           [](LabeledGraph& g, const std::string& v, Label l) {
             g.AddVertex(VertexId(v), l);
           },
           py::arg("v"), py::arg("label") = 1)
      .def("add_edge",
           [](LabeledGraph& g, const std::string& u, const std::string& v) {
             g.AddEdge(VertexId(u), VertexId(v));
           })
      .def("has_edge",
           [](const LabeledGraph& g, const std::string& u,
              const std::string& v) {
             return g.HasEdge(VertexId(u), VertexId(v));
           })
      .def("vertices",
           [](const LabeledGraph& g) {
             std::vector<std::string> out;
             for (const VertexId& v : g.Vertices()) out.push_back(v.str());
             return out;
           })
      .def("edges",
           [](const LabeledGraph& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [u, v] : g.Edges()) {
               out.emplace_back(u.str(), v.str());
             }
             return out;
           })
      .def("labels",
           [](const LabeledGraph& g) {
             std::map<std::string, Label> out;
             for (const auto& [v, l] : g.labels()) out[v.str()] = l;
             return out;
           })
      .def("__len__", [](const LabeledGraph& g) { return g.NumVertices(); })
      .def("__eq__", [](const LabeledGraph& a, const LabeledGraph& b) {
        return a == b;
      })
      .def("same_unlabeled", &SameUnlabeled)
      .def("to_text", &FormatGraph)
      .def("to_dot", [](const LabeledGraph& g) { return FormatDot(g); });

  BindExpr<NlcExpr>(m, "NlcExpr");
  BindExpr<CwExpr>(m, "CwExpr");

  m.def("parse_nlc", [](const std::string& s) { return ParseNlc(s); });
  m.def("parse_cw", [](const std::string& s) { return ParseCw(s); });
  m.def("parse_expr", [](const std::string& s) {
    return std::visit([](const auto& x) { return py::cast(x); },
                      ParseAnyExpr(s));
  });

  m.def("cw_to_nlc", &CwToNlc);
  m.def("nlc_to_cw", &NlcToCw);

  const auto bind_transform = [&](auto tag) {
    using Expr = decltype(tag);
    m.def("transform", &Transform<Expr>, py::arg("op"), py::arg("operands"),
          py::arg("at") = py::none(), py::arg("at2") = py::none(),
          py::arg("new_id") = py::none(),
          py::arg("vertices") = std::vector<std::string>{},
          py::arg("degree_opt") = false,
          "Apply an expression-level operation; returns (expr, bound).");
  };
  bind_transform(NlcExpr::Leaf(VertexId("x"), 1));
  bind_transform(CwExpr::Leaf(VertexId("x"), 1));

  m.def(
      "graph_op",
      [](const std::string& op, const std::vector<LabeledGraph>& operands,
         const std::optional<std::string>& at,
         const std::optional<std::string>& at2,
         const std::optional<std::string>& new_id,
         const std::vector<std::string>& vertices) {
        return ApplyGraphOp(ToOp(op), operands,
                            MakeArgs(at, at2, new_id, vertices));
      },
      py::arg("op"), py::arg("operands"), py::arg("at") = py::none(),
      py::arg("at2") = py::none(), py::arg("new_id") = py::none(),
      py::arg("vertices") = std::vector<std::string>{});

  m.def(
      "exact_width",
      [](const LabeledGraph& g, const std::string& param, int max_vertices) {
        if (param != "nlc" && param != "cw") {
          throw PreconditionError("param must be 'nlc' or 'cw'");
        }
        const WidthCertificate c = ExactWidth(
            g, param == "nlc" ? WidthParam::kNlc : WidthParam::kCw,
            OracleLimits{max_vertices});
        return py::make_tuple(
            c.value,
            std::visit([](const auto& x) { return py::cast(x); }, c.witness));
      },
      py::arg("graph"), py::arg("param") = "nlc", py::arg("max_vertices") = 0,
      "Exact width and a witness expression.");

  m.def(
      "isomorphic",
      [](const LabeledGraph& a, const LabeledGraph& b, bool labels) {
        return Isomorphic(a, b, labels);
      },
      py::arg("a"), py::arg("b"), py::arg("labels") = false);

  m.def(
      "gen",
      [](const std::string& family, const std::vector<int>& params,
         std::optional<std::uint64_t> seed) {
        return GenFamily(family, params, seed);
      },
      py::arg("family"), py::arg("params") = std::vector<int>{},
      py::arg("seed") = py::none());
}
