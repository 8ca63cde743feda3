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

// Command-line front end: evaluation, conversion, transforms, graph
// operations, exact widths, isomorphism, generators and checks.
//
// Exit status: 0 on success, 1 when a check or decision fails, 2 on usage,
// parse, precondition or limit errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
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

namespace cwexpr {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

AnyExpr ReadExpr(const std::string& path) {
  const std::string text = ReadInput(path);
  try {
    return ParseAnyExpr(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what());
  }
}

LabeledGraph ReadGraph(const std::string& path) {
  const std::string text = ReadInput(path);
  try {
    return ParseGraph(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what());
  }
}

LabeledGraph EvaluateAny(const AnyExpr& x) {
  return std::visit([](const auto& e) { return Evaluate(e); }, x);
}

void PrintGraph(const LabeledGraph& g, const std::string& format) {
  if (format == "dot") {
    std::cout << FormatDot(g);
  } else if (format == "edgelist") {
    std::cout << FormatGraph(g);
  } else {
    throw UsageError("format '" + format + "' does not apply to graphs");
  }
}

void PrintExpr(const AnyExpr& x, const std::string& format) {
  if (format == "expr") {
    std::cout << ToString(x) << "\n";
  } else {
    PrintGraph(EvaluateAny(x), format);
  }
}

VertexId ParseId(const std::string& s) {
  if (!VertexId::IsValidToken(s)) throw UsageError("invalid vertex id '" + s + "'");
  return VertexId(s);
}

std::optional<VertexId> OptionalId(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return ParseId(s);
}

VertexSet ParseIds(const std::vector<std::string>& items) {
  VertexSet out;
  for (const std::string& s : items) out.insert(ParseId(s));
  return out;
}

Op ParseOpOrThrow(const std::string& name) {
  const std::optional<Op> op = ParseOp(name);
  if (!op) throw UsageError("unknown operation '" + name + "'");
  return *op;
}

// Options shared by `transform` and `graph-op`.
struct OpOptions {
  std::string at;
  std::string at2;
  std::string fresh;
  std::vector<std::string> vertices;
  std::vector<std::string> correspondence;  // "second=first"
  int power = 1;

  void Register(CLI::App* app) {
    app->add_option("--at", at, "Distinguished vertex v");
    app->add_option("--at2", at2, "Second vertex (w, or edge endpoint)");
    app->add_option("--new-id", fresh, "Id for a newly created vertex");
    app->add_option("--vertices,--neighbors,--keep,--module,--side2",
                    vertices,
                    "Vertex set: kept vertices, module, neighbors of the "
                    "new vertex, or the second side of a bipartition")
        ->delimiter(',');
    app->add_option("--map", correspondence,
                    "sum/difference: second-operand=first-operand pairs")
        ->delimiter(',');
    app->add_option("--power", power, "Exponent for power");
  }

  OpArgs Build() const {
    OpArgs args;
    args.at = OptionalId(at);
    args.at2 = OptionalId(at2);
    args.fresh = OptionalId(fresh);
    args.vertices = ParseIds(vertices);
    for (const std::string& pair : correspondence) {
      const std::size_t eq = pair.find('=');
      if (eq == std::string::npos) {
        throw UsageError("--map entries look like second=first, got '" +
                         pair + "'");
      }
      args.correspondence[ParseId(pair.substr(0, eq))] =
          ParseId(pair.substr(eq + 1));
    }
    args.power = power;
    return args;
  }
};

template <typename Expr>
TransformResult<Expr> RunTransform(Op op, const std::vector<AnyExpr>& in,
                                   const OpArgs& args, bool degree_opt) {
  std::vector<Expr> operands;
  for (const AnyExpr& x : in) {
    if (!std::holds_alternative<Expr>(x)) {
      throw PreconditionError("operands must use the same calculus");
    }
    operands.push_back(std::get<Expr>(x));
  }
  return ApplyTransform(op, std::span<const Expr>(operands), args,
                        degree_opt);
}

WidthParam ParseParam(const std::string& s) {
  if (s == "nlc") return WidthParam::kNlc;
  if (s == "cw") return WidthParam::kCw;
  throw UsageError("--param must be nlc or cw");
}

OracleLimits Limits(WidthParam param, int max_vertices) {
  OracleLimits limits{max_vertices};
  const int def =
      param == WidthParam::kNlc ? kDefaultNlcVertexCap : kDefaultCwVertexCap;
  if (max_vertices > def) {
    std::cerr << "warning: raising the vertex cap to " << max_vertices
              << " may take a long time\n";
  }
  return limits;
}

int Run(int argc, char** argv) {
  CLI::App app{"Clique-width and NLC-width expression toolkit", "cwexpr"};
  app.require_subcommand(1);
  std::string format;
  std::uint64_t seed = 0;
  bool seed_given = false;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: dot, edgelist or expr")
        ->check(CLI::IsMember({"dot", "edgelist", "expr"}));
  };

  // eval
  std::string expr_path;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", expr_path, "Expression file or -")->required();
  add_format(eval);

  // width
  CLI::App* width = app.add_subcommand("width", "Largest label of an expression");
  width->add_option("expr", expr_path, "Expression file or -")->required();
  bool normalize = false;
  width->add_flag("--normalize", normalize, "Compact labels first");

  // convert
  std::string to;
  CLI::App* convert = app.add_subcommand("convert", "Translate between calculi");
  convert->add_option("expr", expr_path, "Expression file or -")->required();
  convert->add_option("--to", to, "Target calculus")
      ->required()
      ->check(CLI::IsMember({"nlc", "cw"}));
  add_format(convert);

  // transform
  std::string op_name;
  std::vector<std::string> operand_paths;
  bool degree_opt = false;
  OpOptions op_options;
  CLI::App* transform =
      app.add_subcommand("transform", "Expression-level graph operation");
  transform->add_option("op", op_name, "Operation")->required();
  transform->add_option("operands", operand_paths, "Expression files")
      ->required();
  transform->add_flag("--degree-opt", degree_opt,
                      "Degree-sensitive variant (local-complement, "
                      "vertex-add)");
  op_options.Register(transform);
  add_format(transform);

  // graph-op
  CLI::App* graph_op = app.add_subcommand("graph-op", "Operation on graphs");
  graph_op->add_option("op", op_name, "Operation")->required();
  graph_op->add_option("operands", operand_paths, "Graph files")->required();
  OpOptions graph_options;
  graph_options.Register(graph_op);
  add_format(graph_op);

  // exact
  std::string graph_path;
  std::string param = "nlc";
  int max_vertices = 0;
  int decide = 0;
  CLI::App* exact = app.add_subcommand("exact", "Exact width with witness");
  exact->add_option("graph", graph_path, "Graph file or -")->required();
  exact->add_option("--param", param, "nlc or cw")->capture_default_str();
  exact->add_option("--max-vertices", max_vertices,
                    "Raise the vertex cap (NLC up to 16, CW up to 10)");
  exact->add_option("--decide", decide,
                    "Only decide width <= K; exit 1 if not");
  add_format(exact);

  // iso
  std::vector<std::string> iso_paths;
  bool respect_labels = false;
  CLI::App* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("graphs", iso_paths, "Two graph files")
      ->required()
      ->expected(2);
  iso->add_flag("--labels", respect_labels, "Require equal labels");

  // gen
  std::string family;
  std::vector<std::string> gen_params;
  CLI::App* gen = app.add_subcommand(
      "gen",
      "Generate a graph family (path, cycle, complete, complete-bipartite, "
      "star, grid, paw, random-tree, random-graph) or an expression "
      "(random-nlc N K, random-cw N K, tree-nlc, tree-cw, recipe TEXT, "
      "cotree TEXT)");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", gen_params, "Family parameters");
  gen->add_option("--seed", seed, "Seed for random families");
  std::string calculus = "nlc";
  gen->add_option("--calculus", calculus, "Calculus for recipe/cotree")
      ->check(CLI::IsMember({"nlc", "cw"}))
      ->capture_default_str();
  add_format(gen);

  // check
  std::string check_expr;
  bool check_iso = false;
  bool check_labels = false;
  CLI::App* check = app.add_subcommand(
      "check", "Exit 0 iff the expression evaluates to the graph");
  check->add_option("expr", check_expr, "Expression file or -")->required();
  check->add_option("graph", graph_path, "Graph file")->required();
  check->add_flag("--iso", check_iso, "Compare up to isomorphism");
  check->add_flag("--labels", check_labels, "Compare labels as well");

  if (argc > 1 && argv[1][0] != '-') {
    const std::string name = argv[1];
    bool known = false;
    for (const CLI::App* sub : app.get_subcommands({})) {
      known |= sub->get_name() == name;
    }
    if (!known) throw UsageError("unknown command '" + name + "'");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kError;
  }
  seed_given = gen->count("--seed") > 0;

  if (*eval) {
    if (format == "expr") {
      throw UsageError("eval prints graphs; use --format dot or edgelist");
    }
    PrintGraph(EvaluateAny(ReadExpr(expr_path)),
               format.empty() ? "edgelist" : format);
    return kOk;
  }
  if (*width) {
    AnyExpr x = ReadExpr(expr_path);
    if (normalize) {
      x = std::visit([](const auto& e) { return AnyExpr(NormalizeLabels(e)); },
                     x);
    }
    std::cout << std::visit([](const auto& e) { return WidthOf(e); }, x)
              << "\n";
    return kOk;
  }
  if (*convert) {
    const AnyExpr x = ReadExpr(expr_path);
    AnyExpr out = x;
    if (to == "nlc" && std::holds_alternative<CwExpr>(x)) {
      out = CwToNlc(std::get<CwExpr>(x));
    } else if (to == "cw" && std::holds_alternative<NlcExpr>(x)) {
      out = NlcToCw(std::get<NlcExpr>(x));
    }
    PrintExpr(out, format.empty() ? "expr" : format);
    return kOk;
  }
  if (*transform) {
    const Op op = ParseOpOrThrow(op_name);
    std::vector<AnyExpr> in;
    for (const std::string& p : operand_paths) in.push_back(ReadExpr(p));
    const OpArgs args = op_options.Build();
    const auto report = [&](const auto& r) {
      std::cerr << "bound " << r.bound << "\n";
      PrintExpr(AnyExpr(r.expr), format.empty() ? "expr" : format);
    };
    if (std::holds_alternative<NlcExpr>(in.front())) {
      report(RunTransform<NlcExpr>(op, in, args, degree_opt));
    } else {
      report(RunTransform<CwExpr>(op, in, args, degree_opt));
    }
    return kOk;
  }
  if (*graph_op) {
    const Op op = ParseOpOrThrow(op_name);
    std::vector<LabeledGraph> in;
    for (const std::string& p : operand_paths) in.push_back(ReadGraph(p));
    PrintGraph(ApplyGraphOp(op, in, graph_options.Build()),
               format.empty() ? "edgelist" : format);
    return kOk;
  }
  if (*exact) {
    const WidthParam p = ParseParam(param);
    const OracleLimits limits = Limits(p, max_vertices);
    const LabeledGraph g = ReadGraph(graph_path);
    const std::string fmt = format.empty() ? "expr" : format;
    if (exact->count("--decide")) {
      std::optional<AnyExpr> witness;
      if (p == WidthParam::kNlc) {
        if (auto w = DecideNlcWidth(g, decide, limits)) witness = *w;
      } else {
        if (auto w = DecideCwWidth(g, decide, limits)) witness = *w;
      }
      if (!witness) {
        std::cout << "no\n";
        return kFailed;
      }
      std::cout << "yes\n";
      PrintExpr(*witness, fmt);
      return kOk;
    }
    const WidthCertificate c = ExactWidth(g, p, limits);
    std::cout << c.value << "\n";
    PrintExpr(c.witness, fmt);
    return kOk;
  }
  if (*iso) {
    const LabeledGraph a = ReadGraph(iso_paths[0]);
    const LabeledGraph b = ReadGraph(iso_paths[1]);
    const auto map = FindIsomorphism(a, b, respect_labels);
    if (!map) {
      std::cout << "not isomorphic\n";
      return kFailed;
    }
    std::cout << "isomorphic\n";
    for (const auto& [u, v] : *map) {
      std::cout << u.str() << " -> " << v.str() << "\n";
    }
    return kOk;
  }
  if (*gen) {
    std::vector<int> nums;
    const auto ints = [&](std::size_t count) {
      if (gen_params.size() != count) {
        throw UsageError(family + " takes " + std::to_string(count) +
                         " integer parameter(s)");
      }
      for (const std::string& s : gen_params) {
        try {
          std::size_t used = 0;
          nums.push_back(std::stoi(s, &used));
          if (used != s.size()) throw std::invalid_argument(s);
        } catch (const std::logic_error&) {
          throw UsageError("parameter '" + s + "' is not an integer");
        }
      }
    };
    const auto need_seed = [&]() {
      if (!seed_given) throw UsageError(family + " needs --seed");
      return Rng(seed);
    };
    const auto text = [&]() {
      if (gen_params.size() != 1) {
        throw UsageError(family + " takes one text parameter");
      }
      return gen_params[0];
    };
    const bool cw = calculus == "cw";
    const auto emit = [&](const AnyExpr& x) {
      PrintExpr(x, format.empty() ? "expr" : format);
    };
    if (family == "random-nlc" || family == "random-cw") {
      ints(2);
      Rng rng = need_seed();
      if (family == "random-nlc") {
        emit(RandomNlcExpr(rng, nums[0], nums[1]));
      } else {
        emit(RandomCwExpr(rng, nums[0], nums[1]));
      }
      return kOk;
    }
    if (family == "tree-nlc" || family == "tree-cw") {
      // The tree is read from a graph file.
      const LabeledGraph t = ReadGraph(text());
      if (family == "tree-nlc") {
        emit(TreeToNlc3(t));
      } else {
        emit(TreeToCw3(t));
      }
      return kOk;
    }
    if (family == "recipe") {
      const BuiltExpressions b = TreeCographExpressions(*ParseRecipe(text()));
      emit(cw ? AnyExpr(b.cw) : AnyExpr(b.nlc));
      return kOk;
    }
    if (family == "random-recipe") {
      ints(1);
      Rng rng = need_seed();
      std::cout << RandomRecipe(rng, nums[0]) << "\n";
      return kOk;
    }
    if (family == "cotree") {
      const BuiltExpressions b = CographExpressions(text(), "c");
      emit(cw ? AnyExpr(b.cw) : AnyExpr(b.nlc));
      return kOk;
    }
    for (const std::string& s : gen_params) {
      try {
        nums.push_back(std::stoi(s));
      } catch (const std::logic_error&) {
        throw UsageError("parameter '" + s + "' is not an integer");
      }
    }
    const std::optional<std::uint64_t> maybe_seed =
        seed_given ? std::optional<std::uint64_t>(seed) : std::nullopt;
    PrintGraph(GenFamily(family, nums, maybe_seed),
               format.empty() ? "edgelist" : format);
    return kOk;
  }
  if (*check) {
    const LabeledGraph actual = EvaluateAny(ReadExpr(check_expr));
    const LabeledGraph expected = ReadGraph(graph_path);
    bool same;
    if (check_iso) {
      same = Isomorphic(actual, expected, check_labels);
    } else if (check_labels) {
      same = actual == expected;
    } else {
      same = SameUnlabeled(actual, expected);
    }
    if (same) {
      std::cout << "ok\n";
      return kOk;
    }
    std::cout << "mismatch\n";
    if (!check_iso) {
      std::cout << DescribeDifference(expected, actual, check_labels);
    }
    return kFailed;
  }
  return kError;
}

}  // namespace
}  // namespace cwexpr

int main(int argc, char** argv) {
  using namespace cwexpr;
  try {
    return Run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
  }
  return kError;
}
