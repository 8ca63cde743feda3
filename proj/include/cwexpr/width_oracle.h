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

#ifndef CWEXPR_WIDTH_ORACLE_H_
#define CWEXPR_WIDTH_ORACLE_H_

#include <optional>
#include <variant>

#include "cwexpr/expr.h"
#include "cwexpr/graph.h"

// Exact NLC-width and clique-width of small graphs by exhaustive dynamic
// programming over vertex subsets, with witness expressions. Input labels
// are ignored. Results are deterministic.
namespace cwexpr {

enum class WidthParam { kNlc, kCw };

inline constexpr int kDefaultNlcVertexCap = 8;
inline constexpr int kDefaultCwVertexCap = 6;
// Raising a cap beyond these is refused outright.
inline constexpr int kMaxNlcVertexCap = 16;
inline constexpr int kMaxCwVertexCap = 10;

struct OracleLimits {
  // 0 selects the default cap of the parameter.
  int max_vertices = 0;
};

int VertexCap(WidthParam param, const OracleLimits& limits);

// A width-k witness when one exists. Throws LimitError above the cap.
std::optional<NlcExpr> DecideNlcWidth(const LabeledGraph& g, int k,
                                      const OracleLimits& limits = {});
std::optional<CwExpr> DecideCwWidth(const LabeledGraph& g, int k,
                                    const OracleLimits& limits = {});

struct WidthCertificate {
  LabeledGraph graph;
  WidthParam param;
  int value;
  // Evaluates to `graph` (vertices and edges; labels are arbitrary) and has
  // WidthOf(witness) == value.
  std::variant<NlcExpr, CwExpr> witness;
};

// Smallest k accepted by the decision procedure, scanning k = 1, 2, ...
WidthCertificate ExactWidth(const LabeledGraph& g, WidthParam param,
                            const OracleLimits& limits = {});
inline int ExactNlcWidth(const LabeledGraph& g,
                         const OracleLimits& limits = {}) {
  return ExactWidth(g, WidthParam::kNlc, limits).value;
}
inline int ExactCwWidth(const LabeledGraph& g,
                        const OracleLimits& limits = {}) {
  return ExactWidth(g, WidthParam::kCw, limits).value;
}

}  // namespace cwexpr

#endif  // CWEXPR_WIDTH_ORACLE_H_
