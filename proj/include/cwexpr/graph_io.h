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

#ifndef CWEXPR_GRAPH_IO_H_
#define CWEXPR_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "cwexpr/graph.h"

namespace cwexpr {

// Line format:
//   v <id> <label>   declares a vertex
//   e <id> <id>      declares an edge between declared vertices
//   # ...            comment (also allowed after a record)
// Throws ParseError with the offending line number.
LabeledGraph ParseGraph(std::string_view text);
LabeledGraph ReadGraphFile(const std::string& path);

// Vertices then edges, each sorted by id. ParseGraph(FormatGraph(g)) == g.
std::string FormatGraph(const LabeledGraph& g);

// Undirected DOT; every node carries label="<id>:<label>".
std::string FormatDot(const LabeledGraph& g, std::string_view name = "G");

}  // namespace cwexpr

#endif  // CWEXPR_GRAPH_IO_H_
