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

#include "cwexpr/graph_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cwexpr/errors.h"

namespace cwexpr {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

LabeledGraph ParseGraph(std::string_view text) {
  LabeledGraph g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string_view> tok = Tokens(line);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg) -> void {
      throw ParseError(msg, line_no, 1);
    };
    auto id = [&](std::string_view t) {
      if (!VertexId::IsValidToken(t)) fail("invalid vertex id '" + std::string(t) + "'");
      return VertexId(std::string(t));
    };
    try {
      if (tok[0] == "v") {
        if (tok.size() != 3) fail("expected 'v <id> <label>'");
        int label = 0;
        auto [ptr, ec] = std::from_chars(tok[2].data(),
                                         tok[2].data() + tok[2].size(), label);
        if (ec != std::errc() || ptr != tok[2].data() + tok[2].size()) {
          fail("label must be an integer");
        }
        if (label < 1) fail("label must be >= 1");
        g.AddVertex(id(tok[1]), label);
      } else if (tok[0] == "e") {
        if (tok.size() != 3) fail("expected 'e <id> <id>'");
        const VertexId u = id(tok[1]);
        const VertexId v = id(tok[2]);
        if (!g.HasVertex(u) || !g.HasVertex(v)) {
          fail("edge endpoint not declared before use");
        }
        g.AddEdge(u, v);
      } else {
        fail("unknown record '" + std::string(tok[0]) + "'");
      }
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), line_no, 1);
    }
    if (end == text.size()) break;
  }
  return g;
}

LabeledGraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

std::string FormatGraph(const LabeledGraph& g) {
  std::string out;
  for (const auto& [v, label] : g.labels()) {
    out += "v " + v.str() + " " + std::to_string(label) + "\n";
  }
  for (const auto& [u, v] : g.Edges()) {
    out += "e " + u.str() + " " + v.str() + "\n";
  }
  return out;
}

std::string FormatDot(const LabeledGraph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (const auto& [v, label] : g.labels()) {
    out += "  " + Quote(v.str()) +
           " [label=" + Quote(v.str() + ":" + std::to_string(label)) + "];\n";
  }
  for (const auto& [u, v] : g.Edges()) {
    out += "  " + Quote(u.str()) + " -- " + Quote(v.str()) + ";\n";
  }
  return out + "}\n";
}

}  // namespace cwexpr
