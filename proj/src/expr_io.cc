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

#include "cwexpr/expr_io.h"

#include <cctype>
#include <limits>
#include <set>

#include "cwexpr/errors.h"

namespace cwexpr {
namespace {

bool IsIdChar(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) &&
         std::string_view("(),[]{}#").find(c) == std::string_view::npos;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NlcExpr Nlc() {
    NlcExpr x = NlcTerm();
    Finish();
    return x;
  }

  CwExpr Cw() {
    CwExpr x = CwTerm();
    Finish();
    return x;
  }

 private:
  NlcExpr NlcTerm() {
    SkipSpace();
    const std::size_t start = pos_;
    const std::string head = Word();
    if (head == "v") {
      VertexId id = LeafBody(start);
      return NlcExpr::Leaf(std::move(id), last_label_);
    }
    if (head == "x") {
      Expect('[');
      PairSet pairs;
      if (!TryConsume(']')) {
        do {
          const Label a = Int();
          Expect('-');
          const Label b = Int();
          pairs.emplace(a, b);
        } while (TryConsume(','));
        Expect(']');
      }
      Expect('(');
      NlcExpr left = NlcTerm();
      ExpectSecondOperand();
      NlcExpr right = NlcTerm();
      Expect(')');
      return NlcExpr::Union(std::move(pairs), std::move(left),
                            std::move(right));
    }
    if (head == "r") {
      Expect('{');
      LabelMap map;
      if (!TryConsume('}')) {
        do {
          const std::size_t at = pos_;
          const Label a = Int();
          ExpectArrow();
          const Label b = Int();
          if (!map.emplace(a, b).second) {
            Fail("label " + std::to_string(a) + " mapped twice", at);
          }
        } while (TryConsume(','));
        Expect('}');
      }
      Expect('(');
      NlcExpr child = NlcTerm();
      ExpectSingleOperand();
      return NlcExpr::Relabel(std::move(map), std::move(child));
    }
    Fail(head.empty() ? "expected an NLC expression"
                      : "unknown NLC operator '" + head + "'",
         start);
  }

  CwExpr CwTerm() {
    SkipSpace();
    const std::size_t start = pos_;
    const std::string head = Word();
    if (head == "v") {
      VertexId id = LeafBody(start);
      return CwExpr::Leaf(std::move(id), last_label_);
    }
    if (head == "u") {
      Expect('(');
      CwExpr left = CwTerm();
      ExpectSecondOperand();
      CwExpr right = CwTerm();
      Expect(')');
      return CwExpr::DisjointUnion(std::move(left), std::move(right));
    }
    if (head == "eta" || head == "rho") {
      Expect('(');
      const std::size_t at = pos_;
      const Label a = Int();
      if (head == "eta") {
        Expect(',');
      } else {
        ExpectArrow();
      }
      const Label b = Int();
      Expect(')');
      if (a == b) Fail(head + " needs two distinct labels", at);
      Expect('(');
      CwExpr child = CwTerm();
      ExpectSingleOperand();
      return head == "eta" ? CwExpr::AddEdges(a, b, std::move(child))
                           : CwExpr::Relabel(a, b, std::move(child));
    }
    Fail(head.empty() ? "expected a CW expression"
                      : "unknown CW operator '" + head + "'",
         start);
  }

  // Parses "(ID,INT)" after a leaf head; sets last_label_.
  VertexId LeafBody(std::size_t start) {
    Expect('(');
    SkipSpace();
    const std::size_t id_start = pos_;
    while (pos_ < text_.size() && IsIdChar(text_[pos_])) ++pos_;
    if (pos_ == id_start) Fail("expected a vertex id", id_start);
    std::string token(text_.substr(id_start, pos_ - id_start));
    Expect(',');
    last_label_ = Int();
    Expect(')');
    if (!ids_.insert(token).second) {
      Fail("duplicate leaf id '" + token + "'", start);
    }
    return VertexId(std::move(token));
  }

  void ExpectSecondOperand() {
    SkipSpace();
    if (Peek() == ')') Fail("union takes two operands, got one", pos_);
    Expect(',');
  }

  void ExpectSingleOperand() {
    SkipSpace();
    if (Peek() == ',') Fail("operator takes one operand, got more", pos_);
    Expect(')');
  }

  void ExpectArrow() {
    SkipSpace();
    if (text_.substr(pos_, 2) != "->") Fail("expected '->'", pos_);
    pos_ += 2;
  }

  Label Int() {
    SkipSpace();
    const std::size_t start = pos_;
    if (Peek() == '-' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      Fail("labels must be >= 1", start);
    }
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<Label>::max()) {
        Fail("label too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) Fail("expected a label", start);
    if (value < 1) Fail("labels must be >= 1", start);
    return static_cast<Label>(value);
  }

  std::string Word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void Expect(char c) {
    SkipSpace();
    if (Peek() != c) {
      Fail(std::string("expected '") + c + "'" + Found(), pos_);
    }
    ++pos_;
  }

  bool TryConsume(char c) {
    SkipSpace();
    if (Peek() != c) return false;
    ++pos_;
    return true;
  }

  void Finish() {
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing input", pos_);
  }

  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string Found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void Fail(const std::string& message, std::size_t at) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Label last_label_ = 0;
  std::set<std::string> ids_;
};

void Print(const NlcExpr& x, std::string& out) {
  switch (x.kind()) {
    case NlcExpr::Kind::kLeaf:
      out += "v(" + x.vertex().str() + "," + std::to_string(x.label()) + ")";
      return;
    case NlcExpr::Kind::kUnion: {
      out += "x[";
      bool first = true;
      for (const auto& [a, b] : x.pairs()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(a) + "-" + std::to_string(b);
      }
      out += "](";
      Print(x.left(), out);
      out += ',';
      Print(x.right(), out);
      out += ')';
      return;
    }
    case NlcExpr::Kind::kRelabel: {
      out += "r{";
      bool first = true;
      for (const auto& [a, b] : x.map()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(a) + "->" + std::to_string(b);
      }
      out += "}(";
      Print(x.child(), out);
      out += ')';
      return;
    }
  }
}

void Print(const CwExpr& x, std::string& out) {
  switch (x.kind()) {
    case CwExpr::Kind::kLeaf:
      out += "v(" + x.vertex().str() + "," + std::to_string(x.label()) + ")";
      return;
    case CwExpr::Kind::kUnion:
      out += "u(";
      Print(x.left(), out);
      out += ',';
      Print(x.right(), out);
      out += ')';
      return;
    case CwExpr::Kind::kAddEdges:
      out += "eta(" + std::to_string(x.a()) + "," + std::to_string(x.b()) +
             ")(";
      Print(x.child(), out);
      out += ')';
      return;
    case CwExpr::Kind::kRelabel:
      out += "rho(" + std::to_string(x.a()) + "->" + std::to_string(x.b()) +
             ")(";
      Print(x.child(), out);
      out += ')';
      return;
  }
}

}  // namespace

NlcExpr ParseNlc(std::string_view text) { return Parser(text).Nlc(); }

CwExpr ParseCw(std::string_view text) { return Parser(text).Cw(); }

AnyExpr ParseAnyExpr(std::string_view text) {
  // Try both grammars; on double failure report the attempt that got
  // further, which is the one whose operators the text actually uses.
  try {
    return ParseNlc(text);
  } catch (const ParseError& nlc_error) {
    try {
      return ParseCw(text);
    } catch (const ParseError& cw_error) {
      const auto key = [](const ParseError& e) {
        return std::make_pair(e.line(), e.column());
      };
      if (key(cw_error) > key(nlc_error)) throw;
      throw nlc_error;
    }
  }
}

std::string ToString(const NlcExpr& x) {
  std::string out;
  Print(x, out);
  return out;
}

std::string ToString(const CwExpr& x) {
  std::string out;
  Print(x, out);
  return out;
}

std::string ToString(const AnyExpr& x) {
  return std::visit([](const auto& e) { return ToString(e); }, x);
}

}  // namespace cwexpr
