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

#ifndef CWEXPR_EXPR_IO_H_
#define CWEXPR_EXPR_IO_H_

#include <string>
#include <string_view>
#include <variant>

#include "cwexpr/expr.h"

namespace cwexpr {

// Text forms (whitespace-insensitive, '#' starts a comment):
//   NLC:  v(ID,INT) | x[P](E,E) | r{M}(E)
//         P = comma-separated INT-INT pairs, M = comma-separated INT->INT
//   CW:   v(ID,INT) | u(E,E) | eta(INT,INT)(E) | rho(INT->INT)(E)
// Parsers throw ParseError with line:column, and also for duplicate leaf ids
// and labels < 1.
NlcExpr ParseNlc(std::string_view text);
CwExpr ParseCw(std::string_view text);

using AnyExpr = std::variant<NlcExpr, CwExpr>;

// Detects the calculus from the operators used. A lone leaf parses as NLC.
AnyExpr ParseAnyExpr(std::string_view text);

std::string ToString(const NlcExpr& x);
std::string ToString(const CwExpr& x);
std::string ToString(const AnyExpr& x);

}  // namespace cwexpr

#endif  // CWEXPR_EXPR_IO_H_
