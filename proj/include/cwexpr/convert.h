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

#ifndef CWEXPR_CONVERT_H_
#define CWEXPR_CONVERT_H_

#include "cwexpr/expr.h"

namespace cwexpr {

// Equivalent NLC expression; same vertices, labels and edges. The width
// does not grow: every AddEdges is pushed down to the unions where the
// affected vertex pairs meet.
NlcExpr CwToNlc(const CwExpr& x);

// Equivalent clique-width expression of width at most 2 * WidthOf(x). Each
// union shifts the right operand's labels into the bank k+1..2k, adds one
// AddEdges per pair and folds the bank back.
CwExpr NlcToCw(const NlcExpr& x);

}  // namespace cwexpr

#endif  // CWEXPR_CONVERT_H_
