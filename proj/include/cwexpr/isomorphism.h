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

#ifndef CWEXPR_ISOMORPHISM_H_
#define CWEXPR_ISOMORPHISM_H_

#include <map>
#include <optional>

#include "cwexpr/graph.h"

namespace cwexpr {

// Exhaustive search is capped at this many vertices per graph.
inline constexpr int kIsomorphismVertexCap = 10;

// Returns a bijection V(g1) -> V(g2) preserving adjacency (and labels when
// `respect_labels`), or nullopt if none exists. Backtracking over vertices in
// id order; the first witness found is returned, so results are
// deterministic. Throws LimitError above kIsomorphismVertexCap.
std::optional<std::map<VertexId, VertexId>> FindIsomorphism(
    const LabeledGraph& g1, const LabeledGraph& g2, bool respect_labels);

inline bool Isomorphic(const LabeledGraph& g1, const LabeledGraph& g2,
                       bool respect_labels = false) {
  return FindIsomorphism(g1, g2, respect_labels).has_value();
}

}  // namespace cwexpr

#endif  // CWEXPR_ISOMORPHISM_H_
