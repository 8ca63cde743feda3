# Copyright 2026 The cwexpr Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Clique-width and NLC-width expressions: evaluation, conversion,
graph-operation transforms and exact widths of small graphs."""

from ._cwexpr import (
    CwExpr,
    Graph,
    LimitError,
    NlcExpr,
    ParseError,
    PreconditionError,
    cw_to_nlc,
    exact_width,
    gen,
    graph_op,
    isomorphic,
    nlc_to_cw,
    parse_cw,
    parse_expr,
    parse_nlc,
    transform,
)

__all__ = [
    "CwExpr",
    "Graph",
    "LimitError",
    "NlcExpr",
    "ParseError",
    "PreconditionError",
    "cw_to_nlc",
    "exact_width",
    "gen",
    "graph_op",
    "isomorphic",
    "nlc_to_cw",
    "parse_cw",
    "parse_expr",
    "parse_nlc",
    "transform",
]
