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

import pytest

import cwexpr

PAW = "x[1-1](v(a,1),x[](v(d,1),x[1-1](v(b,1),v(c,1))))"


def test_parse_and_evaluate():
    x = cwexpr.parse_nlc(PAW)
    assert x.width == 1
    g = x.evaluate()
    assert sorted(g.vertices()) == ["a", "b", "c", "d"]
    assert len(g.edges()) == 4
    assert str(cwexpr.parse_nlc(str(x))) == str(x)


def test_parse_expr_detects_calculus():
    assert isinstance(cwexpr.parse_expr(PAW), cwexpr.NlcExpr)
    assert isinstance(cwexpr.parse_expr("eta(1,2)(u(v(a,1),v(b,2)))"),
                      cwexpr.CwExpr)


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        cwexpr.parse_nlc("x[1-2](v(a,1))")


def test_conversion_keeps_graph():
    x = cwexpr.parse_nlc(PAW)
    c = cwexpr.nlc_to_cw(x)
    assert c.width <= 2 * x.width
    assert c.evaluate().same_unlabeled(x.evaluate())
    assert cwexpr.cw_to_nlc(c).evaluate().same_unlabeled(x.evaluate())


def test_switching_paw_gives_p4():
    expr, bound = cwexpr.transform("switch", [cwexpr.parse_nlc(PAW)], at="b")
    assert bound == 2
    assert expr.width <= bound
    assert cwexpr.isomorphic(expr.evaluate(), cwexpr.gen("path", [4]))


def test_transform_matches_graph_op():
    x = cwexpr.parse_nlc(PAW)
    expr, _ = cwexpr.transform("vertex-add", [x], new_id="z",
                               vertices=["d", "b"])
    expected = cwexpr.graph_op("vertex-add", [x.evaluate()], new_id="z",
                               vertices=["d", "b"])
    assert expr.evaluate().same_unlabeled(expected)


def test_exact_widths():
    paw = cwexpr.gen("paw")
    value, witness = cwexpr.exact_width(paw, "cw")
    assert value == 2
    assert witness.width == 2
    assert witness.evaluate().same_unlabeled(paw)
    assert cwexpr.exact_width(cwexpr.gen("path", [4]), "nlc")[0] == 2


def test_limits_and_preconditions():
    with pytest.raises(cwexpr.LimitError):
        cwexpr.exact_width(cwexpr.gen("path", [12]))
    with pytest.raises(cwexpr.PreconditionError):
        cwexpr.gen("random-tree", [5])
    assert cwexpr.gen("random-tree", [5], seed=3) == cwexpr.gen(
        "random-tree", [5], seed=3)


def test_graph_round_trip():
    g = cwexpr.Graph()
    g.add_vertex("a", 2)
    g.add_vertex("b")
    g.add_edge("a", "b")
    assert cwexpr.Graph.parse(g.to_text()) == g
    assert g.labels() == {"a": 2, "b": 1}
    assert "graph G" in g.to_dot()
