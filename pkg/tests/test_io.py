import json

import pytest
from hypothesis import given

from homshift.graphs import path_graph
from homshift.io import (
    ParseError,
    ideal_from_dict,
    ideal_to_dict,
    ideal_to_json,
    parse_graph,
    parse_ideal,
    parse_monomial,
    render_graph,
    render_ideal,
    render_monomial,
)
from homshift.monomial import MonomialIdeal
from strategies import ideals


def test_parse_examples():
    assert parse_ideal("x1^2*x2", 2).gens == ((2, 1),)
    assert parse_ideal('{"nvars":2,"gens":[[2,0],[1,1]]}') == parse_ideal("x1^2, x1*x2")
    with pytest.raises(ParseError):
        parse_ideal("x3", 2)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse_ideal("x1*x2,\nx1*y2")
    assert info.value.line == 2
    for bad in ["x1^-1", "x0", "x1^", "x1**x2", "2*x1"]:
        with pytest.raises(ParseError):
            parse_ideal(bad)


def test_parse_monomial_merges_repeated_variables():
    assert parse_monomial("x1*x1^2*x3", 3) == {0: 3, 2: 1}


def test_identity_and_unit():
    assert render_monomial((0, 0)) == "1"
    assert parse_ideal("1", 2).is_unit()
    assert render_ideal(MonomialIdeal.zero(3)) == ""


def test_json_document_validation():
    with pytest.raises(ValueError):
        ideal_from_dict({"nvars": 2, "gens": [[1, 0, 0]]})
    with pytest.raises(ValueError):
        ideal_from_dict({"gens": [[1]]})


@given(ideals())
def test_round_trips(I):
    assert parse_ideal(render_ideal(I), I.nvars) == I
    assert parse_ideal(ideal_to_json(I)) == I
    assert ideal_from_dict(json.loads(json.dumps(ideal_to_dict(I)))) == I


def test_graph_formats():
    inline = parse_graph("1-2,2-3,3-4")
    assert inline == path_graph(4)
    assert parse_graph(render_graph(inline)) == inline
    assert parse_graph("n 5\n1 2\n").n == 5
    with pytest.raises(ParseError):
        parse_graph("n 2\n1 3\n")
    with pytest.raises(ParseError):
        parse_graph("1-1")
