import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ehrhart_lf.documents import SCHEMA, dump_report, emit_document, load_document, parse_document, report
from ehrhart_lf.errors import ParseError
from ehrhart_lf.geometry import Polytope

from conftest import prism_apex


def test_parse_example():
    doc = {"name": "P1", "dim": 3, "vertices": [["0", "0", "0"], ["4", "0", "0"], ["3", "6", "0"], ["2", "2", "10"]]}
    p = parse_document(doc)
    assert p == prism_apex(1) and p.name == "P1"


def test_parse_json_text_and_integers():
    p = parse_document('{"dim": 1, "vertices": [["-1/2"], [3]]}')
    assert p.vertices == ((Fraction(-1, 2),), (Fraction(3),))


@pytest.mark.parametrize(
    "doc, location",
    [
        ('{"dim": 2, "vertices": [["0","0"],["2","0"],["3//4","1"]]}', "vertices[2][0]"),
        ('{"dim": 2, "vertices": [["0","0"],["2","0"],["1"]]}', "vertices[2]"),
        ('{"dim": 0, "vertices": [["0"]]}', "dim"),
        ('{"dim": true, "vertices": [["0"]]}', "dim"),
        ('{"dim": 2, "vertices": []}', "vertices"),
        ('{"dim": 2, "vertices": [["0","0"],["1","1"],["2","2"]]}', "vertices"),
        ('{"dim": 1, "vertices": [[0.5], ["1"]]}', "vertices[0][0]"),
        ('{"dim": 1, "name": 3, "vertices": [["0"], ["1"]]}', "name"),
        ("[1, 2]", "document"),
        ("{not json", "document"),
    ],
)
def test_parse_errors_carry_locations(doc, location):
    with pytest.raises(ParseError) as info:
        parse_document(doc)
    assert info.value.location == location
    assert str(info.value).startswith(location)


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_document(str(tmp_path / "nope.json"))


coords = st.fractions(min_value=-50, max_value=50, max_denominator=9)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(coords, coords), min_size=3, max_size=3), st.one_of(st.none(), st.text(max_size=8)))
def test_round_trip(pts, name):
    try:
        p = Polytope(tuple(pts), name=name)
    except ValueError:
        return
    back = parse_document(emit_document(p))
    assert back == p and back.name == p.name
    assert emit_document(back) == emit_document(p)


def test_report_is_sorted_and_versioned():
    text = dump_report(report({"command": "check"}, "ok", {"b": 1, "a": 2}))
    data = json.loads(text)
    assert data["schema"] == SCHEMA
    assert list(data) == sorted(data)
    assert text.endswith("\n")
