import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bigcotangent.chern_core import ADESingularity, DomainError, SingularityProfile, SurfaceRecord
from bigcotangent.documents import (
    DocumentError,
    format_rational,
    parse_document,
    parse_rational,
    serialize_document,
)


def doc(**kw):
    base = {"name": "s", "c1_sq": 1053, "c2": 1599, "singularities": []}
    base.update(kw)
    return json.dumps(base)


def test_parse_basic():
    rec = parse_document(doc(singularities=[{"kind": "A", "n": 1, "count": 700}, {"kind": "A", "n": 1, "count": 32}]))
    assert rec.c1_sq == 1053 and rec.c2 == 1599
    assert dict(rec.profile) == {ADESingularity("A", 1): 732}


def test_fraction_pairs():
    rec = parse_document(doc(c1_sq=[6, 4], c2=[-1, 3]))
    assert rec.c1_sq == Fraction(3, 2) and rec.c2 == Fraction(-1, 3)


def test_syntax_error_has_position():
    with pytest.raises(DocumentError) as exc:
        parse_document('{\n  "c1_sq": 5,\n  "c2": ,\n}')
    assert exc.value.line == 3
    assert exc.value.column is not None
    assert "line 3" in str(exc.value)


@pytest.mark.parametrize(
    "kw,path",
    [
        ({"c1_sq": 1.5}, "$.c1_sq"),
        ({"c2": [1, 0]}, "$.c2"),
        ({"c2": True}, "$.c2"),
        ({"singularities": [{"kind": "F", "n": 1, "count": 1}]}, "$.singularities[0].kind"),
        ({"singularities": [{"kind": "A", "n": "1", "count": 1}]}, "$.singularities[0].n"),
        ({"singularities": [{"kind": "A", "n": 1, "count": -2}]}, "$.singularities[0].count"),
        ({"singularities": {}}, "$.singularities"),
        ({"name": 3}, "$.name"),
    ],
)
def test_schema_errors(kw, path):
    with pytest.raises(DocumentError) as exc:
        parse_document(doc(**kw))
    assert exc.value.path == path


def test_missing_field():
    with pytest.raises(DocumentError):
        parse_document('{"c1_sq": 5}')


def test_d3_is_domain_error():
    with pytest.raises(DomainError):
        parse_document(doc(singularities=[{"kind": "D", "n": 3, "count": 1}]))


@pytest.mark.parametrize("x,text", [(Fraction(3, 2), "3/2"), (Fraction(-4, 2), "-2"), (Fraction(0), "0")])
def test_format_rational(x, text):
    assert format_rational(x) == text
    assert parse_rational(text) == x


sings = st.one_of(
    st.integers(1, 20).map(lambda n: ADESingularity("A", n)),
    st.integers(4, 20).map(lambda n: ADESingularity("D", n)),
    st.sampled_from([6, 7, 8]).map(lambda n: ADESingularity("E", n)),
)


@given(
    st.text(max_size=20),
    st.fractions(),
    st.fractions(),
    st.lists(st.tuples(sings, st.integers(0, 100)), max_size=10),
)
def test_round_trip(name, c1, c2, pairs):
    rec = SurfaceRecord(name, c1, c2, SingularityProfile(pairs))
    back = parse_document(serialize_document(rec))
    assert back == rec
    assert serialize_document(back) == serialize_document(rec)
