import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from composition_codec.compositions import (
    fragment,
    parse,
    parse_json,
    serialize,
    serialize_json,
)
from composition_codec.errors import InvalidMultiset, MalformedInput

GOLDEN_101 = """n=3
1 0 1 2
1 1 0 1
2 1 1 2
3 1 2 1
"""

bit_strings = st.text(alphabet="01", min_size=1, max_size=24)


def test_golden_document():
    assert serialize(fragment("101")) == GOLDEN_101


def test_parse_golden_document():
    assert parse(GOLDEN_101) == fragment("101")


def test_json_mirror_schema():
    doc = json.loads(serialize_json(fragment("101")))
    assert doc == {
        "version": 1,
        "n": 3,
        "classes": [
            [1, [[0, 1, 2], [1, 0, 1]]],
            [2, [[1, 1, 2]]],
            [3, [[1, 2, 1]]],
        ],
    }


@given(bit_strings)
def test_text_round_trip(s):
    multiset = fragment(s)
    assert parse(serialize(multiset)) == multiset


@given(bit_strings)
def test_json_round_trip(s):
    multiset = fragment(s)
    assert parse_json(serialize_json(multiset)) == multiset


def test_canonical_corpus_round_trips():
    for s in ("0", "1", "01", "101", "100101", "1010001010", "00000100001"):
        multiset = fragment(s)
        assert parse(serialize(multiset)) == multiset
        assert parse_json(serialize_json(multiset)) == multiset


def test_parse_reports_line_numbers():
    with pytest.raises(MalformedInput, match="line 3"):
        parse("n=3\n1 0 1 2\n1 1 0\n")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "m=3\n",
        "n=zero\n",
        "n=0\n",
        "n=3\n1 0 1 two\n",
        "n=3\n4 2 2 1\n",
        "n=3\n2 2 2 1\n",
        "n=3\n1 0 1 0\n",
        "n=3\n1 0 1 1\n1 0 1 2\n",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(MalformedInput):
        parse(text)


def test_missing_class_is_caught_by_validation_not_parsing():
    text = "n=3\n1 0 1 2\n1 1 0 1\n3 1 2 1\n"
    multiset = parse(text)  # structurally fine
    with pytest.raises(InvalidMultiset):
        multiset.validate()


@pytest.mark.parametrize(
    "text",
    [
        "[]",
        "{}",
        '{"version": 2, "n": 1, "classes": []}',
        '{"version": 1, "n": -1, "classes": []}',
        '{"version": 1, "n": 2}',
        '{"version": 1, "n": 2, "classes": [[1, [[0, 1]]]]}',
        '{"version": 1, "n": 2, "classes": [[1, [[0, 2, 1]]]]}',
        '{"version": 1, "n": 2, "classes": [[3, [[1, 2, 1]]]]}',
        "not json",
    ],
)
def test_parse_json_rejects_malformed(text):
    with pytest.raises(MalformedInput):
        parse_json(text)


def test_serialization_is_sorted_and_stable():
    multiset = fragment("1100101")
    text = serialize(multiset)
    assert text == serialize(parse(text))
    rows = [tuple(int(f) for f in line.split()) for line in text.splitlines()[1:]]
    assert rows == sorted(rows)
