import json

import pytest

from flipdist.errors import InvalidInputError
from flipdist.families import family_a, zigzag
from flipdist.formats import (
    format_text,
    from_json_obj,
    parse_any,
    parse_pair_literal,
    parse_text,
    to_json_obj,
)
from flipdist.polygon import fan, uniform_random


def test_text_round_trip():
    for seed in range(25):
        t = uniform_random(9, seed)
        assert parse_text(format_text(t)) == t


def test_text_format_sorted():
    assert format_text(zigzag(6)) == "n=6;interior=1-4,1-5,2-4"


def test_triangle_text():
    assert format_text(fan(3, 0)) == "n=3;interior="
    assert parse_text("n=3;interior=").n == 3


def test_json_round_trip():
    for seed in range(25):
        t = uniform_random(8, seed)
        assert from_json_obj(json.loads(json.dumps(to_json_obj(t)))) == t


def test_parse_any_accepts_all_forms():
    t = fan(6, 2)
    assert parse_any(format_text(t)) == t
    assert parse_any(json.dumps(to_json_obj(t))) == t
    assert parse_any("A-:6") == family_a(6).first
    assert parse_any("A+:6") == family_a(6).second
    assert parse_any("A:6") == family_a(6).first


def test_parse_rejects_invariant_violations():
    with pytest.raises(InvalidInputError):
        parse_text("n=6;interior=0-2")
    with pytest.raises(InvalidInputError):
        parse_text("n=6;interior=0-2,1-3,0-4")
    with pytest.raises(InvalidInputError):
        parse_text("six sided")
    with pytest.raises(InvalidInputError):
        from_json_obj({"n": 6})


def test_pair_literal():
    pair = parse_pair_literal("A:7")
    assert pair.first == family_a(7).first
    with pytest.raises(InvalidInputError):
        parse_pair_literal("A-:7")
