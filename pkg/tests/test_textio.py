import random

import pytest

from pbcat.core import FinSet, PBij, enumerate_pbij
from pbcat.exact import build_noether_grid, complete_3x3
from pbcat.monoid import CayleyTable
from pbcat.textio import (
    ParseError,
    format_set,
    parse_cayley,
    parse_grid,
    parse_pbij,
    serialize_cayley,
    serialize_grid,
    serialize_pbij,
)

from helpers import fin, universe


def test_format_set_uses_empty_set_symbol():
    assert format_set(fin("a b")) == "a b"
    assert format_set(FinSet()) == "∅"


def test_serialize_pbij_frozen_text():
    f = PBij(fin("1 2 3"), fin("a b"), [("1", "b"), ("3", "a")])
    assert serialize_pbij(f, "f") == "pbij f : 1 2 3 -> a b\n1 -> b\n3 -> a\n\n"


def test_serialize_pbij_empty_source_and_zero_morphism():
    z = PBij(FinSet(), fin("a"))
    assert serialize_pbij(z, "z") == "pbij z : -> a\n\n"
    name, back = parse_pbij(serialize_pbij(z, "z"))
    assert name == "z" and back == z


def test_pbij_round_trip_exhaustive_small():
    for f in enumerate_pbij(fin("1 2"), fin("a b c")):
        name, back = parse_pbij(serialize_pbij(f, "m"))
        assert name == "m"
        assert back == f


def test_pbij_round_trip_seeded_random_morphisms():
    rng = random.Random(20250815)
    alphabet = [f"s{i}" for i in range(8)] + [f"t{i}" for i in range(8)]
    for _ in range(100):
        src = FinSet(rng.sample(alphabet[:8], rng.randint(0, 8)))
        tgt = FinSet(rng.sample(alphabet[8:], rng.randint(0, 8)))
        k = rng.randint(0, min(len(src), len(tgt)))
        pairs = zip(rng.sample(src.elements, k), rng.sample(tgt.elements, k))
        f = PBij(src, tgt, pairs)
        _, back = parse_pbij(serialize_pbij(f))
        assert back == f


@pytest.mark.parametrize("text, line, fragment", [
    ("", 1, "empty input"),
    ("pbij f 1 -> a\n", 1, "pbij NAME :"),
    ("nope f : 1 -> a\n", 1, "expected 'pbij'"),
    ("pbij f : 1 2 -> a -> b\n", 1, "exactly one '->'"),
    ("pbij f : 1 1 -> a\n", 1, "duplicate"),
    ("pbij f : 1 -> a\n1 a\n", 2, "expected 'x -> y'"),
    ("pbij f : 1 -> a\n2 -> a\n", 3, "not in the source"),
    ("pbij f : 1 2 -> a\n1 -> a\n2 -> a\n", 4, "hit twice"),
    ("pbij f : 1 -> a\n\nextra\n", 3, "unexpected content"),
    ("pbij x:y : 1 -> a\n", 1, "ambiguous"),
])
def test_parse_pbij_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError, match=fragment) as err:
        parse_pbij(text)
    assert err.value.line == line


def test_serialize_pbij_rejects_ambiguous_tokens():
    with pytest.raises(ValueError, match="ambiguous"):
        serialize_pbij(PBij(fin("a:b"), fin("x")), "f")
    with pytest.raises(ValueError, match="ambiguous"):
        serialize_pbij(PBij(fin("a"), fin("x")), "bad:name")
    with pytest.raises(ValueError, match="ambiguous"):
        serialize_pbij(PBij(fin("->"), fin("x")), "f")


def test_cayley_frozen_text_and_round_trip():
    z2 = CayleyTable(("e", "a"), ((0, 1), (1, 0)))
    text = serialize_cayley(z2, "Z2")
    assert text == "semigroup Z2 = e a\ne: e a\na: a e\n\n"
    name, back = parse_cayley(text)
    assert name == "Z2" and back == z2


def test_cayley_round_trip_empty_table():
    empty = CayleyTable((), ())
    name, back = parse_cayley(serialize_cayley(empty, "E"))
    assert name == "E" and back == empty


@pytest.mark.parametrize("text, fragment", [
    ("", "empty input"),
    ("semigroup S : e\n", "semigroup NAME ="),
    ("semigroup S = e e\n", "duplicate"),
    ("semigroup S = e a\ne: e a\n", "missing product row"),
    ("semigroup S = e a\nx: e a\na: a e\n", "expected row label"),
    ("semigroup S = e a\ne: e\na: a e\n", "expected 2"),
    ("semigroup S = e a\ne: e q\na: a e\n", "unknown element"),
    ("semigroup S = e\ne: e\n\ntrailing\n", "unexpected content"),
])
def test_parse_cayley_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_cayley(text)


def grid_fixture():
    return build_noether_grid(universe(4), fin("1"), fin("1 2"))


def test_grid_round_trip_without_bottom_row():
    grid = grid_fixture()
    back = parse_grid(serialize_grid(grid))
    assert back == grid
    assert not back.has_bottom_row


def test_grid_round_trip_with_bottom_row():
    grid = grid_fixture()
    completed = grid.with_bottom_row(*complete_3x3(grid))
    back = parse_grid(serialize_grid(completed))
    assert back == completed
    back.validate()


def test_grid_round_trip_all_objects_empty():
    grid = build_noether_grid(FinSet(), (), ())
    assert parse_grid(serialize_grid(grid)) == grid


def test_grid_serialized_shape_is_stable():
    text = serialize_grid(grid_fixture())
    lines = text.splitlines()
    assert lines[0] == "object 1 1 = 1"
    assert lines[4] == "object 2 2 = 1 2 3 4"
    assert lines[8] == "object 3 3 = 3 4"
    assert lines[10] == "arrow (1,1)->(1,2):"
    assert text.count("arrow") == 10


def test_parse_grid_accepts_arrow_blocks_in_any_order():
    text = serialize_grid(grid_fixture())
    head, _, tail = text.partition("arrow")
    blocks = ("arrow" + b for b in tail.split("arrow"))
    reordered = head + "".join(sorted(blocks, reverse=True))
    assert parse_grid(reordered) == grid_fixture()


@pytest.mark.parametrize("mangle, fragment", [
    (lambda t: t.replace("object 1 1", "object 1 9"), "indices must be"),
    (lambda t: t.replace("object 1 1", "object 1 2", 1), "given twice"),
    (lambda t: t.replace("arrow (1,1)->(1,2):", "arrow (1,1)->(2,2):"), "one cell"),
    (lambda t: t.replace("arrow (1,1)->(1,2):", "arrow (1,1)->(1,2)"), "expected 'arrow"),
    (lambda t: t + "arrow (1,1)->(1,2):\n\n", "given twice"),
    (lambda t: t.replace("arrow (1,2)->(1,3):\n\n", ""),
     "missing arrow (1,2)->(1,3)"),
    (lambda t: "object 1 1 =\n", "expected nine"),
    (lambda t: t.replace("2 -> 2\n3 -> 3", "2 -> 2\n9 -> 3"), "not in the source"),
])
def test_parse_grid_errors(mangle, fragment):
    import re
    text = mangle(serialize_grid(grid_fixture()))
    with pytest.raises(ParseError, match=re.escape(fragment)):
        parse_grid(text)


def test_parse_grid_rejects_half_a_bottom_row():
    grid = grid_fixture()
    completed = grid.with_bottom_row(*complete_3x3(grid))
    text = serialize_grid(completed)
    start = text.index("arrow (3,1)->(3,2):")
    end = text.index("arrow (3,2)->(3,3):")
    with pytest.raises(ParseError, match="both arrows or neither"):
        parse_grid(text[:start] + text[end:])
