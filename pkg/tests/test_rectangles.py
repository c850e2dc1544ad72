import itertools

import numpy as np
import pytest

from drcskit.errors import AlphabetMismatch, IndexOutOfRange, NotPrime, ParseError
from drcskit.finite_field import ff_init, smallest_primitive_poly
from drcskit.rectangles import (
    Rectangle,
    build_florentine_circulant,
    build_quasi_florentine,
    check_collisions,
    extend_quasi_florentine,
    load_rect,
    rect_from_text,
    rect_to_text,
    row_permutation,
    save_rect,
    validate_c1,
    validate_c2,
)

EXAMPLE1_MATRIX = [
    [1, 3, 4, 7, 2, 6, 8, 5, 9],
    [2, 4, 5, 8, 0, 7, 6, 3, 9],
    [4, 6, 7, 1, 5, 0, 2, 8, 9],
    [5, 7, 8, 2, 3, 1, 0, 6, 9],
    [8, 1, 2, 5, 6, 4, 3, 0, 9],
    [0, 5, 3, 6, 1, 8, 7, 4, 9],
    [7, 0, 1, 4, 8, 3, 5, 2, 9],
    [6, 2, 0, 3, 7, 5, 4, 1, 9],
    [3, 8, 6, 0, 4, 2, 1, 7, 9],
]


def c2_oracle(rows):
    """Pair-gap property by exhaustive comparison of every row pair."""
    for r1, r2 in itertools.combinations(rows, 2):
        W = len(r1)
        for g in range(1, W):
            s1 = {(r1[i], r1[i + g]) for i in range(W - g)}
            s2 = {(r2[i], r2[i + g]) for i in range(W - g)}
            if s1 & s2:
                return False
    return True


def test_example1_rectangle():
    ctx = ff_init(3, 2, [2, 2, 1])
    r = extend_quasi_florentine(build_quasi_florentine(ctx), 9)
    assert [list(row) for row in r.entries] == EXAMPLE1_MATRIX
    assert r.shape == (9, 9) and r.alphabet_size == 10
    assert validate_c1(r) and validate_c2(r) and check_collisions(r)


def test_left_extension():
    ctx = ff_init(3, 2, [2, 2, 1])
    r = extend_quasi_florentine(build_quasi_florentine(ctx), 9, side="left")
    assert all(row[0] == 9 for row in r.entries)
    assert validate_c2(r) and check_collisions(r)
    with pytest.raises(AlphabetMismatch):
        extend_quasi_florentine(build_quasi_florentine(ctx), 7)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (5, 1), (7, 1), (5, 2), (2, 4)])
def test_quasi_florentine_properties(p, n):
    r = build_quasi_florentine(ff_init(p, n, smallest_primitive_poly(p, n)))
    q = p**n
    assert r.shape == (q, q - 1) and r.alphabet_size == q
    assert validate_c1(r) and validate_c2(r) and check_collisions(r)
    assert c2_oracle(r.entries)


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13, 17])
def test_florentine_circulant(q):
    r = build_florentine_circulant(q)
    assert r.shape == (q - 1, q - 1)
    assert validate_c1(r) and validate_c2(r) and check_collisions(r)
    assert c2_oracle(r.entries)


def test_florentine_q17_rows():
    r = build_florentine_circulant(17)
    assert row_permutation(r, 0) == tuple(range(16))
    assert row_permutation(r, 1) == (1, 3, 5, 7, 9, 11, 13, 15, 0, 2, 4, 6, 8, 10, 12, 14)
    with pytest.raises(IndexOutOfRange):
        row_permutation(r, 16)
    with pytest.raises(NotPrime):
        build_florentine_circulant(15)


def test_c2_against_oracle_random():
    rng = np.random.default_rng(7)
    seen = {True: 0, False: 0}
    for _ in range(300):
        rows = [tuple(rng.permutation(5).tolist()) for _ in range(int(rng.integers(2, 6)))]
        r = Rectangle(rows, 5)
        got = bool(validate_c2(r))
        assert got == c2_oracle(rows)
        seen[got] += 1
    assert seen[True] > 0 and seen[False] > 0


def test_c1_failures():
    assert not validate_c1(Rectangle([(0, 0, 1)], 3))
    assert not validate_c1(Rectangle([(0, 1)], 4))  # width below S-1
    assert not validate_c1(Rectangle([(0, 5)], 3))  # symbol out of range
    bad = Rectangle([(0, 1, 2), (0, 1, 2)], 3)
    assert not validate_c2(bad)
    assert "C2" in str(validate_c2(bad))


def test_text_roundtrip(tmp_path):
    r = build_florentine_circulant(7)
    assert rect_from_text(rect_to_text(r)) == r
    path = tmp_path / "r.txt"
    save_rect(r, path)
    assert load_rect(path) == r
    assert rect_to_text(r).splitlines()[0] == "6 6 6"


@pytest.mark.parametrize(
    "text,where",
    [
        ("2 3 3\n0 1 2\n", "line 3"),
        ("2 3 3\n0 1 2\n0 1\n", "line 3"),
        ("2 3 3\n0 1 2\n0 x 2\n", "line 3"),
        ("1 3 3\n0 1 7\n", "line 2"),
        ("1 3\n", "line 1"),
        ("1 3 3\n0 1 2\n0 1 2\n", "line 3"),
    ],
)
def test_parse_errors(text, where):
    with pytest.raises(ParseError, match=where):
        rect_from_text(text, path="r.txt")
