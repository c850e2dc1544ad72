"""Quasi-Florentine and Florentine rectangles.

A rectangle is a ``K x W`` array over the symbols ``0 .. S-1`` where every row
holds distinct symbols (``W = S - 1`` for the quasi-Florentine case, ``W = S``
for the Florentine case) and any ordered symbol pair ``(a, b)`` occurs with
``b`` exactly ``m`` places right of ``a`` in at most one row.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from .errors import AlphabetMismatch, IndexOutOfRange, NotPrime, ParameterError, ParseError, ValidationError
from .fileio import IntLineReader, atomic_write_text, check_range, format_rows
from .finite_field import FieldCtx, ff_add, ff_alpha_pow, is_prime, psi
from .validation import ValidationReport

__all__ = [
    "Rectangle",
    "build_quasi_florentine",
    "extend_quasi_florentine",
    "build_florentine_circulant",
    "validate_c1",
    "validate_c2",
    "check_collisions",
    "row_permutation",
    "rect_to_text",
    "rect_from_text",
    "save_rect",
    "load_rect",
]


@dataclass(frozen=True)
class Rectangle:
    entries: tuple[tuple[int, ...], ...]
    alphabet_size: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if rows and len({len(r) for r in rows}) != 1:
            raise ParameterError("rectangle rows must all have the same width")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def width(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self):
        return self.rows, self.width


def validate_c1(r: Rectangle) -> ValidationReport:
    """Every row holds ``W`` distinct symbols of ``Z_S`` with ``W`` in {S-1, S}."""
    S, W = r.alphabet_size, r.width
    if W not in (S - 1, S):
        return ValidationReport("C1", False, f"width {W} is neither S-1 nor S for S={S}", {"width": W, "S": S})
    for i, row in enumerate(r.entries):
        seen = set()
        for j, a in enumerate(row):
            if not 0 <= a < S:
                return ValidationReport("C1", False, f"row {i} column {j}: symbol {a} outside Z_{S}", {"row": i, "symbol": a})
            if a in seen:
                return ValidationReport("C1", False, f"row {i}: symbol {a} repeated", {"row": i, "symbol": a})
            seen.add(a)
    return ValidationReport("C1", True)


def validate_c2(r: Rectangle) -> ValidationReport:
    """At most one row places ``b`` exactly ``m`` steps right of ``a``.

    Scans every position pair of every row; the first ``(a, b, m)`` seen in two
    rows is reported together with those rows.
    """
    owner = {}
    for i, row in enumerate(r.entries):
        W = len(row)
        for s in range(W):
            a = row[s]
            for t in range(s + 1, W):
                key = (a, row[t], t - s)
                if key in owner and owner[key] != i:
                    a_, b_, m_ = key
                    return ValidationReport(
                        "C2",
                        False,
                        f"pair ({a_}, {b_}) at gap {m_} occurs in rows {owner[key]} and {i}",
                        {"a": a_, "b": b_, "m": m_, "rows": (owner[key], i)},
                    )
                owner[key] = i
    return ValidationReport("C2", True)


def check_collisions(r: Rectangle) -> ValidationReport:
    """For distinct rows and every shift ``tau >= 0``, ``row_k1[j] == row_k2[j + tau]``
    has at most one solution ``j``."""
    positions = [{a: j for j, a in enumerate(row)} for row in r.entries]
    for k1, row1 in enumerate(r.entries):
        for k2 in range(r.rows):
            if k1 == k2:
                continue
            counts = defaultdict(int)
            for j, a in enumerate(row1):
                t = positions[k2].get(a)
                if t is not None and t >= j:
                    tau = t - j
                    counts[tau] += 1
                    if counts[tau] > 1:
                        return ValidationReport(
                            "collision",
                            False,
                            f"rows {k1}, {k2} collide twice at shift {tau}",
                            {"rows": (k1, k2), "tau": tau},
                        )
    return ValidationReport("collision", True)


def _require_valid(r: Rectangle) -> Rectangle:
    for check in (validate_c1, validate_c2):
        report = check(r)
        if not report:
            raise ValidationError(str(report))
    return r


def build_quasi_florentine(ctx: FieldCtx) -> Rectangle:
    """``p^n x (p^n - 1)`` quasi-Florentine rectangle over ``Z_{p^n}``.

    Row 0 is ``psi(alpha^j)``; row ``i > 0`` is ``psi(alpha^j + alpha^(i-1))``.
    """
    q = ctx.size
    rows = [[psi(ctx, ff_alpha_pow(ctx, j)) for j in range(q - 1)]]
    for i in range(1, q):
        shift = ff_alpha_pow(ctx, i - 1)
        rows.append([psi(ctx, ff_add(ctx, ff_alpha_pow(ctx, j), shift)) for j in range(q - 1)])
    return _require_valid(Rectangle(tuple(map(tuple, rows)), q))


def extend_quasi_florentine(r: Rectangle, new_symbol: int, side: str = "right") -> Rectangle:
    """Append a constant column holding the new symbol ``S``.

    The result is ``K x S`` over ``Z_{S+1}``.  ``side="right"`` reproduces the
    printed 9 x 9 example; ``side="left"`` prepends the column instead.
    """
    S = r.alphabet_size
    if new_symbol != S:
        raise AlphabetMismatch(f"new symbol must equal the alphabet size {S}, got {new_symbol}")
    if r.width != S - 1:
        raise AlphabetMismatch(f"expected a K x {S - 1} rectangle over Z_{S}, got width {r.width}")
    if side == "right":
        rows = [row + (S,) for row in r.entries]
    elif side == "left":
        rows = [(S,) + row for row in r.entries]
    else:
        raise ParameterError(f"side must be 'left' or 'right', got {side!r}")
    return _require_valid(Rectangle(tuple(rows), S + 1))


def build_florentine_circulant(q: int) -> Rectangle:
    """``(q-1) x (q-1)`` Florentine rectangle with entry ``((k+1)(j+1) mod q) - 1``."""
    if not is_prime(q):
        raise NotPrime(f"q={q} is not prime")
    if q < 3:
        raise ParameterError("q must be at least 3")
    rows = tuple(tuple((k + 1) * (j + 1) % q - 1 for j in range(q - 1)) for k in range(q - 1))
    return _require_valid(Rectangle(rows, q - 1))


def row_permutation(r: Rectangle, k: int) -> tuple[int, ...]:
    if not 0 <= k < r.rows:
        raise IndexOutOfRange(f"row {k} outside [0, {r.rows})")
    return r.entries[k]


def rect_to_text(r: Rectangle) -> str:
    return f"{r.rows} {r.width} {r.alphabet_size}\n" + format_rows(r.entries)


def rect_from_text(text: str, path=None) -> Rectangle:
    reader = IntLineReader(text, path)
    _, header = reader.next_row(3, "header 'K W S'")
    K, W, S = header
    if K < 1 or W < 1 or S < 1:
        raise ParseError("K, W, S must be positive", line=1, path=path)
    rows = []
    for _ in range(K):
        lineno, row = reader.next_row(W, "rectangle row")
        for j, a in enumerate(row):
            check_range(a, 0, S, lineno, j + 1, path, "symbol")
        rows.append(tuple(row))
    reader.expect_end()
    return Rectangle(tuple(rows), S)


def save_rect(r: Rectangle, path) -> None:
    atomic_write_text(path, rect_to_text(r))


def load_rect(path) -> Rectangle:
    return rect_from_text(Path(path).read_text(), path=path)
