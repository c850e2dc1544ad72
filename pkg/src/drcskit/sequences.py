"""DRCS sets assembled from a rectangle and a Butson matrix.

Set ``k``, sequence ``m``, position ``n`` carries the exponent
``b[pi_k(n)][m]``, i.e. position ``n`` of all sequences in set ``k`` is the
Butson row selected by symbol ``pi_k(n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .butson import ButsonMatrix, roots_of_unity
from .errors import DimensionMismatch, IndexOutOfRange, ParameterError, ParseError
from .fileio import IntLineReader, atomic_write_text, check_range, format_rows
from .rectangles import Rectangle

__all__ = [
    "DrcsSet",
    "Zone",
    "construct_drcs",
    "drcs_to_text",
    "drcs_from_text",
    "drcs_save",
    "drcs_load",
    "paper_layout",
    "format_paper_layout",
]


class DrcsSet:
    """``K`` sets of ``M`` unimodular sequences of length ``L`` over ``Z_r``.

    ``exponents`` has shape ``(K, M, L)``; it is stored read-only.
    """

    def __init__(self, exponents, root_order: int):
        arr = np.array(exponents, dtype=np.int64)
        if arr.ndim != 3 or 0 in arr.shape:
            raise ParameterError(f"exponent tensor must be non-empty (K, M, L), got shape {arr.shape}")
        if root_order < 1:
            raise ParameterError("root order must be positive")
        arr %= root_order
        arr.setflags(write=False)
        self.exponents = arr
        self.root_order = int(root_order)

    @property
    def K(self) -> int:
        return self.exponents.shape[0]

    @property
    def M(self) -> int:
        return self.exponents.shape[1]

    @property
    def L(self) -> int:
        return self.exponents.shape[2]

    def complex_values(self) -> np.ndarray:
        return roots_of_unity(self.root_order)[self.exponents]

    def member(self, k: int) -> np.ndarray:
        if not 0 <= k < self.K:
            raise IndexOutOfRange(f"set index {k} outside [0, {self.K})")
        return roots_of_unity(self.root_order)[self.exponents[k]]

    def __eq__(self, other):
        if not isinstance(other, DrcsSet):
            return NotImplemented
        return self.root_order == other.root_order and np.array_equal(self.exponents, other.exponents)

    def __hash__(self):
        return hash((self.root_order, self.exponents.tobytes(), self.exponents.shape))

    def __repr__(self):
        return f"DrcsSet(K={self.K}, M={self.M}, L={self.L}, r={self.root_order})"


@dataclass(frozen=True)
class Zone:
    """Delay-Doppler region ``(-zx, zx) x (-zy, zy)`` on the integer grid."""

    zx: int
    zy: int

    def check(self, L: int) -> "Zone":
        if not (1 <= self.zx <= L and 1 <= self.zy <= L):
            raise ParameterError(f"zone ({self.zx}, {self.zy}) must satisfy 1 <= zx, zy <= L={L}")
        return self

    @property
    def delays(self) -> np.ndarray:
        return np.arange(-(self.zx - 1), self.zx)

    @property
    def dopplers(self) -> np.ndarray:
        return np.arange(-(self.zy - 1), self.zy)


def construct_drcs(rect: Rectangle, B: ButsonMatrix) -> DrcsSet:
    """Set ``k``, sequence ``m``, position ``n`` gets exponent ``b[pi_k(n)][m]``."""
    if rect.alphabet_size != B.order:
        raise DimensionMismatch(
            f"rectangle alphabet size {rect.alphabet_size} != Butson order {B.order}"
        )
    b = B.as_array()
    pi = np.array(rect.entries, dtype=np.int64)  # (K, L)
    # b[pi] has shape (K, L, M); swap to (K, M, L)
    return DrcsSet(np.transpose(b[pi], (0, 2, 1)), B.root_order)


def drcs_to_text(s: DrcsSet) -> str:
    parts = [f"{s.K} {s.M} {s.L} {s.root_order}\n"]
    for k in range(s.K):
        parts.append("\n" + format_rows(s.exponents[k]))
    return "".join(parts)


def drcs_from_text(text: str, path=None) -> DrcsSet:
    reader = IntLineReader(text, path)
    _, header = reader.next_row(4, "header 'K M L r'")
    K, M, L, r = header
    if min(header) < 1:
        raise ParseError("K, M, L, r must be positive", line=1, path=path)
    data = np.empty((K, M, L), dtype=np.int64)
    for k in range(K):
        for m in range(M):
            lineno, row = reader.next_row(L, f"sequence {m} of set {k}")
            for j, e in enumerate(row):
                check_range(e, 0, r, lineno, j + 1, path, "exponent")
            data[k, m] = row
    reader.expect_end()
    return DrcsSet(data, r)


def drcs_save(s: DrcsSet, path) -> None:
    atomic_write_text(path, drcs_to_text(s))


def drcs_load(path) -> DrcsSet:
    return drcs_from_text(Path(path).read_text(), path=path)


def paper_layout(s: DrcsSet, k: int, orientation: str = "positions") -> list[str]:
    """Lines of exponents for set ``k`` as printed in tables.

    ``orientation="positions"`` prints one line per position ``n`` listing all
    ``M`` sequences (line ``n`` equals Butson row ``pi_k(n)``).
    ``orientation="sequences"`` prints one line per sequence ``m``.
    """
    if not 0 <= k < s.K:
        raise IndexOutOfRange(f"set index {k} outside [0, {s.K})")
    block = s.exponents[k]
    if orientation == "positions":
        block = block.T
    elif orientation != "sequences":
        raise ParameterError(f"orientation must be 'positions' or 'sequences', got {orientation!r}")
    return [" ".join(str(int(x)) for x in row) for row in block]


def format_paper_layout(s: DrcsSet, sets=None, orientation: str = "positions") -> str:
    sets = range(s.K) if sets is None else sets
    out = []
    for k in sets:
        out.append(f"# C({k})")
        out.extend(paper_layout(s, k, orientation))
    return "\n".join(out) + "\n"
