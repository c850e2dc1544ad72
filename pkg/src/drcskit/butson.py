"""Butson-type Hadamard matrices BH(N, r) held as integer exponents.

Entry ``(i, j)`` of the matrix is ``omega_r ** b[i][j]`` with
``omega_r = exp(2*pi*1j/r)``.  Complex values are only formed when checking
orthogonality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ParameterError, ParseError, UnknownSeed, ValidationError
from .fileio import IntLineReader, atomic_write_text, check_range, format_rows
from .validation import ValidationReport

__all__ = [
    "ButsonMatrix",
    "roots_of_unity",
    "bh_dft",
    "bh_walsh",
    "bh_kronecker",
    "bh_seed",
    "bh_validate",
    "seed_names",
    "bh_to_text",
    "bh_from_text",
    "save_bh",
    "load_bh",
]


def roots_of_unity(r: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(r) / r)


@dataclass(frozen=True)
class ButsonMatrix:
    exponents: tuple[tuple[int, ...], ...]
    root_order: int

    def __post_init__(self):
        if self.root_order < 1:
            raise ParameterError("root order must be positive")
        rows = tuple(tuple(int(x) % self.root_order for x in row) for row in self.exponents)
        if any(len(row) != len(rows) for row in rows):
            raise ParameterError("Butson matrix must be square")
        object.__setattr__(self, "exponents", rows)

    @property
    def order(self) -> int:
        return len(self.exponents)

    def as_array(self) -> np.ndarray:
        return np.array(self.exponents, dtype=np.int64).reshape(self.order, self.order)

    def complex_matrix(self) -> np.ndarray:
        return roots_of_unity(self.root_order)[self.as_array()]


def bh_validate(B: ButsonMatrix, rtol: float = 1e-9) -> ValidationReport:
    """Check ``B B^H = N I`` with off-diagonal magnitudes at most ``rtol * N``."""
    N = B.order
    if N == 0:
        return ValidationReport("BH", False, "empty matrix")
    X = B.complex_matrix()
    G = X @ X.conj().T
    off = G - np.diag(np.diag(G))
    worst = float(np.abs(off).max()) if N > 1 else 0.0
    diag_err = float(np.abs(np.diag(G) - N).max())
    if worst > rtol * N or diag_err > rtol * N:
        i, j = np.unravel_index(np.argmax(np.abs(off)), off.shape)
        return ValidationReport(
            "BH",
            False,
            f"rows {i} and {j} not orthogonal: |<b_i, b_j>| = {worst:.3g}",
            {"rows": (int(i), int(j)), "max_offdiag": worst},
        )
    return ValidationReport("BH", True, details={"max_offdiag": worst})


def _require_valid(B: ButsonMatrix) -> ButsonMatrix:
    report = bh_validate(B)
    if not report:
        raise ValidationError(str(report))
    return B


def bh_dft(N: int) -> ButsonMatrix:
    """DFT matrix as BH(N, N): ``b[i][j] = i*j mod N``."""
    if N < 1:
        raise ParameterError("N must be >= 1")
    return ButsonMatrix(tuple(tuple(i * j % N for j in range(N)) for i in range(N)), max(N, 1))


def bh_walsh(m: int) -> ButsonMatrix:
    """Walsh-Hadamard matrix BH(2^m, 2): ``b[i][j] = popcount(i & j) mod 2``."""
    if m < 1:
        raise ParameterError("m must be >= 1")
    N = 1 << m
    return ButsonMatrix(tuple(tuple(bin(i & j).count("1") & 1 for j in range(N)) for i in range(N)), 2)


def bh_kronecker(B1: ButsonMatrix, B2: ButsonMatrix) -> ButsonMatrix:
    """Kronecker product, a BH(N1*N2, lcm(r1, r2))."""
    r = math.lcm(B1.root_order, B2.root_order)
    e1 = B1.as_array() * (r // B1.root_order)
    e2 = B2.as_array() * (r // B2.root_order)
    N1, N2 = B1.order, B2.order
    # block ((i1, i2), (j1, j2)) at row i1*N2 + i2, column j1*N2 + j2, as in np.kron
    big = (e1[:, None, :, None] + e2[None, :, None, :]) % r
    return _require_valid(ButsonMatrix(tuple(map(tuple, big.reshape(N1 * N2, N1 * N2).tolist())), r))


_SEEDS = {
    "BH(10,5)-example1": (
        5,
        (
            (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
            (0, 1, 2, 3, 4, 4, 0, 1, 2, 3),
            (0, 2, 4, 1, 3, 1, 3, 0, 2, 4),
            (0, 3, 1, 4, 2, 1, 4, 2, 0, 3),
            (0, 4, 3, 2, 1, 4, 3, 2, 1, 0),
            (0, 3, 2, 2, 3, 0, 1, 4, 4, 1),
            (0, 2, 0, 4, 4, 3, 2, 3, 1, 1),
            (0, 1, 3, 1, 0, 2, 4, 3, 4, 2),
            (0, 0, 1, 3, 1, 2, 2, 4, 3, 4),
            (0, 4, 4, 0, 2, 3, 1, 1, 3, 2),
        ),
    ),
}


def seed_names() -> list[str]:
    return sorted(_SEEDS)


def bh_seed(name: str) -> ButsonMatrix:
    try:
        r, rows = _SEEDS[name]
    except KeyError:
        raise UnknownSeed(f"unknown seed {name!r}; available: {', '.join(seed_names())}") from None
    return ButsonMatrix(rows, r)


def bh_to_text(B: ButsonMatrix) -> str:
    return f"{B.order} {B.root_order}\n" + format_rows(B.exponents)


def bh_from_text(text: str, path=None) -> ButsonMatrix:
    reader = IntLineReader(text, path)
    _, (N, r) = reader.next_row(2, "header 'N r'")
    if N < 1 or r < 1:
        raise ParseError("N and r must be positive", line=1, path=path)
    rows = []
    for _ in range(N):
        lineno, row = reader.next_row(N, "matrix row")
        for j, b in enumerate(row):
            check_range(b, 0, r, lineno, j + 1, path, "exponent")
        rows.append(tuple(row))
    reader.expect_end()
    return ButsonMatrix(tuple(rows), r)


def save_bh(B: ButsonMatrix, path) -> None:
    atomic_write_text(path, bh_to_text(B))


def load_bh(path) -> ButsonMatrix:
    return bh_from_text(Path(path).read_text(), path=path)
