"""Built-in parameter presets shared by the CLI and the test-suite."""

from __future__ import annotations

from typing import NamedTuple

# GF(9) with x^2 + 2x + 2 (low degree first); not the lexicographically
# smallest primitive polynomial, which would change the printed rectangle.
EXAMPLE1_FIELD = {"p": 3, "n": 2, "poly": (2, 2, 1)}
EXAMPLE1_SEED = "BH(10,5)-example1"
EXAMPLE1_PARAMS = {"K": 9, "M": 10, "L": 9, "theta": 10, "r": 5}
EXAMPLE1_SHOWN_SETS = (0, 1, 2, 3)

EXAMPLE2_Q = 17
EXAMPLE2_WALSH_M = 4
EXAMPLE2_PARAMS = {"K": 16, "M": 16, "L": 16, "theta": 16, "r": 2}
EXAMPLE2_SHOWN_SETS = (0, 1)

# GF(25) for the desk-scale check; x^2 + x + 2 is the smallest primitive
# polynomial over Z_5.
SCALE_FIELD = {"p": 5, "n": 2, "poly": (2, 1, 1)}


class SmallAlphabetRow(NamedTuple):
    alphabet: int
    K: int
    M: int
    N: int
    theta: int
    zx: int
    zy: int
    butson: str
    rectangle: str


SMALL_ALPHABET_TABLE = (
    SmallAlphabetRow(2, 16, 16, 16, 16, 16, 16, "BH(16,2)", "Florentine K=16"),
    SmallAlphabetRow(2, 127, 128, 127, 128, 127, 127, "BH(128,2)", "quasi-Florentine K=128"),
    SmallAlphabetRow(3, 71, 72, 71, 72, 71, 71, "BH(72,3)", "quasi-Florentine K=72"),
    SmallAlphabetRow(3, 126, 126, 126, 126, 126, 126, "BH(126,3)", "Florentine K=126"),
    SmallAlphabetRow(4, 28, 28, 28, 28, 28, 28, "BH(28,4)", "Florentine K=28"),
    SmallAlphabetRow(4, 139, 140, 139, 140, 139, 139, "BH(140,4)", "quasi-Florentine K=140"),
    SmallAlphabetRow(5, 49, 50, 49, 50, 49, 49, "BH(50,5)", "quasi-Florentine K=50"),
    SmallAlphabetRow(5, 100, 100, 100, 100, 100, 100, "BH(100,5)", "Florentine K=100"),
    SmallAlphabetRow(6, 89, 90, 89, 90, 89, 89, "BH(90,6)", "quasi-Florentine K=90"),
    SmallAlphabetRow(6, 42, 42, 42, 42, 42, 42, "BH(42,6)", "Florentine K=42"),
    SmallAlphabetRow(7, 97, 98, 97, 98, 97, 97, "BH(98,7)", "quasi-Florentine K=98"),
    SmallAlphabetRow(7, 196, 196, 196, 196, 196, 196, "BH(196,7)", "Florentine K=196"),
    SmallAlphabetRow(8, 127, 128, 127, 128, 127, 127, "BH(128,8)", "quasi-Florentine K=128"),
    SmallAlphabetRow(8, 112, 112, 112, 112, 112, 112, "BH(112,8)", "Florentine K=112"),
    SmallAlphabetRow(9, 53, 54, 53, 54, 53, 53, "BH(54,9)", "quasi-Florentine K=54"),
    SmallAlphabetRow(9, 108, 108, 108, 108, 108, 108, "BH(108,9)", "Florentine K=108"),
    SmallAlphabetRow(10, 71, 72, 71, 72, 71, 71, "BH(72,10)", "quasi-Florentine K=72"),
    SmallAlphabetRow(10, 70, 70, 70, 70, 70, 70, "BH(70,10)", "Florentine K=70"),
)

FIG_RHO_PMAX_LIMIT = 127
