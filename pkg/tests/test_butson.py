import numpy as np
import pytest

from drcskit.butson import (
    ButsonMatrix,
    bh_dft,
    bh_from_text,
    bh_kronecker,
    bh_seed,
    bh_to_text,
    bh_validate,
    bh_walsh,
    roots_of_unity,
    seed_names,
)
from drcskit.errors import ParameterError, ParseError, UnknownSeed


def gram_ok(B):
    H = np.exp(2j * np.pi * np.array(B.exponents) / B.root_order)
    return np.allclose(H @ H.conj().T, B.order * np.eye(B.order), atol=1e-9)


def test_roots_of_unity():
    w = roots_of_unity(5)
    assert np.allclose(w**5, 1)
    assert np.isclose(w[1], np.exp(2j * np.pi / 5))


@pytest.mark.parametrize("N", [1, 2, 3, 6, 10, 25])
def test_dft(N):
    B = bh_dft(N)
    assert B.root_order == N and bh_validate(B) and gram_ok(B)
    assert np.allclose(B.complex_matrix(), np.fft.fft(np.eye(N)).conj())


@pytest.mark.parametrize("m", [1, 2, 4])
def test_walsh(m):
    B = bh_walsh(m)
    assert B.order == 2**m and B.root_order == 2 and bh_validate(B) and gram_ok(B)


def test_walsh_matches_sylvester():
    H = np.array([[1]])
    for _ in range(4):
        H = np.kron(H, np.array([[1, 1], [1, -1]]))
    assert np.array_equal(bh_walsh(4).complex_matrix().real.round().astype(int), H)


def test_kronecker():
    A, B = bh_dft(2), bh_dft(3)
    C = bh_kronecker(A, B)
    assert C.order == 6 and C.root_order == 6 and bh_validate(C)
    assert np.allclose(C.complex_matrix(), np.kron(A.complex_matrix(), B.complex_matrix()))
    D = bh_kronecker(bh_dft(4), bh_walsh(1))
    assert D.root_order == 4 and gram_ok(D)


def test_seed():
    assert "BH(10,5)-example1" in seed_names()
    B = bh_seed("BH(10,5)-example1")
    assert B.order == 10 and B.root_order == 5 and bh_validate(B) and gram_ok(B)
    with pytest.raises(UnknownSeed):
        bh_seed("nope")
    with pytest.raises(KeyError):
        bh_seed("nope")


def test_validate_rejects():
    bad = ButsonMatrix(((0, 0), (0, 0)), 2)
    rep = bh_validate(bad)
    assert not rep and "BH" in str(rep)
    with pytest.raises(ParameterError):
        ButsonMatrix(((0, 1, 2), (0, 1, 2)), 3)
    with pytest.raises(ParameterError):
        ButsonMatrix(((0,),), 0)


def test_text_roundtrip():
    B = bh_seed("BH(10,5)-example1")
    assert bh_from_text(bh_to_text(B)) == B
    with pytest.raises(ParseError, match="line 2"):
        bh_from_text("2 2\n0 0 0\n0 1\n")
    with pytest.raises(ParseError, match="line 3"):
        bh_from_text("2 2\n0 0\n0 2\n")
