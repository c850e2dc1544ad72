import math

import numpy as np
import pytest

from drcskit.bounds import (
    bound_c5,
    bound_lev,
    bound_shen,
    bound_sin,
    bound_thm2,
    bound_thm3,
    bound_truncated,
    bound_uniform_full,
    chebyshev_gamma,
    check_weights,
    eig_kmax,
    eig_kmax_limit,
    q_eigenvalues,
    quadratic_form,
    quadratic_form_explicit,
    quadratic_matrix,
    rho,
    weights_chebyshev,
    weights_uniform_full,
    weights_uniform_truncated,
)
from drcskit.errors import BadM, GammaDomain, ParameterError, VacuousBound, WeightSupport


def uniform_closed(K, M, N, zy):
    return (M * N) ** 2 * (K * zy / M - 1) / ((K * (2 * N - 1) - 1) * zy)


def truncated_closed(K, M, N, zy, m):
    return (3 * m * K * M * N * zy - K * M * (m * m - 1) * zy - 3 * (M * N) ** 2) / (3 * (m * K - 1) * zy)


def test_weights_sum_to_one():
    assert math.isclose(weights_uniform_full(7).sum(), 1)
    assert math.isclose(weights_uniform_truncated(3, 8).sum(), 1)
    for K, M, N, zy, m in [(9, 9, 8, 8, 2), (9, 9, 8, 8, 6), (121, 121, 120, 120, 10)]:
        w = weights_chebyshev(K, M, N, zy, m, 2 * N - 1)
        assert math.isclose(w.sum(), 1, rel_tol=1e-12)
        assert np.all(w >= 0) and np.count_nonzero(w) == m
    with pytest.raises(BadM):
        weights_chebyshev(9, 9, 8, 8, 3, 15)
    with pytest.raises(BadM):
        weights_uniform_truncated(0, 4)
    with pytest.raises(ParameterError):
        check_weights([0.5, 0.4])
    with pytest.raises(ParameterError):
        check_weights([1.5, -0.5])


def test_quadratic_form_paths_agree():
    rng = np.random.default_rng(3)
    for N in (1, 2, 5, 9):
        w = rng.random(2 * N - 1)
        w /= w.sum()
        a = float(rng.random() * 10)
        assert math.isclose(quadratic_form(w, a, N), quadratic_form_explicit(w, a, N), rel_tol=1e-12)
    Q = quadratic_matrix(2.0, 3)
    assert Q.tolist() == [[2, 1, 2, 2, 1], [1, 2, 1, 2, 2], [2, 1, 2, 1, 2], [2, 2, 1, 2, 1], [1, 2, 2, 1, 2]]


def test_thm2_uniform_closed_form():
    rng = np.random.default_rng(5)
    for _ in range(50):
        N, M, K = (int(x) for x in rng.integers(1, 40, size=3))
        zy = int(rng.integers(1, N + 1))
        got = bound_thm2(K, M, N, zy, weights_uniform_full(N)).squared
        want = uniform_closed(K, M, N, zy)
        assert math.isclose(got, want, rel_tol=1e-9, abs_tol=1e-9)
        assert math.isclose(bound_uniform_full(K, M, N, zy).squared, want, rel_tol=1e-9, abs_tol=1e-9)


def test_thm3_truncated_closed_form():
    rng = np.random.default_rng(6)
    for _ in range(50):
        N, M, K = (int(x) for x in rng.integers(1, 40, size=3))
        zx, zy = (int(x) for x in rng.integers(1, N + 1, size=2))
        m = int(rng.integers(1, zx + 1))
        got = bound_thm3(K, M, N, zx, zy, weights_uniform_truncated(m, zx)).squared
        want = truncated_closed(K, M, N, zy, m)
        assert math.isclose(got, want, rel_tol=1e-9, abs_tol=1e-9)
        assert math.isclose(bound_truncated(K, M, N, zx, zy, m).squared, want, rel_tol=1e-9, abs_tol=1e-9)


def test_combined_forms_consistent():
    # the theta_max form follows from the combined form with theta_a = theta_c
    for K, M, N, zy in [(9, 10, 9, 9), (16, 16, 16, 16), (3, 2, 5, 4)]:
        for rep in (bound_thm2(K, M, N, zy, weights_uniform_full(N)), bound_uniform_full(K, M, N, zy)):
            c = rep.combined
            assert math.isclose(c["rhs"] / (c["coef_a"] + c["coef_c"]), rep.squared, rel_tol=1e-9)


def test_thm3_support_and_weak():
    with pytest.raises(WeightSupport):
        bound_thm3(4, 4, 6, 2, 6, [0.5, 0.25, 0.25])
    rep = bound_thm3(9, 9, 8, 8, 8, weights_uniform_truncated(4, 8))
    assert rep.extra["weak_theta_sq_bound"] <= rep.squared + 1e-9


def test_shen_and_vacuous():
    rep = bound_shen(1, 4, 4, 1, 1)
    assert rep.vacuous and rep.value == 0
    with pytest.raises(VacuousBound):
        rho(4, rep)
    rep = bound_shen(9, 9, 8, 8, 8)
    assert not rep.vacuous
    assert math.isclose(rho(9, rep), 1.6483, abs_tol=5e-5)
    with pytest.raises(ParameterError):
        bound_shen(9, 9, 8, 9, 8)


def test_lev_small_alphabet_rows():
    assert round(rho(16, bound_lev(16, 16, 16, 16, zx=16)), 4) == 1.1857
    assert round(rho(196, bound_lev(196, 196, 196, 196, zx=196)), 4) == 1.0440
    rep = bound_lev(2, 16, 16, 16)
    assert not rep.applicable
    with pytest.raises(VacuousBound):
        rho(16, rep)


def test_sin_bound():
    K, M, N, zy = 9, 9, 8, 8
    g = chebyshev_gamma(K, M, N, zy)
    limit = math.floor(math.pi / g)
    vals = [bound_sin(K, M, N, zy, m).squared for m in range(1, limit + 1)]
    assert vals[0] == 64 and all(b > a for a, b in zip(vals, vals[1:]))
    with pytest.raises(BadM):
        bound_sin(K, M, N, zy, 0)
    with pytest.raises(BadM):
        bound_sin(K, M, N, zy, 3, zx=2)
    with pytest.raises(GammaDomain):
        chebyshev_gamma(1000, 1, 2, 2)


def test_c5():
    rep = bound_c5(9, 9, 8, 8)
    assert rep.squared == 36 and rep.value == 6 and rep.applicable
    assert not bound_c5(1, 9, 8, 8).applicable


def test_eigen_helpers():
    assert eig_kmax(9, 8, 8) == 2
    assert eig_kmax_limit(10, 1) == 24
    for N in (3, 5, 8, 20):
        for a in (0.0, 7.5):
            lam0, sec = q_eigenvalues(a, N)
            num = np.linalg.eigvalsh(quadratic_matrix(a, N))
            ana = np.sort(np.concatenate([[lam0], sec]))
            assert np.max(np.abs(num - ana)) < 1e-8
            assert math.isclose(lam0 + sec.sum(), a * (2 * N - 1), abs_tol=1e-8)
    with pytest.raises(ParameterError):
        q_eigenvalues(1.0, 1)


def test_report_dict():
    d = bound_lev(16, 16, 16, 16, zx=16).as_dict()
    assert d["bound"] == "lev" and d["applicable"] and not d["vacuous"]
    assert set(d["combined"]) == {"coef_a", "coef_c", "rhs"}
