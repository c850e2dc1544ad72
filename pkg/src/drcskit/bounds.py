"""Lower bounds on the maximum aperiodic AF magnitude of DRCS sets.

Every evaluator returns a :class:`BoundReport`.  Bounds are computed on
``theta_max**2`` first; a negative value is clamped to zero and flagged
``vacuous`` so that parameter sweeps never abort.  Preconditions of the
asymptotic corollaries are reported through ``applicable`` rather than
raised.

Parameters follow one convention throughout: ``K`` sets, ``M`` sequences per
set, length ``N``, zone ``(-zx, zx) x (-zy, zy)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import BadM, GammaDomain, ParameterError, VacuousBound, WeightSupport

__all__ = [
    "BoundReport",
    "check_weights",
    "weights_uniform_full",
    "weights_uniform_truncated",
    "weights_chebyshev",
    "chebyshev_gamma",
    "tau_kernel",
    "quadratic_matrix",
    "quadratic_form",
    "quadratic_form_explicit",
    "bound_shen",
    "bound_thm2",
    "bound_thm3",
    "bound_uniform_full",
    "bound_truncated",
    "bound_lev",
    "bound_sin",
    "bound_c5",
    "eig_kmax",
    "eig_kmax_limit",
    "q_eigenvalues",
    "rho",
]

WEIGHT_TOL = 1e-12


@dataclass
class BoundReport:
    """Evaluated lower bound on ``theta_max``.

    ``squared`` is the raw right-hand side for ``theta_max**2`` (may be
    negative); ``value`` is ``sqrt(max(squared, 0))``.  When a combined
    ``(theta_a, theta_c)`` inequality exists it is stored as
    ``coef_a * theta_a**2 + coef_c * theta_c**2 >= rhs`` in ``combined``.
    """

    name: str
    params: dict[str, Any]
    squared: float
    applicable: bool = True
    note: str = ""
    combined: dict[str, float] | None = None
    extra: dict[str, Any] = field(default_factory=dict)
    weights: list[float] | None = None

    @property
    def vacuous(self) -> bool:
        return not self.squared > 0

    @property
    def value(self) -> float:
        return math.sqrt(self.squared) if self.squared > 0 else 0.0

    def combined_holds(self, theta_a: float, theta_c: float, rtol: float = 1e-12) -> bool:
        if self.combined is None:
            raise ParameterError(f"{self.name} has no combined (theta_a, theta_c) form")
        c = self.combined
        lhs = c["coef_a"] * theta_a**2 + c["coef_c"] * theta_c**2
        return lhs >= c["rhs"] - rtol * max(1.0, abs(c["rhs"]))

    def as_dict(self) -> dict:
        out = {
            "bound": self.name,
            "params": self.params,
            "theta_bound": self.value,
            "theta_sq_bound": self.squared,
            "vacuous": self.vacuous,
            "applicable": self.applicable,
        }
        if self.note:
            out["note"] = self.note
        if self.combined is not None:
            out["combined"] = self.combined
        if self.extra:
            out.update(self.extra)
        if self.weights is not None:
            out["weights"] = self.weights
        return out


# -- weight vectors ---------------------------------------------------------


def check_weights(w) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ParameterError("weight vector must be a non-empty 1-D sequence")
    if np.any(w < -WEIGHT_TOL):
        raise ParameterError("weights must be nonnegative")
    if abs(w.sum() - 1.0) > 1e-9:
        raise ParameterError(f"weights must sum to 1, got {w.sum():.12g}")
    return np.clip(w, 0.0, None)


def weights_uniform_full(N: int) -> np.ndarray:
    """``1/(2N-1)`` on every one of the ``2N-1`` delays."""
    if N < 1:
        raise ParameterError("N must be >= 1")
    return np.full(2 * N - 1, 1.0 / (2 * N - 1))


def weights_uniform_truncated(m: int, D: int) -> np.ndarray:
    """``1/m`` on the first ``m`` of ``D`` entries, zero after."""
    if not 1 <= m <= D:
        raise BadM(f"need 1 <= m <= {D}, got m={m}")
    w = np.zeros(D)
    w[:m] = 1.0 / m
    return w


def chebyshev_gamma(K, M, N, zy) -> float:
    ratio = K * zy / (M * N * N)
    if ratio > 1:
        raise GammaDomain(f"K*zy = {K * zy} exceeds M*N^2 = {M * N * N}")
    return math.acos(1.0 - ratio)


def weights_chebyshev(K, M, N, zy, m, D) -> np.ndarray:
    """Sine-profile weights ``sin(g/2)/sin(m g/2) * sin(g0 + r g)`` for ``r < m``.

    ``g = arccos(1 - K zy / (M N^2))`` and ``g0 = (pi - m g + g) / 2``.
    """
    g = chebyshev_gamma(K, M, N, zy)
    if m < 2 or m % 2 or m > D:
        raise BadM(f"m must be even with 2 <= m <= {D}, got {m}")
    if m * g > math.pi + g + 1e-12:
        raise BadM(f"m*gamma = {m * g:.6g} exceeds pi + gamma = {math.pi + g:.6g}")
    g0 = (math.pi - m * g + g) / 2
    w = np.zeros(D)
    r = np.arange(m)
    w[:m] = math.sin(g / 2) / math.sin(m * g / 2) * np.sin(g0 + r * g)
    return np.clip(w, 0.0, None)


# -- quadratic form ----------------------------------------------------------


def tau_kernel(s, t, N):
    """Circular delay distance ``min(|t-s|, 2N-1-|t-s|)``."""
    d = np.abs(np.asarray(t) - np.asarray(s))
    return np.minimum(d, 2 * N - 1 - d)


def quadratic_matrix(a: float, N: int) -> np.ndarray:
    D = 2 * N - 1
    idx = np.arange(D)
    Q = tau_kernel(idx[:, None], idx[None, :], N).astype(float)
    np.fill_diagonal(Q, a)
    return Q


def _pad(w, N):
    w = np.asarray(w, dtype=float)
    D = 2 * N - 1
    if w.size > D:
        raise ParameterError(f"weight vector longer than 2N-1 = {D}")
    return np.concatenate([w, np.zeros(D - w.size)])


def _tau_sum(w, N) -> float:
    """``sum_{s,t} tau(s,t) w_s w_t`` via lagged products of ``w``."""
    w = _pad(w, N)
    D = w.size
    total = 0.0
    for d in range(1, D):
        total += min(d, D - d) * float(np.dot(w[:-d], w[d:]))
    return 2.0 * total


def quadratic_form(w, a: float, N: int) -> float:
    """``a * sum w^2 + sum_{s != t} tau(s, t) w_s w_t`` without forming the matrix."""
    w = _pad(w, N)
    return a * float(np.dot(w, w)) + _tau_sum(w, N)


def quadratic_form_explicit(w, a: float, N: int) -> float:
    w = _pad(w, N)
    return float(w @ quadratic_matrix(a, N) @ w)


# -- bounds ------------------------------------------------------------------


def _check_zone(N, zx=None, zy=None):
    if N < 1:
        raise ParameterError("N must be >= 1")
    for name, z in (("zx", zx), ("zy", zy)):
        if z is not None and not 1 <= z <= N:
            raise ParameterError(f"{name}={z} must satisfy 1 <= {name} <= N={N}")


def bound_shen(K, M, N, zx, zy) -> BoundReport:
    """Prior aperiodic DRCS bound used as the comparison baseline."""
    _check_zone(N, zx, zy)
    params = dict(K=K, M=M, N=N, zx=zx, zy=zy)
    denom = K * zx - 1
    if denom <= 0:
        return BoundReport("shen", params, 0.0, note="vacuous: K*zx - 1 <= 0")
    bracket = (K * zx * zy / (M * (N + zx - 1)) - 1) / denom
    sq = (M * N) ** 2 / zy * bracket
    return BoundReport("shen", params, sq, note="vacuous: negative bracket" if bracket < 0 else "")


def _thm_core(K, M, N, zy, w):
    s2 = float(np.dot(w, w))
    a = N * (M * N - zy) / (K * zy)
    sq = M * (N - quadratic_form(w, a, N) / (1 - s2 / K))
    tsum = _tau_sum(w, N)
    combined = {
        "coef_a": 1 - s2,
        "coef_c": K - 1,
        "rhs": K * M * (N - tsum) - (M * N) ** 2 / zy * s2,
    }
    return sq, s2, combined


def bound_thm2(K, M, N, zy, w) -> BoundReport:
    """Weighted bound over the full delay range ``zx = N``.

    ``w`` has length ``2N-1`` (shorter vectors are zero-padded).
    """
    _check_zone(N, zy=zy)
    w = check_weights(_pad(w, N))
    sq, s2, combined = _thm_core(K, M, N, zy, w)
    return BoundReport(
        "thm2",
        dict(K=K, M=M, N=N, zx=N, zy=zy),
        sq,
        combined=combined,
        extra={"sum_w2": s2},
        weights=w.tolist(),
    )


def bound_thm3(K, M, N, zx, zy, w) -> BoundReport:
    """Weighted bound for a truncated delay zone; ``w`` must vanish from index ``zx`` on.

    ``extra["weak"]`` holds the simpler ``M (N - Q(w, M N^2 / (K zy)))`` form.
    """
    _check_zone(N, zx, zy)
    w = _pad(w, N)
    if np.any(np.abs(w[zx:]) > 0):
        raise WeightSupport(f"weights must vanish at delays >= zx={zx}")
    w = check_weights(w)
    sq, s2, combined = _thm_core(K, M, N, zy, w)
    weak_sq = M * (N - quadratic_form(w, M * N * N / (K * zy), N))
    return BoundReport(
        "thm3",
        dict(K=K, M=M, N=N, zx=zx, zy=zy),
        sq,
        combined=combined,
        extra={"sum_w2": s2, "weak_theta_sq_bound": weak_sq, "weak_theta_bound": math.sqrt(max(weak_sq, 0.0))},
        weights=w[:zx].tolist(),
    )


def bound_uniform_full(K, M, N, zy) -> BoundReport:
    """Closed form of the weighted bound under uniform weights on all ``2N-1`` delays."""
    _check_zone(N, zy=zy)
    D = 2 * N - 1
    num = (M * N) ** 2 * (K * zy / M - 1)
    sq = num / ((K * D - 1) * zy)
    combined = {"coef_a": (D - 1) / D, "coef_c": K - 1, "rhs": num / (D * zy)}
    note = "vacuous: K*zy < M" if K * zy < M else ""
    return BoundReport("uniform", dict(K=K, M=M, N=N, zx=N, zy=zy), sq, note=note, combined=combined)


def bound_truncated(K, M, N, zx, zy, m) -> BoundReport:
    """Closed form under ``1/m`` weights on the first ``m <= zx`` delays."""
    _check_zone(N, zx, zy)
    if not 1 <= m <= zx:
        raise BadM(f"need 1 <= m <= zx={zx}, got m={m}")
    sq = (3 * m * K * M * N * zy - K * M * (m * m - 1) * zy - 3 * (M * N) ** 2) / (3 * (m * K - 1) * zy)
    return BoundReport("trunc", dict(K=K, M=M, N=N, zx=zx, zy=zy, m=m), sq)


def bound_lev(K, M, N, zy, zx=None) -> BoundReport:
    """Asymptotic bound ``theta_max^2 >= M N (1 - 2 sqrt(M / (3 K zy)))``.

    Needs ``K > 3M/zy`` and, when ``zx`` is given,
    ``N sqrt(3M/(K zy)) <= zx <= N``; otherwise ``applicable`` is False.
    """
    _check_zone(N, zx, zy)
    params = dict(K=K, M=M, N=N, zy=zy)
    if zx is not None:
        params["zx"] = zx
    root = math.sqrt(M / (3 * K * zy))
    sq = M * N * (1 - 2 * root)
    reasons = []
    if not K > 3 * M / zy:
        reasons.append("requires K > 3M/zy")
    if zx is not None and N * math.sqrt(3 * M / (K * zy)) > zx:
        reasons.append("requires zx >= N sqrt(3M/(K zy))")
    combined = {"coef_a": 1 - K * zy / (3 * M * N * N), "coef_c": K - 1, "rhs": K * M * (N - 2 * N * root)}
    return BoundReport("lev", params, sq, applicable=not reasons, note="; ".join(reasons), combined=combined)


def bound_sin(K, M, N, zy, m, zx=None) -> BoundReport:
    """Bound from the sine-profile weights for ``1 <= m < min(zx + 1, pi/gamma + 1)``."""
    zx = N if zx is None else zx
    _check_zone(N, zx, zy)
    g = chebyshev_gamma(K, M, N, zy)
    if not (1 <= m < min(zx + 1, math.pi / g + 1)):
        raise BadM(f"need 1 <= m < min(zx + 1, pi/gamma + 1) = {min(zx + 1, math.pi / g + 1):.6g}, got m={m}")
    frac = (math.sin(m * g / 2) - math.sin((m - 2) * g / 2)) / (2 * (1 - math.cos(g)) * math.sin(m * g / 2))
    sq = N * M - (m - 1) / 2 - frac
    return BoundReport("sin", dict(K=K, M=M, N=N, zx=zx, zy=zy, m=m), sq, extra={"gamma": g})


def bound_c5(K, M, N, zy, zx=None) -> BoundReport:
    """``theta_max^2 >= M (N - ceil(pi N / sqrt(8 K zy / M)))``.

    Needs ``5M <= K zy <= M N^2`` and ``zx > pi/gamma``.
    """
    _check_zone(N, zx, zy)
    params = dict(K=K, M=M, N=N, zy=zy)
    if zx is not None:
        params["zx"] = zx
    reasons = []
    if not 5 * M <= K * zy <= M * N * N:
        reasons.append("requires 5M <= K zy <= M N^2")
    extra = {}
    if K * zy <= M * N * N:
        g = chebyshev_gamma(K, M, N, zy)
        extra = {"gamma": g, "m": math.floor(math.pi / g) + 1}
        if zx is not None and not zx > math.pi / g:
            reasons.append("requires zx > pi/gamma")
    ceil_term = math.ceil(math.pi * N / math.sqrt(8 * K * zy / M))
    sq = M * (N - ceil_term)
    note = "; ".join(reasons)
    if ceil_term >= N:
        note = "; ".join(filter(None, [note, "vacuous: ceiling term >= N"]))
    return BoundReport("c5", params, float(sq), applicable=not reasons, note=note, extra=extra)


def eig_kmax(M, N, zy) -> int:
    """Largest ``K`` for which the uniform-weight bound cannot be improved."""
    if not 1 <= zy <= M * N:
        raise ParameterError(f"need 1 <= zy <= M N = {M * N}")
    return math.floor(4 * (M * N - zy) * N / zy * math.sin(math.pi / (2 * (2 * N - 1))) ** 2)


def eig_kmax_limit(M, zy) -> int:
    """Large-``N`` limit ``floor(pi^2 M / (4 zy))`` of :func:`eig_kmax`."""
    return math.floor(math.pi**2 * M / (4 * zy))


def q_eigenvalues(a: float, N: int):
    """Closed-form eigenvalues of the ``(2N-1) x (2N-1)`` delay-distance matrix.

    Returns ``(lambda_0, secondary)`` where ``secondary[k-1]`` is ``lambda_k``
    for ``k = 1 .. 2N-2``.
    """
    if N < 2:
        raise ParameterError("N must be >= 2")
    D = 2 * N - 1
    k = np.arange(1, D)
    x = np.pi * k / D
    secondary = a - (1 - (-1.0) ** k * np.cos(x)) / (2 * np.sin(x) ** 2)
    return a + (N - 1) * N, secondary


def rho(theta_max: float, bound: BoundReport) -> float:
    """Optimality factor ``theta_max / theta_bound``."""
    if bound.vacuous:
        raise VacuousBound(f"{bound.name} bound is vacuous; optimality factor undefined")
    if not bound.applicable:
        raise VacuousBound(f"{bound.name} bound not applicable: {bound.note}")
    return theta_max / bound.value
