"""Aperiodic ambiguity functions of sequences and DRCS sets.

For sequences ``a, b`` of common length ``L`` the cross ambiguity function is

    AF(tau, v) = sum_t a(t) * conj(b(t + tau)) * omega_L**(v t)

over the ``t`` for which both indices are in range, and zero for
``|tau| >= L``.  The Doppler phasor base is always the actual length ``L``.

Two evaluation paths are provided: a direct per-cell summation
(:func:`af_grid_naive`) and a transform path (:func:`af_grid`,
:func:`af_tensor`) that forms, for each delay, the lag-product sequence summed
over the ``M`` constituent sequences and takes an ``L``-point inverse DFT to
obtain every Doppler at once.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .butson import roots_of_unity
from .errors import IndexOutOfRange, LengthMismatch, ParameterError, ShapeMismatch
from .sequences import DrcsSet, Zone

__all__ = [
    "AFGrid",
    "ZoneMetrics",
    "af_cross",
    "af_set_cross",
    "af_grid",
    "af_grid_naive",
    "af_tensor",
    "zone_metrics",
    "thread_count",
]


def thread_count(threads=None) -> int:
    """Worker count: explicit value, else ``DRCS_THREADS`` (0 = auto), else 1."""
    if threads is None:
        try:
            threads = int(os.environ.get("DRCS_THREADS", "1"))
        except ValueError:
            raise ParameterError("DRCS_THREADS must be an integer") from None
    if threads < 0:
        raise ParameterError("thread count must be >= 0")
    if threads == 0:
        threads = os.cpu_count() or 1
    return threads


def _doppler_phasor(L: int, v: int, t: np.ndarray) -> np.ndarray:
    return roots_of_unity(L)[(v * t) % L]


def af_cross(a, b, tau: int, v: int) -> complex:
    """Aperiodic cross ambiguity function of two sequences at one cell."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 1 or a.shape != b.shape:
        raise LengthMismatch(f"sequences must have equal length, got {a.shape} and {b.shape}")
    L = a.shape[0]
    if abs(tau) >= L:
        return 0j
    t = np.arange(max(0, -tau), min(L, L - tau))
    return complex(np.sum(a[t] * np.conj(b[t + tau]) * _doppler_phasor(L, v, t)))


def af_set_cross(C1, C2, tau: int, v: int) -> complex:
    """Ambiguity function sum over the ``M`` aligned sequences of two set members.

    ``C1`` and ``C2`` are complex arrays of shape ``(M, L)``.
    """
    C1 = np.asarray(C1, dtype=complex)
    C2 = np.asarray(C2, dtype=complex)
    if C1.ndim != 2 or C1.shape != C2.shape:
        raise ShapeMismatch(f"set members must share (M, L), got {C1.shape} and {C2.shape}")
    L = C1.shape[1]
    if abs(tau) >= L:
        return 0j
    t = np.arange(max(0, -tau), min(L, L - tau))
    return complex(np.sum(C1[:, t] * np.conj(C2[:, t + tau]) * _doppler_phasor(L, v, t)))


@dataclass(frozen=True)
class AFGrid:
    """Complex AF values over a zone; ``values[i, j]`` is at ``(delays[i], dopplers[j])``."""

    k1: int
    k2: int
    delays: np.ndarray
    dopplers: np.ndarray
    values: np.ndarray

    def cells(self):
        for i, tau in enumerate(self.delays):
            for j, v in enumerate(self.dopplers):
                yield int(tau), int(v), complex(self.values[i, j])

    def magnitudes(self) -> np.ndarray:
        return np.abs(self.values)


def _check_pair(s: DrcsSet, k1: int, k2: int):
    for k in (k1, k2):
        if not 0 <= k < s.K:
            raise IndexOutOfRange(f"set index {k} outside [0, {s.K})")


def af_grid_naive(s: DrcsSet, k1: int, k2: int, zone: Zone) -> AFGrid:
    """Cell-by-cell evaluation straight from the definition."""
    zone.check(s.L)
    _check_pair(s, k1, k2)
    X, Y = s.member(k1), s.member(k2)
    taus, dops = zone.delays, zone.dopplers
    values = np.empty((len(taus), len(dops)), dtype=complex)
    for i, tau in enumerate(taus):
        for j, v in enumerate(dops):
            values[i, j] = af_set_cross(X, Y, int(tau), int(v))
    return AFGrid(k1, k2, taus, dops, values)


def _lag_products(X: np.ndarray, Y: np.ndarray, tau: int) -> np.ndarray:
    """``P[a, b, t] = sum_m X[a, m, t] conj(Y[b, m, t + tau])``, zero outside the overlap."""
    A, M, L = X.shape
    P = np.zeros((A, Y.shape[0], L), dtype=complex)
    lo, hi = max(0, -tau), min(L, L - tau)
    if lo < hi:
        P[:, :, lo:hi] = np.einsum("amt,bmt->abt", X[:, :, lo:hi], np.conj(Y[:, :, lo + tau:hi + tau]))
    return P


def _doppler_slab(X, Y, tau: int, dopplers: np.ndarray) -> np.ndarray:
    L = X.shape[2]
    spectrum = np.fft.ifft(_lag_products(X, Y, tau), axis=2) * L
    return spectrum[:, :, dopplers % L]


def af_grid(s: DrcsSet, k1: int, k2: int, zone: Zone) -> AFGrid:
    """Transform-path AF grid for one ordered pair of set members."""
    zone.check(s.L)
    _check_pair(s, k1, k2)
    X = s.member(k1)[None]
    Y = s.member(k2)[None]
    taus, dops = zone.delays, zone.dopplers
    values = np.stack([_doppler_slab(X, Y, int(tau), dops)[0, 0] for tau in taus])
    return AFGrid(k1, k2, taus, dops, values)


def af_tensor(s: DrcsSet, zone: Zone) -> np.ndarray:
    """All ordered pairs at once: array ``[k1, k2, delay index, doppler index]``."""
    zone.check(s.L)
    C = s.complex_values()
    dops = zone.dopplers
    slabs = [_doppler_slab(C, C, int(tau), dops) for tau in zone.delays]
    return np.stack(slabs, axis=2)


@dataclass(frozen=True)
class ZoneMetrics:
    theta_a: float
    theta_c: float
    theta_max: float
    argmax_a: tuple | None
    argmax_c: tuple | None
    zone: Zone

    def as_dict(self) -> dict:
        return {
            "theta_a": self.theta_a,
            "theta_c": self.theta_c,
            "theta_max": self.theta_max,
            "argmax": {
                "auto": None if self.argmax_a is None else dict(zip(("k", "tau", "v"), self.argmax_a)),
                "cross": None if self.argmax_c is None else dict(zip(("k1", "k2", "tau", "v"), self.argmax_c)),
            },
            "zone": {"zx": self.zone.zx, "zy": self.zone.zy},
        }


def _scan_delay(C, tau, dops, zero_v):
    mag = np.abs(_doppler_slab(C, C, tau, dops))  # (K, K, nv)
    K = mag.shape[0]
    idx = np.arange(K)
    auto = mag[idx, idx].copy()
    if tau == 0:
        auto[:, zero_v] = -1.0
    ka, ja = np.unravel_index(np.argmax(auto), auto.shape)
    best_a = (float(auto[ka, ja]), (int(ka), tau, int(dops[ja])))
    best_c = (-1.0, None)
    if K > 1:
        cross = mag.copy()
        cross[idx, idx] = -1.0
        k1, k2, jc = np.unravel_index(np.argmax(cross), cross.shape)
        best_c = (float(cross[k1, k2, jc]), (int(k1), int(k2), tau, int(dops[jc])))
    return best_a, best_c


def zone_metrics(s: DrcsSet, zone: Zone, threads=None) -> ZoneMetrics:
    """Maximum auto (off-origin) and cross (all cells, k1 != k2) AF magnitudes."""
    zone.check(s.L)
    C = s.complex_values()
    dops = zone.dopplers
    zero_v = int(np.flatnonzero(dops == 0)[0])
    taus = [int(t) for t in zone.delays]
    n = thread_count(threads)
    if n > 1 and len(taus) > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(lambda t: _scan_delay(C, t, dops, zero_v), taus))
    else:
        results = [_scan_delay(C, t, dops, zero_v) for t in taus]

    # strict '>' over delays in increasing order keeps argmax deterministic
    best_a, best_c = (-1.0, None), (-1.0, None)
    for a, c in results:
        if a[0] > best_a[0]:
            best_a = a
        if c[0] > best_c[0]:
            best_c = c
    theta_a = max(best_a[0], 0.0)
    theta_c = max(best_c[0], 0.0)
    return ZoneMetrics(
        theta_a=theta_a,
        theta_c=theta_c,
        theta_max=max(theta_a, theta_c),
        argmax_a=best_a[1] if best_a[0] >= 0 else None,
        argmax_c=best_c[1],
        zone=zone,
    )
