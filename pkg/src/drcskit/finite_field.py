"""Arithmetic in GF(p^n) with an explicit primitive polynomial.

Field elements are tuples ``(a_0, ..., a_{n-1})`` of integers in ``[0, p)``
standing for ``a_0 + a_1*alpha + ... + a_{n-1}*alpha^(n-1)``, where alpha is
the residue class of ``x`` modulo the defining polynomial.  Polynomials are
coefficient lists ordered low degree first, so ``x^2 + 2x + 2`` over Z_3 is
``[2, 2, 1]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import NotIrreducible, NotPrime, NotPrimitive, ParameterError

__all__ = [
    "FieldCtx",
    "ff_init",
    "ff_add",
    "ff_alpha_pow",
    "psi",
    "psi_inverse",
    "alpha_order",
    "is_prime",
    "prime_factors",
    "smallest_primitive_poly",
]

MAX_FIELD_SIZE = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, f, p):
    """Remainder of ``a`` divided by monic-or-not ``f`` over Z_p."""
    a = _trim(a)
    f = _trim(f)
    inv_lead = pow(f[-1], -1, p)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - coef * fc) % p
        a = _trim(a)
    return a


def _poly_mulmod(a, b, f, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_mod(prod, f, p)


def _poly_powmod(a, e, f, p):
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _is_irreducible(f, p):
    n = len(f) - 1
    if n <= 1:
        return True
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _poly_mod(f, list(low) + [1], p) == []:
                return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    """Immutable GF(p^n) context.

    ``alpha_powers[j]`` is the coefficient tuple of ``alpha**j`` for
    ``j = 0 .. p**n - 2``.
    """

    p: int
    n: int
    modulus_poly: tuple[int, ...]
    alpha_powers: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def size(self) -> int:
        return self.p**self.n

    @property
    def order(self) -> int:
        """Order of the multiplicative group, ``p**n - 1``."""
        return self.p**self.n - 1

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.n

    def elements(self):
        """All field elements: zero followed by alpha^0 .. alpha^(q-2)."""
        return (self.zero,) + self.alpha_powers


def alpha_order(p: int, n: int, poly) -> int:
    """Multiplicative order of ``x`` modulo ``poly`` over Z_p.

    ``poly`` must be irreducible so the quotient ring is a field.
    """
    q1 = p**n - 1
    order = q1
    x = [0, 1] if n > 1 else [(-poly[0]) % p]
    for r in prime_factors(q1):
        while order % r == 0 and _poly_powmod(x, order // r, poly, p) == [1]:
            order //= r
    return order


def ff_init(p: int, n: int, poly) -> FieldCtx:
    """Validate ``poly`` and tabulate the powers of alpha.

    Parameters
    ----------
    p : int
        Prime characteristic.
    n : int
        Extension degree, at least 1.
    poly : sequence of int
        ``n + 1`` coefficients, low degree first, leading coefficient 1.

    Raises
    ------
    NotPrime, NotIrreducible, NotPrimitive
        Naming the check that failed.
    """
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if n < 1:
        raise ParameterError(f"degree n={n} must be >= 1")
    if p**n > MAX_FIELD_SIZE:
        raise ParameterError(f"field size {p}^{n} exceeds {MAX_FIELD_SIZE}")
    poly = [int(c) for c in poly]
    if len(poly) != n + 1:
        raise ParameterError(f"polynomial needs {n + 1} coefficients, got {len(poly)}")
    if any(not 0 <= c < p for c in poly):
        raise ParameterError(f"polynomial coefficients must lie in [0, {p})")
    if poly[-1] != 1:
        raise ParameterError("polynomial must be monic")
    if not _is_irreducible(poly, p):
        raise NotIrreducible(f"polynomial {poly} is reducible over Z_{p}")
    order = alpha_order(p, n, poly) if poly[0] != 0 else 0
    if order != p**n - 1:
        raise NotPrimitive(
            f"polynomial {poly} is not primitive: root order {order} != {p**n - 1}"
        )

    # alpha * (a_0 + ... + a_{n-1} alpha^{n-1}) with alpha^n = -(c_0 + ... + c_{n-1} alpha^{n-1})
    powers = []
    cur = [1] + [0] * (n - 1)
    for _ in range(p**n - 1):
        powers.append(tuple(cur))
        top = cur[-1]
        shifted = [0] + cur[:-1]
        cur = [(s - top * c) % p for s, c in zip(shifted, poly[:-1])]
    return FieldCtx(p=p, n=n, modulus_poly=tuple(poly), alpha_powers=tuple(powers))


def ff_add(ctx: FieldCtx, a, b) -> tuple[int, ...]:
    return tuple((x + y) % ctx.p for x, y in zip(a, b))


def ff_alpha_pow(ctx: FieldCtx, j: int) -> tuple[int, ...]:
    return ctx.alpha_powers[j % ctx.order]


def psi(ctx: FieldCtx, e) -> int:
    """Base-p evaluation ``a_0 + a_1 p + ... + a_{n-1} p^(n-1)``."""
    value = 0
    for c in reversed(e):
        value = value * ctx.p + c
    return value


def psi_inverse(ctx: FieldCtx, value: int) -> tuple[int, ...]:
    if not 0 <= value < ctx.size:
        raise ParameterError(f"{value} outside [0, {ctx.size})")
    coeffs = []
    for _ in range(ctx.n):
        value, c = divmod(value, ctx.p)
        coeffs.append(c)
    return tuple(coeffs)


def smallest_primitive_poly(p: int, n: int) -> list[int]:
    """Lexicographically smallest primitive polynomial of degree ``n``.

    Coefficient vectors are compared low degree first.  This is a convenience
    helper only; presets always name their polynomial explicitly.
    """
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if p**n > MAX_FIELD_SIZE:
        raise ParameterError(f"field size {p}^{n} exceeds {MAX_FIELD_SIZE}")
    for low in itertools.product(range(p), repeat=n):
        poly = list(low) + [1]
        if poly[0] == 0:
            continue
        if _is_irreducible(poly, p) and alpha_order(p, n, poly) == p**n - 1:
            return poly
    raise ParameterError(f"no primitive polynomial of degree {n} over Z_{p}")  # pragma: no cover
