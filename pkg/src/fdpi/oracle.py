"""Brute-force reference computations for testing.

Everything here is recomputed from definitions by exhaustive search and
shares no code with the root finders or generator formulas it is used to
check.  Slow by design; not used by the library itself.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

ROOT_SEARCH_BOUND = 10**6
PAIR_SEARCH_BOUND = 10**4
_DOUBLE_WIDTH = 1 << 127


def brute_roots(coeffs: Sequence[int], p: int) -> set[int]:
    """``{r in [0, p) : f(r) == 0 mod p}`` for ``f`` given highest degree first."""
    if p > ROOT_SEARCH_BOUND:
        raise ValueError(f"exhaustive search limited to p <= {ROOT_SEARCH_BOUND}")
    x = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in coeffs:
        # acc, x < p <= 10**6 so acc * x stays far below 2**63
        acc = (acc * x + (int(c) % p)) % p
    return {int(r) for r in np.flatnonzero(acc == 0)}


def mul_basis(u: Sequence[int], v: Sequence[int], a: int, b: int) -> tuple[int, int, int, int]:
    """Multiply ``u0 + u1*al + u2*be + u3*al*be`` by ``v`` with ``al^2 = a``,
    ``be^2 = b``."""
    u0, u1, u2, u3 = u
    v0, v1, v2, v3 = v
    out = (
        u0 * v0 + a * u1 * v1 + b * u2 * v2 + a * b * u3 * v3,
        u0 * v1 + u1 * v0 + b * (u2 * v3 + u3 * v2),
        u0 * v2 + u2 * v0 + a * (u1 * v3 + u3 * v1),
        u0 * v3 + u3 * v0 + u1 * v2 + u2 * v1,
    )
    if any(abs(c) >= _DOUBLE_WIDTH for c in out):
        raise OverflowError("product coefficient exceeds 127 bits")
    return out


def brute_pairs(a: int, b: int, t: int, p: int) -> set[tuple[int, int]]:
    """All ``(r, s)`` in ``[0, p)^2`` with ``r^2 == a``, ``s^2 == b`` and
    ``r + s == t`` modulo ``p``."""
    if p > PAIR_SEARCH_BOUND:
        raise ValueError(f"exhaustive search limited to p <= {PAIR_SEARCH_BOUND}")
    r = np.arange(p, dtype=np.int64)
    s = (t - r) % p
    ok = ((r * r - a) % p == 0) & ((s * s - b) % p == 0)
    return {(int(x), int(y)) for x, y in zip(r[ok], s[ok])}


def brute_divisor_pairs(I, tc) -> set[tuple[int, int]]:
    """Pairs from :func:`brute_pairs` whose components divide the
    intersections of ``I = <n + m*gamma>`` with the quadratic subrings.

    Generators are recomputed by multiplying out
    ``(n + m*al + m*be)(n + m*al - m*be)`` (and its beta twin) in the
    four-dimensional basis.
    """
    n, m = I.n, I.m
    a, b = I.field.a, I.field.b
    t, p = tc.r, tc.p
    if m == 0:
        ga = gb = (n, 0, 0, 0)
    else:
        ga = mul_basis((n, m, m, 0), (n, m, -m, 0), a, b)
        gb = mul_basis((n, m, m, 0), (n, -m, m, 0), a, b)
    assert ga[2] == ga[3] == 0 and gb[1] == gb[3] == 0
    return {
        (r, s)
        for r, s in brute_pairs(a, b, t, p)
        if (ga[0] + ga[1] * r) % p == 0 and (gb[0] + gb[2] * s) % p == 0
    }


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def sieve_primes(limit: int) -> list[int]:
    """Primes ``<= limit`` by a plain, unsegmented sieve."""
    if limit < 2:
        return []
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for d in range(2, int(limit**0.5) + 1):
        if flags[d]:
            flags[d * d :: d] = False
    return np.flatnonzero(flags).tolist()
