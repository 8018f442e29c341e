"""Exact arithmetic modulo a prime: primality, inverses and square roots.

Residues are plain Python ints kept in the canonical range ``[0, p)``;
negative inputs are reduced on entry.
"""

from __future__ import annotations

from .errors import InvalidParameterError, NonInvertibleError

MAX_MODULUS = 1 << 63

# Below 3_215_031_751 the bases 2, 3, 5, 7 already decide primality.
_SMALL_BASES = (2, 3, 5, 7)
_SMALL_BOUND = 3_215_031_751
# First twelve primes: complete for every n < 3.3 * 10**24, hence all 64-bit n.
_FULL_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Exhaustive square-root search is cheaper than Tonelli-Shanks setup here.
_EXHAUSTIVE_LIMIT = 64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test for ``1 <= n < 2**63``."""
    if not 1 <= n < MAX_MODULUS:
        raise InvalidParameterError(f"is_prime expects 1 <= n < 2**63, got {n}")
    if n < 4:
        return n >= 2
    for q in _FULL_BASES:
        if n % q == 0:
            return n == q

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    bases = _SMALL_BASES if n < _SMALL_BOUND else _FULL_BASES
    for base in bases:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inv_mod(x: int, p: int) -> int:
    """Return ``y`` in ``[0, p)`` with ``x * y == 1 (mod p)``."""
    x %= p
    if x == 0:
        raise NonInvertibleError(f"{x} is not invertible modulo {p}")
    return pow(x, -1, p)


def _tonelli_shanks(n: int, p: int) -> int:
    # n is a nonzero quadratic residue, p an odd prime
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1

    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1

    m = s
    c = pow(z, q, p)
    t = pow(n, q, p)
    x = pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        x = x * b % p
    return x


def sqrt_mod(n: int, p: int) -> tuple[int, ...]:
    """All square roots of ``n`` modulo the prime ``p``, in increasing order.

    The result is empty for a non-residue, ``(0,)`` when ``p`` divides ``n``,
    a single root when ``p == 2`` and otherwise a pair ``(x, p - x)``.
    """
    n %= p
    if n == 0:
        return (0,)
    if p == 2:
        return (1,)
    if p <= _EXHAUSTIVE_LIMIT:
        return tuple(x for x in range(1, p) if x * x % p == n)
    if pow(n, (p - 1) // 2, p) != 1:
        return ()
    x = _tonelli_shanks(n, p)
    return tuple(sorted((x, p - x)))


def quartic_roots(a: int, b: int, p: int) -> tuple[int, ...]:
    """Roots modulo ``p`` of ``x**4 - 2(a+b) x**2 + (a-b)**2``, sorted.

    For odd ``p`` the quartic is solved as a quadratic in ``y = x**2`` whose
    discriminant is ``16ab``, so ``y = (a+b) +/- sqrt(4ab)``; each ``y`` then
    contributes its own square roots.  Repeated roots collapse in the set.
    """
    if p == 2:
        c = (a - b) * (a - b)
        return tuple(t for t in (0, 1) if (t**4 - 2 * (a + b) * t**2 + c) % 2 == 0)
    disc = sqrt_mod(4 * a * b, p)
    if not disc:
        return ()
    d = disc[0]
    roots = set(sqrt_mod(a + b + d, p))
    roots.update(sqrt_mod(a + b - d, p))
    return tuple(sorted(roots))
