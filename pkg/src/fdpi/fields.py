"""Quadratic rings Z[alpha], Z[beta], their compositum Z[gamma] and their
first-degree prime ideals.

A first-degree prime ideal of ``Z[theta]`` with norm ``p`` is identified with
the pair ``(r, p)`` where ``r`` is a root of the minimal polynomial of
``theta`` modulo ``p``: the ideal is the kernel of ``theta -> r``.
"""

from __future__ import annotations

import dataclasses
import functools
from dataclasses import dataclass
from math import isqrt

from .errors import InvalidFieldError, InvalidIdealError, NotPrimeError
from .modular import is_prime, quartic_roots, sqrt_mod

FIELD_BOUND = 1 << 31


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def check_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2 or p >= 1 << 63 or not is_prime(p):
        raise NotPrimeError(f"{p} is not a prime below 2**63")
    return p


@functools.total_ordering
@dataclass(frozen=True)
class FdpIdeal:
    """First-degree prime ideal ``(r, p)``; ordered by ``(p, r)``."""

    r: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        if not 0 <= self.r < self.p:
            raise InvalidIdealError(f"root {self.r} outside [0, {self.p})")

    @classmethod
    def reduce(cls, r: int, p: int) -> FdpIdeal:
        """Build ``(r mod p, p)`` from any integer ``r``."""
        return cls(r % p, p)

    def __lt__(self, other):
        if not isinstance(other, FdpIdeal):
            return NotImplemented
        return (self.p, self.r) < (other.p, other.r)

    def __iter__(self):
        yield self.r
        yield self.p

    def __str__(self):
        return f"({self.r},{self.p})"


@dataclass(frozen=True)
class QuadraticField:
    """The ring ``Z[alpha]`` with ``alpha**2 = a``."""

    a: int

    def __post_init__(self):
        if not isinstance(self.a, int) or isinstance(self.a, bool):
            raise InvalidFieldError(f"a must be an integer, got {self.a!r}")
        if self.a == 0:
            raise InvalidFieldError("a must be nonzero")
        if abs(self.a) > FIELD_BOUND:
            raise InvalidFieldError(f"|a| must not exceed 2**31, got {self.a}")
        if _is_square(self.a):
            raise InvalidFieldError(f"{self.a} is a perfect square; x^2 - {self.a} is reducible")

    def minpoly(self) -> tuple[int, int, int]:
        """Coefficients of ``x**2 - a``, highest degree first."""
        return (1, 0, -self.a)

    def minpoly_mod(self, x: int, p: int) -> int:
        return (x * x - self.a) % p

    def contains(self, ideal: FdpIdeal) -> bool:
        """True iff ``ideal`` is a first-degree prime ideal of this ring."""
        return self.minpoly_mod(ideal.r, ideal.p) == 0

    def check_ideal(self, ideal: FdpIdeal, name: str = "Z[alpha]") -> None:
        if not self.contains(ideal):
            raise InvalidIdealError(
                f"{ideal} is not a first-degree prime ideal of {name} (a={self.a})"
            )


@dataclass(frozen=True)
class BiquadraticField:
    """The ring ``Z[gamma]``, ``gamma = alpha + beta``, over two distinct
    quadratic fields.

    ``gamma`` has minimal polynomial ``x**4 + c2 x**2 + c0`` with
    ``c2 = -2(a+b)`` and ``c0 = (a-b)**2``.
    """

    qa: QuadraticField
    qb: QuadraticField
    c2: int = dataclasses.field(init=False, repr=False)
    c0: int = dataclasses.field(init=False, repr=False)

    def __post_init__(self):
        if _is_square(self.qa.a * self.qb.a):
            raise InvalidFieldError(
                f"a={self.qa.a} and b={self.qb.a} define the same quadratic field"
            )
        object.__setattr__(self, "c2", -2 * (self.qa.a + self.qb.a))
        object.__setattr__(self, "c0", (self.qa.a - self.qb.a) ** 2)

    @property
    def a(self) -> int:
        return self.qa.a

    @property
    def b(self) -> int:
        return self.qb.a

    def minpoly(self) -> tuple[int, int, int, int, int]:
        """Coefficients of the quartic, highest degree first."""
        return (1, 0, self.c2, 0, self.c0)

    def minpoly_mod(self, x: int, p: int) -> int:
        y = x * x % p
        return (y * y + self.c2 * y + self.c0) % p

    def contains(self, ideal: FdpIdeal) -> bool:
        return self.minpoly_mod(ideal.r, ideal.p) == 0

    def check_ideal(self, ideal: FdpIdeal) -> None:
        if not self.contains(ideal):
            raise InvalidIdealError(
                f"{ideal} is not a first-degree prime ideal of Z[gamma] "
                f"(a={self.a}, b={self.b})"
            )


def make_biquadratic(a: int, b: int) -> BiquadraticField:
    """Validate ``(a, b)`` and build the compositum ring ``Z[alpha + beta]``.

    >>> f = make_biquadratic(50, 155)
    >>> f.minpoly()
    (1, 0, -410, 0, 11025)
    """
    return BiquadraticField(QuadraticField(a), QuadraticField(b))


def fdpi_quadratic(field: QuadraticField, p: int) -> list[FdpIdeal]:
    """All first-degree prime ideals of norm ``p`` in ``Z[alpha]``."""
    check_prime(p)
    return [FdpIdeal(r, p) for r in sqrt_mod(field.a, p)]


def fdpi_biquadratic(field: BiquadraticField, p: int) -> list[FdpIdeal]:
    """All first-degree prime ideals of norm ``p`` in ``Z[gamma]``."""
    check_prime(p)
    return [FdpIdeal(t, p) for t in quartic_roots(field.a, field.b, p)]


def eval_map(c0: int, c1: int, ideal: FdpIdeal) -> int:
    """Image of ``c0 + c1*theta`` under ``theta -> r`` in ``Z/pZ``.

    The element lies in ``ideal`` exactly when the result is 0.
    """
    return (c0 + c1 * ideal.r) % ideal.p
