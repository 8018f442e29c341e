"""Divisibility of principal ideals ``<n + m*gamma>`` by first-degree primes.

An ideal ``(t, p)`` divides ``I`` when ``I`` is contained in the kernel of
the evaluation ``gamma -> t``, i.e. when ``n + m*t == 0 (mod p)``.  The
intersections ``I & Z[alpha]`` and ``I & Z[beta]`` are principal, generated
by ``(n + m*alpha + m*beta)(n + m*alpha - m*beta)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .combination import DecomposeKind, IdealPair, combine, decompose
from .errors import InvalidParameterError, PreconditionError
from .fields import FIELD_BOUND, BiquadraticField, FdpIdeal, QuadraticField, eval_map


class Side(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"


@dataclass(frozen=True)
class PrincipalIdeal:
    """``<n + m*gamma>`` in ``Z[gamma]`` for coprime ``n``, ``m``.

    ``m == 0`` is accepted for any ``n != 0`` and denotes ``<n>``.
    """

    n: int
    m: int
    field: BiquadraticField

    def __post_init__(self):
        if abs(self.n) > FIELD_BOUND or abs(self.m) > FIELD_BOUND:
            raise InvalidParameterError("|n| and |m| must not exceed 2**31")
        if self.m == 0:
            if self.n == 0:
                raise InvalidParameterError("<0> is not a valid principal ideal here")
        elif gcd(self.n, self.m) != 1:
            raise InvalidParameterError(f"n={self.n} and m={self.m} are not coprime")


@dataclass(frozen=True)
class QuadraticPrincipalIdeal:
    """Generator ``c0 + c1*theta`` of ``I & Z[theta]``, ``theta`` being
    ``alpha`` or ``beta`` according to ``side``."""

    c0: int
    c1: int
    side: Side
    field: QuadraticField


@dataclass(frozen=True)
class CombineDivisorOutcome:
    ideal: FdpIdeal
    divides: bool
    exceptional: bool


def intersect(I: PrincipalIdeal, side: Side) -> QuadraticPrincipalIdeal:
    """Generator of ``I`` intersected with ``Z[alpha]`` or ``Z[beta]``.

    For ``m != 0`` this is ``n^2 + m^2(a - b) + 2nm*alpha`` (``a``, ``b``
    swapped on the beta side); for ``m == 0`` it is ``n`` itself.
    """
    f = I.field
    quad = f.qa if side is Side.ALPHA else f.qb
    if I.m == 0:
        return QuadraticPrincipalIdeal(I.n, 0, side, quad)
    diff = f.a - f.b if side is Side.ALPHA else f.b - f.a
    return QuadraticPrincipalIdeal(I.n**2 + I.m**2 * diff, 2 * I.n * I.m, side, quad)


def divides_biquad(I: PrincipalIdeal, tc: FdpIdeal) -> bool:
    I.field.check_ideal(tc)
    return eval_map(I.n, I.m, tc) == 0


def divides_quad(J: QuadraticPrincipalIdeal, ideal: FdpIdeal) -> bool:
    """True iff ``ideal`` of ``Z[theta]`` divides ``J``.

    Raises if ``ideal`` belongs to the other quadratic ring.
    """
    J.field.check_ideal(ideal, f"Z[{J.side.value}]")
    return eval_map(J.c0, J.c1, ideal) == 0


def is_exceptional(p: int, n: int, t: int) -> bool:
    """Whether a combined divisor ``(t, p)`` may fail to divide ``<n + m*gamma>``."""
    return p != 2 and n % p == 0 and t % p != 0


def combine_divisors(I: PrincipalIdeal, ra: FdpIdeal, sb: FdpIdeal) -> CombineDivisorOutcome:
    """Combine a divisor of ``I & Z[alpha]`` with one of ``I & Z[beta]``.

    The combination always divides ``I`` unless ``p != 2``, ``p | n`` and
    ``r + s != 0 (mod p)``; in that case it may or may not divide.
    """
    if ra.p != sb.p:
        raise PreconditionError(f"norms differ: {ra.p} != {sb.p}")
    if not divides_quad(intersect(I, Side.ALPHA), ra):
        raise PreconditionError(f"{ra} does not divide I & Z[alpha]")
    if not divides_quad(intersect(I, Side.BETA), sb):
        raise PreconditionError(f"{sb} does not divide I & Z[beta]")
    tc = combine(I.field, ra, sb)
    divides = divides_biquad(I, tc)
    exceptional = is_exceptional(tc.p, I.n, tc.r)
    if not exceptional and not divides:
        raise ArithmeticError(f"non-exceptional combination {tc} does not divide I")
    return CombineDivisorOutcome(tc, divides, exceptional)


def decompose_divisor(I: PrincipalIdeal, tc: FdpIdeal) -> list[IdealPair]:
    """Quadratic divisor pairs ``((r, p), (s, p))`` with ``r + s == t``.

    One pair when ``p == 2`` or ``t != 0``; for ``(0, p)`` with odd ``p``
    every combining pair (none, one or two of them) is returned.  Each
    component divides the corresponding intersection of ``I``.
    """
    if not divides_biquad(I, tc):
        raise PreconditionError(f"{tc} does not divide <{I.n} + {I.m}*gamma>")
    outcome = decompose(I.field, tc)
    if outcome.kind is DecomposeKind.UNIQUE:
        pairs = [outcome.pair]
    else:
        pairs = list(outcome.zero_info.pairs)

    ja, jb = intersect(I, Side.ALPHA), intersect(I, Side.BETA)
    for ra, sb in pairs:
        if not (divides_quad(ja, ra) and divides_quad(jb, sb)):
            raise ArithmeticError(f"component of {tc} fails to divide an intersection")
    return pairs
