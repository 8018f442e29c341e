"""Combination of quadratic first-degree prime ideals into biquadratic ones,
and the inverse decomposition.

Given ``(r, p)`` in ``Z[alpha]`` and ``(s, p)`` in ``Z[beta]``, the pair
``(r + s, p)`` is a first-degree prime ideal of ``Z[gamma]``.  Conversely
every ``(t, p)`` with ``p == 2`` or ``t != 0`` comes from exactly one such
pair.  The remaining ideals ``(0, p)``, ``p`` odd, arise from zero, one or
two combinations according to the number of roots of ``x**2 - a`` mod ``p``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionError
from .fields import BiquadraticField, FdpIdeal
from .modular import inv_mod, sqrt_mod

IdealPair = tuple[FdpIdeal, FdpIdeal]


class DecomposeKind(enum.Enum):
    UNIQUE = "unique"
    ZERO_CASE = "zero_case"


@dataclass(frozen=True)
class ZeroClassification:
    """How ``(0, p)`` of ``Z[gamma]`` arises from combinations.

    ``nu`` is the number of roots of ``x**2 - a`` modulo ``p``; ``pairs``
    lists the ordered ``(Z[alpha] ideal, Z[beta] ideal)`` pairs combining to
    ``(0, p)``.
    """

    p: int
    nu: int
    pairs: tuple[IdealPair, ...]


@dataclass(frozen=True)
class DecomposeOutcome:
    kind: DecomposeKind
    pair: Optional[IdealPair] = None
    zero_info: Optional[ZeroClassification] = None


def _check_pair(field: BiquadraticField, ra: FdpIdeal, sb: FdpIdeal) -> None:
    if ra.p != sb.p:
        raise PreconditionError(f"norms differ: {ra.p} != {sb.p}")
    field.qa.check_ideal(ra, "Z[alpha]")
    field.qb.check_ideal(sb, "Z[beta]")


def combine(field: BiquadraticField, ra: FdpIdeal, sb: FdpIdeal) -> FdpIdeal:
    """Combine ``(r, p)`` of ``Z[alpha]`` and ``(s, p)`` of ``Z[beta]`` into
    ``(r + s, p)`` of ``Z[gamma]``."""
    _check_pair(field, ra, sb)
    return FdpIdeal.reduce(ra.r + sb.r, ra.p)


def classify_zero(field: BiquadraticField, p: int) -> ZeroClassification:
    """Classify the ideal ``(0, p)`` of ``Z[gamma]`` for an odd prime ``p``.

    ``(0, p)`` exists iff ``p`` divides ``a - b``, in which case ``x**2 - a``
    and ``x**2 - b`` agree modulo ``p`` and every root ``r`` gives the
    combination ``(r, p), (-r, p)``.
    """
    if p == 2:
        raise PreconditionError("p = 2 has a unique decomposition; use decompose")
    FdpIdeal(0, p)  # validates primality
    if (field.a - field.b) % p != 0:
        raise PreconditionError(f"(0,{p}) is not an ideal of Z[gamma]")
    roots = sqrt_mod(field.a, p)
    pairs = tuple(
        (FdpIdeal(r, p), FdpIdeal.reduce(-r, p)) for r in roots
    )
    return ZeroClassification(p=p, nu=len(roots), pairs=pairs)


def decompose(field: BiquadraticField, tc: FdpIdeal) -> DecomposeOutcome:
    """Recover the source pair of ``(t, p)`` or classify ``(0, p)``."""
    field.check_ideal(tc)
    t, p = tc
    if p == 2:
        r, s = field.a % 2, field.b % 2
    elif t == 0:
        return DecomposeOutcome(DecomposeKind.ZERO_CASE, zero_info=classify_zero(field, p))
    else:
        # r = (t^2 + a - b) / 2t and s = t - r.  When a root of x^2 - a or
        # x^2 - b is 0 the other sign choice collapses onto this one, so no
        # separate branch is needed.
        inv = inv_mod(2 * t, p)
        r = (t * t + field.a - field.b) * inv % p
        s = (t * t - field.a + field.b) * inv % p

    if (r * r - field.a) % p or (s * s - field.b) % p or (r + s - t) % p:
        raise ArithmeticError(f"decomposition of {tc} failed its postcondition")
    return DecomposeOutcome(DecomposeKind.UNIQUE, pair=(FdpIdeal(r, p), FdpIdeal(s, p)))
