"""Exit criteria for the package, one test per criterion.

Every check is exact (zero mismatches); timing limits are wall-clock.
Run ``pytest tests/test_acceptance.py -v`` for a PASS/FAIL line per
criterion in the terminal summary.
"""

import random
import subprocess
import sys
import time
from math import gcd

from fdpi import (
    DecomposeKind,
    FdpIdeal,
    InvalidFieldError,
    PrincipalIdeal,
    Side,
    classify_zero,
    combine,
    combine_divisors,
    decompose,
    decompose_divisor,
    divides_biquad,
    divides_quad,
    eval_map,
    fdpi_biquadratic,
    fdpi_quadratic,
    intersect,
    make_biquadratic,
    quartic_roots,
)
from fdpi.oracle import brute_divisor_pairs, brute_pairs, brute_roots, sieve_primes

from conftest import random_fields

I = FdpIdeal
PRIMES_2000 = sieve_primes(2000)
PRIMES_500 = sieve_primes(500)


def _roots(ideals):
    return {i.r for i in ideals}


def test_criterion_1_biquadratic_correspondence_example():
    start = time.perf_counter()
    f = make_biquadratic(50, 155)
    expected = {3: ({0}, set()), 5: ({0}, {0}), 7: ({0, 2, 5}, {1, 6})}
    for p, (bi, quad) in expected.items():
        assert _roots(fdpi_biquadratic(f, p)) == bi
        assert _roots(fdpi_quadratic(f.qa, p)) == quad
        assert _roots(fdpi_quadratic(f.qb, p)) == quad
    assert decompose(f, I(2, 7)).pair == (I(1, 7), I(1, 7))
    assert decompose(f, I(5, 7)).pair == (I(6, 7), I(6, 7))
    z = classify_zero(f, 7)
    assert z.nu == 2
    assert set(z.pairs) == {(I(1, 7), I(6, 7)), (I(6, 7), I(1, 7))}
    assert decompose(f, I(0, 7)).kind is DecomposeKind.ZERO_CASE
    assert time.perf_counter() - start < 1.0


def test_criterion_2_divisibility_example():
    start = time.perf_counter()
    f = make_biquadratic(-4, 6)
    J = PrincipalIdeal(5, 1, f)
    ja, jb = intersect(J, Side.ALPHA), intersect(J, Side.BETA)
    assert (ja.c0, ja.c1) == (15, 10)
    assert (jb.c0, jb.c1) == (35, 10)
    assert {x for x in fdpi_quadratic(f.qa, 5) if divides_quad(ja, x)} == {I(1, 5), I(4, 5)}
    assert {y for y in fdpi_quadratic(f.qb, 5) if divides_quad(jb, y)} == {I(1, 5), I(4, 5)}
    table = {
        (I(1, 5), I(4, 5)): (I(0, 5), True, False),
        (I(1, 5), I(1, 5)): (I(2, 5), False, True),
        (I(4, 5), I(4, 5)): (I(3, 5), False, True),
    }
    for (ra, sb), want in table.items():
        out = combine_divisors(J, ra, sb)
        assert (out.ideal, out.divides, out.exceptional) == want
    assert time.perf_counter() - start < 1.0


def test_criterion_3_oracle_equivalence():
    start = time.perf_counter()
    mismatches = 0
    for f in random_fields(random.Random(3), 100):
        fc = (1, 0, -2 * (f.a + f.b), 0, (f.a - f.b) ** 2)
        fa = (1, 0, -f.a)
        for p in PRIMES_2000:
            mismatches += set(quartic_roots(f.a, f.b, p)) != brute_roots(fc, p)
            mismatches += _roots(fdpi_quadratic(f.qa, p)) != brute_roots(fa, p)
    assert mismatches == 0
    assert time.perf_counter() - start < 60.0


def test_criterion_4_combination_properties():
    violations = 0
    for f in random_fields(random.Random(3), 100):
        for p in PRIMES_2000:
            qa, qb = fdpi_quadratic(f.qa, p), fdpi_quadratic(f.qb, p)
            for ra in qa:
                for sb in qb:
                    tc = combine(f, ra, sb)
                    t = tc.r
                    violations += (t**4 - 2 * (f.a + f.b) * t**2 + (f.a - f.b) ** 2) % p != 0
                    if p == 2 or t != 0:
                        violations += decompose(f, tc).pair != (ra, sb)
            for tc in fdpi_biquadratic(f, p):
                if p != 2 and tc.r == 0:
                    continue
                ra, sb = decompose(f, tc).pair
                violations += combine(f, ra, sb) != tc
                violations += brute_pairs(f.a, f.b, tc.r, p) != {(ra.r, sb.r)}
    assert violations == 0


def _random_principals(rng, count, bound=10**4):
    out = []
    while len(out) < count:
        try:
            f = make_biquadratic(rng.randint(-bound, bound), rng.randint(-bound, bound))
        except InvalidFieldError:
            continue
        n, m = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if m != 0 and gcd(n, m) == 1:
            out.append(PrincipalIdeal(n, m, f))
    return out


def test_criterion_5_divisor_properties():
    start = time.perf_counter()
    violations = exceptional_seen = divisors_seen = 0
    for J in _random_principals(random.Random(5), 100):
        f, n, m = J.field, J.n, J.m
        ja, jb = intersect(J, Side.ALPHA), intersect(J, Side.BETA)
        for p in PRIMES_500:
            qa, qb = fdpi_quadratic(f.qa, p), fdpi_quadratic(f.qb, p)
            for ra in qa:
                for sb in qb:
                    if (n + m * (ra.r + sb.r)) % p == 0:
                        mirror = eval_map(ja.c0, ja.c1, ra) + eval_map(jb.c0, jb.c1, sb)
                        violations += mirror % p != 0
                    if not (divides_quad(ja, ra) and divides_quad(jb, sb)):
                        continue
                    try:
                        out = combine_divisors(J, ra, sb)
                    except ArithmeticError:
                        violations += 1
                        continue
                    exceptional_seen += out.exceptional
                    if not out.exceptional:
                        violations += not out.divides
                    elif not out.divides:
                        violations += (n + m * (ra.r + sb.r)) % p == 0
            for tc in fdpi_biquadratic(f, p):
                if not divides_biquad(J, tc):
                    continue
                divisors_seen += 1
                pairs = decompose_divisor(J, tc)
                for ra, sb in pairs:
                    violations += not divides_quad(ja, ra) or not divides_quad(jb, sb)
                violations += {(x.r, y.r) for x, y in pairs} != brute_divisor_pairs(J, tc)
    assert violations == 0
    assert exceptional_seen > 0 and divisors_seen > 0
    assert time.perf_counter() - start < 60.0


def test_criterion_6_unit_multiple_all_or_none():
    rng = random.Random(6)
    fields = random_fields(rng, 50)
    primes = sieve_primes(5000)
    violations = 0
    for _ in range(1000):
        f = rng.choice(fields)
        p = rng.choice(primes)
        n = rng.randint(1, 10**5) * (p if rng.random() < 0.5 else 1) * rng.choice((1, -1))
        J = PrincipalIdeal(n, 0, f)
        flags = {divides_biquad(J, tc) for tc in fdpi_biquadratic(f, p)}
        violations += len(flags) > 1
        violations += bool(flags) and flags != {n % p == 0}
    assert violations == 0


def _timed_scan(jobs):
    cmd = [sys.executable, "-m", "fdpi", "scan", "-a", "50", "-b", "155", "--pmax", "1000000", "--jobs", str(jobs)]
    start = time.perf_counter()
    proc = subprocess.run(cmd, capture_output=True, check=True)
    return proc.stdout, time.perf_counter() - start


def test_criterion_7_scan_performance_and_determinism():
    out1, t1 = _timed_scan(1)
    out4, t4 = _timed_scan(4)
    assert out1.count(b"\n") == 78498
    assert out1 == out4
    assert t1 < 10.0 and t4 < 10.0
