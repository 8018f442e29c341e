# Which first-degree primes divide <n + m*gamma>, and when combining two
# divisors of the quadratic intersections fails to give a divisor.
from fdpi import (
    PrincipalIdeal,
    Side,
    combine_divisors,
    decompose_divisor,
    divides_quad,
    fdpi_biquadratic,
    fdpi_quadratic,
    intersect,
    make_biquadratic,
)

field = make_biquadratic(-4, 6)
I = PrincipalIdeal(5, 1, field)  # <5 + gamma>

ja, jb = intersect(I, Side.ALPHA), intersect(I, Side.BETA)
print(f"I & Z[alpha] = <{ja.c0} + {ja.c1} alpha>")
print(f"I & Z[beta]  = <{jb.c0} + {jb.c1} beta>")

p = 5
da = [x for x in fdpi_quadratic(field.qa, p) if divides_quad(ja, x)]
db = [y for y in fdpi_quadratic(field.qb, p) if divides_quad(jb, y)]
for ra in da:
    for sb in db:
        out = combine_divisors(I, ra, sb)
        print(f"{ra} + {sb} -> {out.ideal}  divides={out.divides}  exceptional={out.exceptional}")

# 5 divides n, so combinations with r + s != 0 are flagged exceptional; here
# they really do fail to divide I.  Going the other way always works:
for tc in fdpi_biquadratic(field, p):
    try:
        print(tc, "<-", [(str(x), str(y)) for x, y in decompose_divisor(I, tc)])
    except ValueError as exc:
        print(tc, "does not divide I:", exc)
