# Combining quadratic ideals and recovering them again.
from fdpi import FdpIdeal, classify_zero, combine, decompose, fdpi_biquadratic, make_biquadratic

field = make_biquadratic(50, 155)
p = 7

# (r, 7) in Z[alpha] and (s, 7) in Z[beta] combine into (r + s, 7) in Z[gamma]
for r in (1, 6):
    for s in (1, 6):
        tc = combine(field, FdpIdeal(r, p), FdpIdeal(s, p))
        print(f"({r},{p}) + ({s},{p}) -> {tc}")

# Every (t, p) with t != 0 has exactly one source pair ...
for tc in fdpi_biquadratic(field, p):
    out = decompose(field, tc)
    print(tc, out.kind.value, [str(i) for i in out.pair] if out.pair else "")

# ... while (0, p) depends on how many square roots a has modulo p.
for p in (3, 5, 7):
    z = classify_zero(field, p)
    print(f"(0,{p}): nu={z.nu}", [(str(x), str(y)) for x, y in z.pairs])

# A larger prime, where the closed formula r = (t^2 + a - b) / 2t does the work.
big = make_biquadratic(-4, 6)
tc = FdpIdeal(96, 97)
print(tc, "->", [str(i) for i in decompose(big, tc).pair])
