# First-degree prime ideals of Z[alpha], Z[beta] and Z[gamma], gamma = alpha + beta.
#
# Take alpha^2 = 50 and beta^2 = 155.  A first-degree prime ideal of norm p
# is a pair (r, p) with r a root of the minimal polynomial modulo p.
from fdpi import fdpi_biquadratic, fdpi_quadratic, make_biquadratic

field = make_biquadratic(50, 155)

# gamma satisfies x^4 - 2(a+b)x^2 + (a-b)^2
print("minimal polynomial of gamma:", field.minpoly())

for p in (2, 3, 5, 7, 11, 13):
    qa = [i.r for i in fdpi_quadratic(field.qa, p)]
    qb = [i.r for i in fdpi_quadratic(field.qb, p)]
    bi = [i.r for i in fdpi_biquadratic(field, p)]
    print(f"p={p:3d}  Z[alpha]: {qa!s:10}  Z[beta]: {qb!s:10}  Z[gamma]: {bi}")

# At p = 3 only (0, 3) exists in Z[gamma]: 50 and 155 are both 2 mod 3, a
# non-residue, so neither quadratic ring has an ideal of norm 3.
