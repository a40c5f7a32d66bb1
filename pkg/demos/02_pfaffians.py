# Pfaffians by skew elimination, checked against cofactor expansion.

import random
from fractions import Fraction

from sympchar import Matrix, det, pf_omega, pfaffian_expand, pfaffian_field

a, b, c, d, e, f = 2, 3, 5, 7, 11, 13
A = Matrix([[0, a, b, c], [-a, 0, d, e], [-b, -d, 0, f], [-c, -e, -f, 0]])
print("Pf(A)      =", pfaffian_field(A))
print("af - be + cd =", a * f - b * e + c * d)
print("expansion  =", pfaffian_expand(A))
print("Pf^2, det  =", pfaffian_field(A) ** 2, det(A))

# a random 6x6 alternating matrix with rational entries
rng = random.Random(1)
rows = [[Fraction(0)] * 6 for _ in range(6)]
for i in range(6):
    for j in range(i + 1, 6):
        x = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        rows[i][j], rows[j][i] = x, -x
B = Matrix(rows)
print("random 6x6:", pfaffian_field(B), pfaffian_expand(B))

# Pf_omega is normalized so the identity map has Pfaffian 1
print("Pf_omega(E) =", pf_omega(Matrix.identity(4)))
