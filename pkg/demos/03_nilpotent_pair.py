# Two nilpotent maps whose two-endomorphism polynomial has no pair factor.

from sympchar import Matrix, two_endo_charpoly, scp_factor_pairs
from sympchar.errors import FactorizationFailed

M = Matrix([[0, 1], [0, 0]])
N = Matrix([[0, 0], [1, 0]])
p = two_endo_charpoly(M, N)
print("det((M - s)(N - s) - t) =", p)
print("M and N commute:", M.commutes_with(N))

try:
    scp_factor_pairs(p)
except FactorizationFailed as exc:
    print("no factorization into (l - s)(m - s) - t:", exc)
