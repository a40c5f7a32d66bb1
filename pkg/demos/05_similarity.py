# Deciding symplectic similarity by comparing chi.

from sympchar import Matrix, adjoint, inverse, random_symplectic, scp, standard_form, symplectically_similar

M = Matrix.diag([1, 2, 3, 4])
P0 = random_symplectic(2, seed=3)
N = inverse(P0) @ M @ P0

ok, P = symplectically_similar(M, N)
print("M ~ P0^-1 M P0:", ok)
J = standard_form(2).gram
print("witness preserves the form:", P.T @ J @ P == J)
print("witness conjugates M to N:", inverse(P) @ M @ P == N)

# diag(1,3,2,4) has the same eigenvalues but different pairs (e_i, f_i)
K = Matrix.diag([1, 3, 2, 4])
print("chi(M) =", scp(M))
print("chi(K) =", scp(K))
print("M ~ K:", symplectically_similar(M, K)[0])

# a symplectically diagonalizable map is similar to its own adjoint
print("M ~ M*:", symplectically_similar(N, adjoint(N))[0])
