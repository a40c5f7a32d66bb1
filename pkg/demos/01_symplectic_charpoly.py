# The symplectic characteristic polynomial of a diagonal map.
#
# With the standard form on Q^4, the adjoint of diag(l1, l2, l3, l4) swaps the
# e- and f-blocks, so chi factors into one quadratic-in-s factor per pair
# (e_i, f_i).

from sympchar import Matrix, adjoint, charpoly, psi, scp, scp_factor_pairs

M = Matrix.diag([1, 2, 3, 4])
print("M* =", adjoint(M))

chi = scp(M)
print("chi(s, t) =", chi)
print("factored  =", scp_factor_pairs(chi))

# chi(s, 0) is the ordinary characteristic polynomial det(M - sE)
print("chi(s, 0) =", chi.value.subs_t(0))
print("phi_M(s)  =", charpoly(M).with_var("s"))

# chi(0, t) is the Pfaffian characteristic polynomial of M M*
print("chi(0, t) =", chi.value.subs_s(0))
print("psi(MM*)  =", psi(M @ adjoint(M)))
