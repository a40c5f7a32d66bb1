# Symplectically orthogonal splitting of a normal map into pair spaces.

from sympchar import (
    Matrix,
    classify_subspace,
    inverse,
    random_symplectic,
    standard_form,
    sympl_pair_decomposition,
)

P = random_symplectic(2, seed=7)
M = inverse(P) @ Matrix.diag([1, 2, 3, 4]) @ P
print("M =", M)

J = standard_form(2)
d = sympl_pair_decomposition(M)
for (lam, mu, m), W, proj in zip(d.pairs, d.spaces, d.projections):
    basis = [[str(x) for x in v] for v in W.basis]
    print(f"pair ({lam}, {mu}) x{m}: basis {basis}, {classify_subspace(W, J)}")
    print("  projection", proj)

W1, W2 = d.spaces
print("omega vanishes between W1 and W2:", all(J(v, w) == 0 for v in W1.basis for w in W2.basis))
