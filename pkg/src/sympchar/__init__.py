"""Exact computation of the symplectic characteristic polynomial chi_M(s, t)
of an endomorphism of a symplectic vector space over Q, pair eigenspace
decompositions, symplectic diagonalization and symplectic similarity."""

from .diagonalization import (
    SymplecticDiagonalization,
    distinct_pair_eigenbasis,
    normal_pair_basis,
    symplectic_diagonalize,
    symplectically_similar,
)
from .eigenstructure import (
    PairDecomposition,
    eigen_pair_witness,
    pair_decomposition,
    pair_space,
    product_sum_pair_space,
    ratfun_pair_space,
    ratfun_projections,
    sympl_pair_decomposition,
)
from .errors import SymplecticError
from .matrix import (
    Matrix,
    Subspace,
    apply_poly,
    charpoly,
    det,
    eigenspace,
    generalized_eigenspace,
    inverse,
    is_diagonalizable,
    kernel_basis,
    two_endo_charpoly,
)
from .pfaffian import pfaffian_bipoly, pfaffian_expand, pfaffian_field
from .scalars import (
    BiPoly,
    Fraction,
    RatFun,
    UniPoly,
    bipoly_div_exact,
    bipoly_interpolate2d,
    ratfun_normalize,
    upoly_divrem,
    upoly_gcd,
    upoly_rational_roots,
)
from .scp import PairFactorization, ScpPolynomial, psi, scp, scp_factor_pairs, scp_special_square
from .symplectic import (
    SymplecticBasis,
    SymplecticForm,
    adjoint,
    classify_subspace,
    is_symplectic_map,
    is_symplectically_normal,
    lagrangian_complete,
    perp,
    pf_omega,
    random_symplectic,
    standard_form,
    symplectic_basis,
)

__version__ = "0.1.0"
