"""Exception hierarchy.

Every domain error carries a ``token``: a short upper-case identifier the
command line front end prints so that scripts can match on it.
"""


class SymplecticError(Exception):
    token = "DOMAIN_ERROR"


# scalars
class DivisionByZeroPoly(SymplecticError, ZeroDivisionError):
    token = "DIVISION_BY_ZERO_POLY"


class BothZero(SymplecticError, ValueError):
    token = "BOTH_ZERO"


class ZeroPolynomial(SymplecticError, ValueError):
    token = "ZERO_POLYNOMIAL"


class ZeroDenominator(SymplecticError, ZeroDivisionError):
    token = "ZERO_DENOMINATOR"


class NotAFactor(SymplecticError, ValueError):
    token = "NOT_A_FACTOR"


class DuplicateNode(SymplecticError, ValueError):
    token = "DUPLICATE_NODE"


class InsufficientNodes(SymplecticError, ValueError):
    token = "INSUFFICIENT_NODES"


# matrices
class NotSquare(SymplecticError, ValueError):
    token = "NOT_SQUARE"


class SizeMismatch(SymplecticError, ValueError):
    token = "SIZE_MISMATCH"


class ScalarKindMismatch(SymplecticError, TypeError):
    token = "SCALAR_KIND_MISMATCH"


class SingularMatrix(SymplecticError, ZeroDivisionError):
    token = "SINGULAR_MATRIX"


class IrrationalSpectrum(SymplecticError, ValueError):
    token = "IRRATIONAL_SPECTRUM"


class RatFunDimensionExceeded(SymplecticError, ValueError):
    token = "RATFUN_DIMENSION_EXCEEDED"


# pfaffians
class NotAlternating(SymplecticError, ValueError):
    token = "NOT_ALTERNATING"


class OddSize(SymplecticError, ValueError):
    token = "ODD_SIZE"


class DegreeBoundExceeded(SymplecticError, ValueError):
    token = "DEGREE_BOUND_EXCEEDED"


# symplectic geometry
class DegenerateForm(SymplecticError, ValueError):
    token = "DEGENERATE_FORM"


class NotLagrangian(SymplecticError, ValueError):
    token = "NOT_LAGRANGIAN"


class NotTransverse(SymplecticError, ValueError):
    token = "NOT_TRANSVERSE"


class NotSelfAdjoint(SymplecticError, ValueError):
    token = "NOT_SELF_ADJOINT"


class RelationNotSatisfied(SymplecticError, ValueError):
    token = "RELATION_NOT_SATISFIED"


# factorization and decompositions
class NonSplitSpectrum(SymplecticError, ValueError):
    token = "NON_SPLIT_SPECTRUM"


class FactorizationFailed(SymplecticError, ValueError):
    token = "FACTORIZATION_FAILED"


class NotCommuting(SymplecticError, ValueError):
    token = "NOT_COMMUTING"


class NotSymplecticallyNormal(SymplecticError, ValueError):
    token = "NOT_SYMPLECTICALLY_NORMAL"


class NotDiagonalizable(SymplecticError, ValueError):
    token = "NOT_DIAGONALIZABLE"


class NotSymplecticallyDiagonalizable(SymplecticError, ValueError):
    token = "NOT_SYMPLECTICALLY_DIAGONALIZABLE"


class RepeatedPairFactor(SymplecticError, ValueError):
    token = "REPEATED_PAIR_FACTOR"


class EqualPairValues(SymplecticError, ValueError):
    token = "EQUAL_PAIR_VALUES"


class ParseError(SymplecticError, ValueError):
    token = "PARSE_ERROR"
