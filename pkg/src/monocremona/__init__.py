"""Exact tools for monomial Cremona transformations of projective space.

Models a monomial rational self-map by its exponent matrix, inverts it
exactly, computes the geometric invariants of the associated surface
(reduced section degrees, fundamental-line indicators, inferred Milnor sum),
and exhaustively verifies the inverse-degree bound d' <= d^2 - d + 1 for
three-dimensional maps, including uniqueness of the extremal class.
"""

from .enumeration import (
    EnumerationSummary,
    compositions,
    conjectural_bound,
    enumerate_maps,
    verify_bounds,
)
from .errors import (
    ArityMismatch,
    BoundViolation,
    CommonFactor,
    CremonaError,
    DegreeZero,
    EmptyBaseLocus,
    ExactDivisionError,
    IntegralityFailure,
    InternalDisagreement,
    NegativeMilnorSum,
    NotBirational,
    NotHomogeneous,
    NotStochastic,
    ParseError,
    SingularMatrix,
    TheoryViolation,
    UnsupportedDimension,
    ZeroPolynomial,
)
from .invariants import (
    PAIRS,
    InvariantReport,
    build_f,
    d_prime_from_geometry,
    johnson_check,
    k_vector,
    l_matrix,
    linear_system_matrix,
    mu_inferred,
    toric_polar,
)
from .kernels import BACKEND
from .linalg import adjugate, determinant, rational_inverse
from .maps import (
    CASE_I,
    CASE_II,
    CASE_III,
    CASE_IV,
    CaseLabel,
    ExponentMatrix,
    base_lines,
    canonical_form,
    classify_case,
    compose,
    identity,
    inverse_degree,
    invert,
    is_birational,
    is_extremal_class,
    multidegrees,
    phi_nd,
    validate,
)
from .poly import SparsePoly, divide_exact, gcd, squarefree_part

__version__ = "0.1.0"
