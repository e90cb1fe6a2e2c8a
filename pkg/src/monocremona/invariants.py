"""Geometric invariants of a monomial Cremona map of P^3.

For the surface D = V(f), f the sum of the map's monomials, this module
computes: the toric polar components x_i df/dx_i, the coefficient matrix of
those components in the monomial basis (equal to the transpose of the
exponent matrix), the reduced degrees k_i of the coordinate-plane sections,
the indicators l_{ij} of fundamental lines contained in D, the sum of
Milnor numbers of a general plane section inferred from the degree formula

    d' = d^2 - 4d - mu + sum(k) - sum(l),

and the full bound report asserting sum(k) - sum(l) <= 3d + 1 and
d' <= d^2 - d + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import jsonutil

from .errors import (
    ArityMismatch,
    BoundViolation,
    InternalDisagreement,
    NegativeMilnorSum,
    NotBirational,
    UnsupportedDimension,
)
from .maps import (
    CaseLabel,
    ExponentMatrix,
    base_lines,
    classify_case,
    inverse_degree,
    is_birational,
    is_extremal_class,
)
from .poly import SparsePoly, squarefree_part

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class InvariantReport:
    d: int
    dprime: int
    k: tuple[int, int, int, int]
    l: tuple[int, int, int, int, int, int]
    mu_inferred: int
    lhs: int
    rhs: int
    bound: int
    case: CaseLabel
    extremal: bool

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "dprime": self.dprime,
            "k": list(self.k),
            "l": list(self.l),
            "mu_inferred": self.mu_inferred,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "bound": self.bound,
            "case": {
                "label": self.case.label,
                "column": self.case.column,
                "lines": [list(p) for p in self.case.lines],
            },
            "extremal": self.extremal,
        }

    def to_json(self) -> str:
        return jsonutil.dumps(self.to_dict())


def build_f(E: ExponentMatrix) -> SparsePoly:
    """Sum of the map's monomials, homogeneous of degree d."""
    return SparsePoly(E.size, [(row, 1) for row in E.rows])


def toric_polar(f: SparsePoly) -> tuple[SparsePoly, ...]:
    """The four components x_i * df/dx_i."""
    if f.nvars != 4:
        raise ArityMismatch("toric polar components are computed in 4 variables")
    return tuple(SparsePoly.variable(4, i) * f.derivative(i) for i in range(4))


def linear_system_matrix(E: ExponentMatrix) -> tuple[tuple[int, ...], ...]:
    """Coefficients of the toric polar components in the monomial basis.

    Entry (i, j) is the coefficient of x^{a_j} in x_i df/dx_i; for a map
    with pairwise distinct rows this is exactly the transpose of the
    exponent matrix, which is why the monomial map and the toric polar map
    span the same linear system.
    """
    if E.n != 3:
        raise UnsupportedDimension("defined for P^3")
    comps = toric_polar(build_f(E))
    out = []
    for i in range(4):
        row = []
        for j in range(4):
            c = comps[i].coefficient(E.rows[j])
            if c.denominator != 1:
                raise InternalDisagreement("non-integer linear system coefficient")
            row.append(int(c))
        out.append(tuple(row))
    return tuple(out)


def _k_fast(E: ExponentMatrix) -> tuple[int, ...]:
    # Restriction to x_i = 0 keeps the rows with a zero in column i; those
    # monomials are distinct with unit coefficients (distinct rows), so after
    # pulling out the monomial content m the cofactor is squarefree and the
    # reduced degree is #{j : m_j > 0} + (d - sum(m)).
    ks = []
    for i in range(E.size):
        surviving = [r for r in E.rows if r[i] == 0]
        m = [min(r[j] for r in surviving) for j in range(E.size)]
        ks.append(sum(1 for x in m if x > 0) + (E.d - sum(m)))
    return tuple(ks)


def _k_oracle(E: ExponentMatrix) -> tuple[int, ...]:
    f = build_f(E)
    return tuple(
        squarefree_part(f.restrict_zero(i)).total_degree() for i in range(E.size)
    )


def k_vector(E: ExponentMatrix, mode: str = "fast") -> tuple[int, int, int, int]:
    """Reduced degrees k_i of the plane curves D on {x_i = 0}.

    Mode "fast" uses the combinatorial formula; mode "oracle" recomputes
    through polynomial squarefree parts and cross-checks the fast value.
    """
    if E.n != 3:
        raise UnsupportedDimension("k vector is defined for P^3")
    if not is_birational(E):
        raise NotBirational("k vector requires a birational map")
    if mode not in ("fast", "oracle"):
        raise ValueError(f"unknown mode {mode!r}")
    fast = _k_fast(E)
    if mode == "fast":
        return fast
    oracle = _k_oracle(E)
    if fast != oracle:
        raise InternalDisagreement(
            f"k vector mismatch for rows {E.rows}: fast {fast} vs oracle {oracle}"
        )
    return oracle


def l_matrix(E: ExponentMatrix) -> tuple[int, int, int, int, int, int]:
    """Indicators l_{ij}, ordered (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)."""
    if E.n != 3:
        raise UnsupportedDimension("l matrix is defined for P^3")
    lines = set(base_lines(E))
    return tuple(1 if pair in lines else 0 for pair in PAIRS)


def d_prime_from_geometry(d: int, mu: int, k, l) -> int:
    """Inverse degree from the geometric data: d^2-4d-mu+sum(k)-sum(l)."""
    return d * d - 4 * d - mu + sum(k) - sum(l)


def _mu_from(d: int, dprime: int, k, l, rows) -> int:
    mu = d * d - 4 * d - dprime + sum(k) - sum(l)
    if mu < 0:
        raise NegativeMilnorSum(f"inferred Milnor sum {mu} < 0 for rows {rows}")
    return mu


def mu_inferred(E: ExponentMatrix) -> int:
    """Sum of Milnor numbers of a general plane section of D, inferred by
    rearranging the degree formula around the independently computed d'."""
    if E.n != 3:
        raise UnsupportedDimension("defined for P^3")
    if E.d < 2:
        raise ValueError("defined for d >= 2")
    if not is_birational(E):
        raise NotBirational("requires a birational map")
    dprime = inverse_degree(E)
    return _mu_from(E.d, dprime, _k_fast(E), l_matrix(E), E.rows)


def johnson_check(E: ExponentMatrix, oracle: bool = False) -> InvariantReport:
    """Full invariant report with the two degree bounds asserted.

    Raises BoundViolation if sum(k) - sum(l) > 3d + 1 or d' > d^2 - d + 1;
    neither can happen for a birational monomial map of P^3.
    """
    if E.n != 3:
        raise UnsupportedDimension("the bound report is defined for P^3")
    if E.d < 2:
        raise ValueError("the bound report requires d >= 2")
    if not is_birational(E):
        raise NotBirational("the bound report requires a birational map")
    d = E.d
    dprime = inverse_degree(E)
    k = k_vector(E, mode="oracle" if oracle else "fast")
    l = l_matrix(E)
    mu = _mu_from(d, dprime, k, l, E.rows)
    lhs = sum(k) - sum(l)
    rhs = 3 * d + 1
    bound = d * d - d + 1
    details = {"d": d, "dprime": dprime, "lhs": lhs, "rhs": rhs, "bound": bound}
    if lhs > rhs:
        raise BoundViolation(
            f"sum(k)-sum(l) = {lhs} exceeds {rhs} for rows {E.rows}", E.rows, details
        )
    if dprime > bound:
        raise BoundViolation(
            f"d' = {dprime} exceeds {bound} for rows {E.rows}", E.rows, details
        )
    return InvariantReport(
        d=d,
        dprime=dprime,
        k=k,
        l=l,
        mu_inferred=mu,
        lhs=lhs,
        rhs=rhs,
        bound=bound,
        case=classify_case(E),
        extremal=is_extremal_class(E),
    )
