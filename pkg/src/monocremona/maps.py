"""The exponent-matrix model of a monomial rational self-map of P^n.

A map (x^{a_0} : ... : x^{a_n}) is stored as the (n+1)x(n+1) matrix whose
row i is the exponent vector a_i.  Validity means: every row sums to the
common degree d and every column has a zero (the monomials share no factor).
The map is birational exactly when |det| = d, and then its inverse is again
monomial; `invert` constructs the inverse matrix exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import kernels, linalg
from .errors import (
    CommonFactor,
    DegreeZero,
    EmptyBaseLocus,
    IntegralityFailure,
    NotBirational,
    NotStochastic,
    UnsupportedDimension,
)

CASE_I = "CaseI"
CASE_II = "CaseII"
CASE_III = "CaseIII"
CASE_IV = "CaseIV"


@dataclass(frozen=True)
class ExponentMatrix:
    """Validated exponent matrix of a monomial map of P^n, degree d."""

    n: int
    d: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))
        size = self.n + 1
        if self.n < 2 or self.d < 1:
            raise ValueError("need n >= 2 and d >= 1")
        if len(self.rows) != size or any(len(r) != size for r in self.rows):
            raise ValueError("rows must form an (n+1)x(n+1) matrix")
        if any(x < 0 for r in self.rows for x in r):
            raise ValueError("entries must be non-negative")
        if any(sum(r) != self.d for r in self.rows):
            raise NotStochastic("every row must sum to d")
        if any(all(r[j] > 0 for r in self.rows) for j in range(size)):
            raise CommonFactor("every column must contain a zero")

    @property
    def size(self) -> int:
        return self.n + 1

    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)


@dataclass(frozen=True)
class CaseLabel:
    """Outcome of the base-locus case analysis, with its witness."""

    label: str
    column: int | None = None
    lines: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.label not in (CASE_I, CASE_II, CASE_III, CASE_IV):
            raise ValueError(f"unknown case label {self.label!r}")
        if self.label == CASE_I:
            if self.column is None or self.lines:
                raise ValueError("case I witness is a single column index")
        else:
            if self.column is not None or not self.lines:
                raise ValueError("cases II-IV are witnessed by base-locus lines")
            if self.label == CASE_III and (
                len(self.lines) != 2 or set(self.lines[0]) & set(self.lines[1])
            ):
                raise ValueError("case III witness must be two disjoint pairs")
            if self.label == CASE_IV and len(self.lines) != 1:
                raise ValueError("case IV witness must be a single pair")


def validate(raw, normalize: bool = False) -> ExponentMatrix:
    """Check a raw square matrix and wrap it as an ExponentMatrix.

    With `normalize`, positive column minima are subtracted (dividing the
    monomials by their common factor) and the degree shrinks accordingly;
    without it such input raises CommonFactor.
    """
    rows = [tuple(int(x) for x in r) for r in raw]
    size = len(rows)
    if size < 3:
        raise ValueError("matrix must be at least 3x3 (maps of P^2 and up)")
    if any(len(r) != size for r in rows):
        raise ValueError("matrix must be square")
    if any(x < 0 for r in rows for x in r):
        raise ValueError("entries must be non-negative")
    sums = {sum(r) for r in rows}
    if len(sums) != 1:
        raise NotStochastic(f"row sums differ: {sorted(sums)}")
    d = sums.pop()
    if d == 0:
        raise DegreeZero("zero matrix has no degree")
    mins = [min(r[j] for r in rows) for j in range(size)]
    if any(m > 0 for m in mins):
        if not normalize:
            raise CommonFactor(f"column minima {mins} are not all zero")
        rows = [tuple(r[j] - mins[j] for j in range(size)) for r in rows]
        d -= sum(mins)
        if d == 0:
            raise DegreeZero("normalization removed every exponent")
    return ExponentMatrix(size - 1, d, tuple(rows))


def identity(n: int) -> ExponentMatrix:
    return ExponentMatrix(n, 1, linalg.identity(n + 1))


def phi_nd(n: int, d: int) -> ExponentMatrix:
    """The extremal map (x_0^d : x_0^{d-1}x_1 : ... : x_{n-1}^{d-1}x_n)."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    size = n + 1
    rows = []
    for i in range(size):
        row = [0] * size
        if i == 0:
            row[0] = d
        else:
            row[i - 1] += d - 1
            row[i] += 1
        rows.append(tuple(row))
    return ExponentMatrix(n, d, tuple(rows))


def is_birational(E: ExponentMatrix) -> bool:
    return abs(linalg.determinant(E.rows)) == E.d


def invert(E: ExponentMatrix) -> ExponentMatrix:
    """Exponent matrix of the inverse map.

    The inverse matrix must equal A^{-1} plus a constant row vector; adding
    w_j = -min_i (A^{-1})_{ij} to column j is the unique choice that makes
    all entries non-negative with a zero in every column.  Integrality is
    guaranteed for birational input, so a fractional result is an internal
    bug and aborts.
    """
    if not is_birational(E):
        raise NotBirational(f"|det| = {abs(linalg.determinant(E.rows))} != d = {E.d}")
    inv = linalg.rational_inverse(E.rows)
    size = E.size
    w = [-min(inv[i][j] for i in range(size)) for j in range(size)]
    b = [[inv[i][j] + w[j] for j in range(size)] for i in range(size)]
    if any(x.denominator != 1 for row in b for x in row):
        raise IntegralityFailure(f"inverse matrix is not integral for rows {E.rows}")
    rows = tuple(tuple(int(x) for x in row) for row in b)
    row_sums = {sum(r) for r in rows}
    if len(row_sums) != 1:
        raise IntegralityFailure(f"inverse row sums are not constant for rows {E.rows}")
    return ExponentMatrix(E.n, row_sums.pop(), rows)


def inverse_degree(E: ExponentMatrix) -> int:
    """Common degree d' of the monomials defining the inverse map."""
    return invert(E).d


def multidegrees(E: ExponentMatrix) -> tuple[int, int, int, int]:
    """Projective degrees (1, d, d', 1) of a birational map of P^3."""
    if E.n != 3:
        raise UnsupportedDimension("multidegrees are only computed for P^3")
    return (1, E.d, inverse_degree(E), 1)


def _rows_of(m) -> tuple[tuple[int, ...], ...]:
    if isinstance(m, ExponentMatrix):
        return m.rows
    return tuple(tuple(int(x) for x in r) for r in m)


def compose(B, A) -> ExponentMatrix:
    """Matrix of the composed map B after A, with the common factor removed."""
    rb, ra = _rows_of(B), _rows_of(A)
    if len(rb) != len(ra):
        raise ValueError("matrices must have the same size")
    prod = linalg.mat_mul(rb, ra)
    size = len(prod)
    mins = [min(prod[i][j] for i in range(size)) for j in range(size)]
    rows = tuple(tuple(prod[i][j] - mins[j] for j in range(size)) for i in range(size))
    if all(x == 0 for r in rows for x in r):
        raise DegreeZero("composition is a constant map")
    return ExponentMatrix(size - 1, sum(rows[0]), rows)


def canonical_form(E: ExponentMatrix) -> ExponentMatrix:
    """Least representative of E under all row and column permutations.

    Two matrices define the same map up to permuting coordinates and
    variables exactly when their canonical forms coincide.
    """
    key = kernels.canonical_key(E.flat(), E.size)
    rows = tuple(key[i * E.size : (i + 1) * E.size] for i in range(E.size))
    return ExponentMatrix(E.n, E.d, rows)


def is_extremal_class(E: ExponentMatrix) -> bool:
    """Whether E is the extremal map phi_{n,d} up to permutations."""
    return canonical_form(E).rows == canonical_form(phi_nd(E.n, E.d)).rows


def base_lines(E: ExponentMatrix) -> tuple[tuple[int, int], ...]:
    """Pairs (i, j) such that every monomial involves x_i or x_j.

    Exactly then the surface sum-of-monomials vanishes on the coordinate
    line {x_i = x_j = 0}.
    """
    return tuple(
        (i, j)
        for i, j in combinations(range(E.size), 2)
        if all(r[i] > 0 or r[j] > 0 for r in E.rows)
    )


def classify_case(E: ExponentMatrix) -> CaseLabel:
    """Case analysis on the shape of the base locus, for n = 3 and d >= 2.

    Checked in order: a column with exactly one zero (case I); two base
    lines sharing an index (case II); two disjoint base lines (case III);
    a single base line (case IV).  No base line at all is impossible for a
    birational map with d >= 2.
    """
    if E.n != 3:
        raise UnsupportedDimension("case analysis is only defined for P^3")
    if E.d < 2:
        raise ValueError("case analysis requires d >= 2")
    if not is_birational(E):
        raise NotBirational("case analysis requires a birational map")
    for j in range(E.size):
        if sum(1 for r in E.rows if r[j] == 0) == 1:
            return CaseLabel(CASE_I, column=j)
    lines = base_lines(E)
    if not lines:
        raise EmptyBaseLocus(f"no base line found for rows {E.rows}")
    shared = any(set(p) & set(q) for p, q in combinations(lines, 2))
    if shared:
        return CaseLabel(CASE_II, lines=lines)
    if len(lines) >= 2:
        return CaseLabel(CASE_III, lines=lines)
    return CaseLabel(CASE_IV, lines=lines)
