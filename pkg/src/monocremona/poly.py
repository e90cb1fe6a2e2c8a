"""Exact sparse multivariate polynomials over the rationals.

A polynomial maps exponent tuples (one entry per variable) to nonzero
Fraction coefficients; the zero polynomial stores no terms.  The term order
used for leading terms, printing and normalization is graded lexicographic.
Inputs in this package are tiny (a handful of terms, four variables), so the
gcd uses the classical recursive approach: split off the content with
respect to the last active variable and run a fraction-free subresultant
remainder sequence for the univariate step.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from math import lcm as int_lcm

from .errors import (
    ArityMismatch,
    ExactDivisionError,
    NotHomogeneous,
    ZeroPolynomial,
)

Exponent = tuple[int, ...]


def _grlex(e: Exponent):
    return (sum(e), e)


class SparsePoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms=()):
        if nvars < 1:
            raise ValueError("need at least one variable")
        items = terms.items() if isinstance(terms, dict) else terms
        clean: dict[Exponent, Fraction] = {}
        for exps, coeff in items:
            coeff = Fraction(coeff)
            if not coeff:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ArityMismatch(f"exponent {exps} does not have {nvars} entries")
            if any(e < 0 for e in exps):
                raise ValueError("exponents must be non-negative")
            acc = clean.get(exps, Fraction(0)) + coeff
            if acc:
                clean[exps] = acc
            else:
                clean.pop(exps, None)
        self._nvars = nvars
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePoly":
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range")
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, exps, coeff=1) -> "SparsePoly":
        return cls(nvars, {tuple(exps): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps) -> Fraction:
        return self._terms.get(tuple(int(e) for e in exps), Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def leading(self) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        e = max(self._terms, key=_grlex)
        return e, self._terms[e]

    def monomial_content(self) -> Exponent:
        """Componentwise minimum exponent: the largest monomial divisor."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no content")
        exps = list(self._terms)
        return tuple(min(e[i] for e in exps) for i in range(self._nvars))

    # -- arithmetic --------------------------------------------------------

    def _check_arity(self, other: "SparsePoly"):
        if self._nvars != other._nvars:
            raise ArityMismatch(f"{self._nvars} variables vs {other._nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self._nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check_arity(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            acc = out.get(e, Fraction(0)) + c
            if acc:
                out[e] = acc
            else:
                out.pop(e, None)
        return SparsePoly(self._nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, SparsePoly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return SparsePoly(self._nvars, {e: v * c for e, v in self._terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check_arity(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(e, Fraction(0)) + c1 * c2
                if acc:
                    out[e] = acc
                else:
                    out.pop(e, None)
        return SparsePoly(self._nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = SparsePoly.constant(self._nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus and restriction ------------------------------------------

    def derivative(self, index: int) -> "SparsePoly":
        if not 0 <= index < self._nvars:
            raise IndexError(f"variable index {index} out of range")
        out = {}
        for e, c in self._terms.items():
            if e[index] == 0:
                continue
            d = list(e)
            d[index] -= 1
            out[tuple(d)] = c * e[index]
        return SparsePoly(self._nvars, out)

    def restrict_zero(self, index: int) -> "SparsePoly":
        """Set variable `index` to zero; the arity is unchanged."""
        if not 0 <= index < self._nvars:
            raise IndexError(f"variable index {index} out of range")
        return SparsePoly(
            self._nvars, {e: c for e, c in self._terms.items() if e[index] == 0}
        )

    # -- comparison, hashing, printing --------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, key=_grlex, reverse=True):
            c = self._terms[e]
            mono = "*".join(
                f"x{i}" if p == 1 else f"x{i}^{p}" for i, p in enumerate(e) if p
            )
            if not mono:
                parts.append((c < 0, str(abs(c))))
            elif abs(c) == 1:
                parts.append((c < 0, mono))
            else:
                parts.append((c < 0, f"{abs(c)}*{mono}"))
        first_neg, head = parts[0]
        text = ("-" if first_neg else "") + head
        for neg, chunk in parts[1:]:
            text += (" - " if neg else " + ") + chunk
        return text

    def __repr__(self):
        return f"SparsePoly({self._nvars}, {self._terms!r})"


# -- division, gcd, squarefree part ------------------------------------------


def divide_exact(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Exact quotient p/q; raises ExactDivisionError if q does not divide p."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return SparsePoly.zero(p.nvars)
    p._check_arity(q)
    qe, qc = q.leading()
    quot: dict[Exponent, Fraction] = {}
    rem = p
    while not rem.is_zero():
        re, rc = rem.leading()
        diff = tuple(a - b for a, b in zip(re, qe))
        if any(x < 0 for x in diff):
            raise ExactDivisionError(f"{q} does not divide {p}")
        c = rc / qc
        quot[diff] = quot.get(diff, Fraction(0)) + c
        rem = rem - SparsePoly.monomial(p.nvars, diff, c) * q
    return SparsePoly(p.nvars, quot)


def _normalize(p: SparsePoly) -> SparsePoly:
    """Scale to integer coefficients with content 1 and positive leading one."""
    if p.is_zero():
        return p
    coeffs = list(p.terms().values())
    den = 1
    for c in coeffs:
        den = int_lcm(den, c.denominator)
    num = 0
    for c in coeffs:
        num = int_gcd(num, c.numerator * den // c.denominator)
    scale = Fraction(den, num)
    if p.leading()[1] < 0:
        scale = -scale
    return p * scale


def _degree_in(p: SparsePoly, var: int) -> int:
    return max((e[var] for e in p.terms()), default=0)


def _coeff_of_power(p: SparsePoly, var: int, k: int) -> SparsePoly:
    out = {}
    for e, c in p.terms().items():
        if e[var] == k:
            d = list(e)
            d[var] = 0
            out[tuple(d)] = c
    return SparsePoly(p.nvars, out)


def _times_power(p: SparsePoly, var: int, k: int) -> SparsePoly:
    e = [0] * p.nvars
    e[var] = k
    return p * SparsePoly.monomial(p.nvars, e)


def _prem(a: SparsePoly, b: SparsePoly, var: int) -> SparsePoly:
    """Pseudo-remainder of a by b, both viewed as univariate in x_var."""
    db = _degree_in(b, var)
    lb = _coeff_of_power(b, var, db)
    e = _degree_in(a, var) - db + 1
    r = a
    while not r.is_zero() and _degree_in(r, var) >= db:
        dr = _degree_in(r, var)
        lr = _coeff_of_power(r, var, dr)
        r = lb * r - _times_power(lr, var, dr - db) * b
        e -= 1
    if e > 0:
        r = r * lb**e
    return r


def _content(p: SparsePoly, var: int) -> SparsePoly:
    """Gcd of the coefficients of p viewed as univariate in x_var."""
    acc = None
    for k in range(_degree_in(p, var) + 1):
        c = _coeff_of_power(p, var, k)
        if c.is_zero():
            continue
        acc = c if acc is None else _gcd_rec(acc, c, var - 1)
    return _normalize(acc)


def _gcd_rec(p: SparsePoly, q: SparsePoly, var: int) -> SparsePoly:
    """Gcd of nonzero p, q involving only variables 0..var."""
    while var >= 0 and _degree_in(p, var) == 0 and _degree_in(q, var) == 0:
        var -= 1
    if var < 0:
        return SparsePoly.constant(p.nvars, 1)
    dp, dq = _degree_in(p, var), _degree_in(q, var)
    if dp == 0:
        return _gcd_rec(p, _content(q, var), var - 1)
    if dq == 0:
        return _gcd_rec(_content(p, var), q, var - 1)
    cp, cq = _content(p, var), _content(q, var)
    a = divide_exact(p, cp)
    b = divide_exact(q, cq)
    if _degree_in(a, var) < _degree_in(b, var):
        a, b = b, a
    # subresultant remainder sequence on the primitive parts
    g = SparsePoly.constant(p.nvars, 1)
    h = SparsePoly.constant(p.nvars, 1)
    while True:
        delta = _degree_in(a, var) - _degree_in(b, var)
        r = _prem(a, b, var)
        if r.is_zero():
            part = divide_exact(b, _content(b, var))
            break
        if _degree_in(r, var) == 0:
            part = SparsePoly.constant(p.nvars, 1)
            break
        a, b = b, divide_exact(r, g * h**delta)
        g = _coeff_of_power(a, var, _degree_in(a, var))
        if delta == 1:
            h = g
        elif delta > 1:
            h = divide_exact(g**delta, h ** (delta - 1))
    return _gcd_rec(cp, cq, var - 1) * part


def gcd(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Greatest common divisor, with integer primitive coefficients and a
    positive leading coefficient in graded lexicographic order."""
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    if p.is_zero():
        return _normalize(q)
    if q.is_zero():
        return _normalize(p)
    p._check_arity(q)
    return _normalize(_gcd_rec(p, q, p.nvars - 1))


def squarefree_part(p: SparsePoly) -> SparsePoly:
    """Generator of the radical: p divided by its gcd with all partials.

    Valid for homogeneous polynomials in characteristic zero.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no squarefree part")
    if not p.is_homogeneous():
        raise NotHomogeneous("squarefree part is computed for homogeneous input")
    g = p
    for i in range(p.nvars):
        dp = p.derivative(i)
        if dp.is_zero():
            continue
        g = gcd(g, dp)
    return _normalize(divide_exact(p, g))
