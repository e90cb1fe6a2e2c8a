"""Exhaustive, symmetry-reduced enumeration of monomial Cremona maps.

Candidate matrices are built from rows chosen as a non-decreasing sequence
of compositions of d (killing row order up front); surviving birational
matrices are deduplicated by canonical form.  The scan over one first-row
index is the hot kernel (see `kernels`); first-row indices partition the
search space into independent tasks, so parallel runs merge partial results
with a plain set union and are deterministic regardless of scheduling.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from . import jsonutil, kernels
from .errors import BoundViolation
from .invariants import johnson_check
from .maps import CASE_I, CASE_II, CASE_III, CASE_IV, ExponentMatrix, inverse_degree


def compositions(d: int, parts: int) -> list[tuple[int, ...]]:
    """All `parts`-tuples of non-negative integers summing to d, in
    lexicographic order."""
    if d < 0 or parts < 1:
        raise ValueError("need d >= 0 and parts >= 1")
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for v in range(remaining + 1):
            rec(prefix + (v,), remaining - v, slots - 1)

    rec((), d, parts)
    return out


def conjectural_bound(n: int, d: int) -> int:
    """1 + (d-1) + ... + (d-1)^(n-1); equals d^2-d+1 for n = 3."""
    return sum((d - 1) ** i for i in range(n))


def _scan_one(args):
    comps, size, d, first = args
    return kernels.scan_multisets(comps, size, d, first)


def _enumerate_keys(n: int, d: int, jobs: int = 1):
    size = n + 1
    comps = compositions(d, size)
    raw = 0
    keys: set[tuple[int, ...]] = set()
    if jobs <= 1:
        for first in range(len(comps)):
            r, ks = kernels.scan_multisets(comps, size, d, first)
            raw += r
            keys |= ks
    else:
        tasks = [(comps, size, d, first) for first in range(len(comps))]
        with multiprocessing.Pool(jobs) as pool:
            for r, ks in pool.imap_unordered(_scan_one, tasks, chunksize=1):
                raw += r
                keys |= ks
    return raw, sorted(keys)


def _from_key(n: int, d: int, key) -> ExponentMatrix:
    size = n + 1
    rows = tuple(tuple(key[i * size : (i + 1) * size]) for i in range(size))
    return ExponentMatrix(n, d, rows)


def enumerate_maps(n: int, d: int, jobs: int = 1, callback=None) -> list[ExponentMatrix]:
    """Every birational class for (n, d), once each, as canonical matrices,
    sorted by canonical key."""
    _, keys = _enumerate_keys(n, d, jobs)
    out = []
    for key in keys:
        E = _from_key(n, d, key)
        if callback is not None:
            callback(E)
        out.append(E)
    return out


@dataclass(frozen=True)
class EnumerationSummary:
    n: int
    d: int
    raw_count: int
    class_count: int
    extremal_classes: tuple[tuple[tuple[int, ...], ...], ...]
    violations: tuple[dict, ...]
    case_histogram: dict[str, int]
    max_dprime: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "raw_count": self.raw_count,
            "class_count": self.class_count,
            "extremal_classes": [[list(r) for r in rows] for rows in self.extremal_classes],
            "violations": list(self.violations),
            "case_histogram": dict(self.case_histogram),
            "max_dprime": self.max_dprime,
        }

    def to_json(self) -> str:
        return jsonutil.dumps(self.to_dict())


def verify_bounds(n: int, d: int, jobs: int = 1, on_class=None) -> EnumerationSummary:
    """Enumerate all classes for (n, d) and check the degree bound on each.

    For n = 3 with d >= 2 every class goes through the full invariant
    report; other parameters compare the inverse degree against the bound
    directly (d' = d exactly for n = 2).  Bound violations are collected in
    the summary, never swallowed.
    """
    raw, keys = _enumerate_keys(n, d, jobs)
    violations: list[dict] = []
    extremal: list[tuple[tuple[int, ...], ...]] = []
    hist: dict[str, int] = {}
    if n == 3 and d >= 2:
        hist = {CASE_I: 0, CASE_II: 0, CASE_III: 0, CASE_IV: 0}
    max_dprime = 0
    for key in keys:
        E = _from_key(n, d, key)
        if on_class is not None:
            on_class(E)
        if n == 3 and d >= 2:
            try:
                report = johnson_check(E)
            except BoundViolation as exc:
                violations.append(
                    {"rows": [list(r) for r in E.rows], "reason": str(exc), **exc.details}
                )
                continue
            hist[report.case.label] += 1
            max_dprime = max(max_dprime, report.dprime)
            if report.extremal:
                extremal.append(E.rows)
        else:
            dprime = inverse_degree(E)
            bound = conjectural_bound(n, d)
            max_dprime = max(max_dprime, dprime)
            bad = dprime != d if n == 2 else dprime > bound
            if bad:
                violations.append(
                    {
                        "rows": [list(r) for r in E.rows],
                        "reason": f"d' = {dprime} violates the n = {n} bound",
                        "dprime": dprime,
                        "bound": bound,
                    }
                )
                continue
            if dprime == bound:
                extremal.append(E.rows)
    return EnumerationSummary(
        n=n,
        d=d,
        raw_count=raw,
        class_count=len(keys),
        extremal_classes=tuple(sorted(extremal)),
        violations=tuple(violations),
        case_histogram=hist,
        max_dprime=max_dprime,
    )
