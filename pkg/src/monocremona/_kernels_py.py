"""Pure-Python implementations of the enumeration hot-path kernels.

Mirrors `_speedups.pyx` exactly (same pruning, same counts, same keys), just
on Python ints, so results are identical and unbounded.
"""

from itertools import permutations

from .linalg import _bareiss


def det_small(flat, size):
    return _bareiss([list(flat[i * size : (i + 1) * size]) for i in range(size)])


def canonical_key(flat, size):
    """Lexicographically least flattening over all row/column permutations.

    For a fixed column permutation the least row arrangement is the rows in
    ascending sorted order, so only the column permutations are enumerated.
    """
    rows = [tuple(flat[i * size : (i + 1) * size]) for i in range(size)]
    best = None
    for perm in permutations(range(size)):
        cand = sorted(tuple(r[j] for j in perm) for r in rows)
        key = tuple(x for row in cand for x in row)
        if best is None or key < best:
            best = key
    return best


def scan_multisets(comps, size, d, first):
    """Visit every non-decreasing index multiset starting at `first`.

    Returns (count, keys): the number of multisets whose matrix is valid
    (each column has a zero) and birational (|det| = d), and the set of
    their canonical keys.  A prefix is pruned when the columns still missing
    a zero exceed what the remaining rows could possibly supply (each row
    has at least one positive entry, hence at most size-1 zeros).
    """
    raw = 0
    keys = set()
    idx = [first] * size

    def rec(depth, start):
        nonlocal raw
        missing = 0
        for j in range(size):
            if all(comps[idx[t]][j] for t in range(depth)):
                missing += 1
        if missing > (size - depth) * (size - 1):
            return
        if depth == size:
            flat = [x for t in range(size) for x in comps[idx[t]]]
            if abs(det_small(flat, size)) == d:
                raw += 1
                keys.add(canonical_key(flat, size))
            return
        for i in range(start, len(comps)):
            idx[depth] = i
            rec(depth + 1, i)

    if first < 0 or first >= len(comps):
        raise ValueError("first row index out of range")
    rec(1, first)
    return raw, keys
