"""Independent oracles and generators used across the test modules.

Everything here deliberately avoids the library's own algorithms: the
determinant is a recursive cofactor expansion, the canonical form minimizes
over all row/column permutation pairs explicitly, and the class enumeration
is the unpruned product over all row tuples.
"""

import itertools

from monocremona.enumeration import compositions
from monocremona.maps import ExponentMatrix


def naive_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * naive_det(sub)
    return total


def naive_canonical(rows):
    size = len(rows)
    best = None
    for rp in itertools.permutations(range(size)):
        reordered = [rows[i] for i in rp]
        for cp in itertools.permutations(range(size)):
            key = tuple(reordered[i][j] for i in range(size) for j in cp)
            if best is None or key < best:
                best = key
    return best


def naive_classes(n, d):
    """Unpruned brute force over all ordered row tuples, canonicalized."""
    size = n + 1
    comps = [
        c for c in itertools.product(range(d + 1), repeat=size) if sum(c) == d
    ]
    classes = set()
    for rows in itertools.product(comps, repeat=size):
        if any(all(r[j] > 0 for r in rows) for j in range(size)):
            continue
        if abs(naive_det([list(r) for r in rows])) != d:
            continue
        classes.add(naive_canonical([tuple(r) for r in rows]))
    return classes


def random_birational(rand, n=3, dmin=1, dmax=6):
    """Rejection-sample a valid birational exponent matrix."""
    size = n + 1
    while True:
        d = rand.randint(dmin, dmax)
        comps = compositions(d, size)
        rows = tuple(comps[rand.randrange(len(comps))] for _ in range(size))
        if any(all(r[j] > 0 for r in rows) for j in range(size)):
            continue
        if abs(naive_det([list(r) for r in rows])) != d:
            continue
        return ExponentMatrix(n, d, rows)


def shuffled(rand, E):
    """A random member of E's permutation orbit."""
    size = E.size
    rp = list(range(size))
    cp = list(range(size))
    rand.shuffle(rp)
    rand.shuffle(cp)
    rows = tuple(tuple(E.rows[i][j] for j in cp) for i in rp)
    return ExponentMatrix(E.n, E.d, rows)
