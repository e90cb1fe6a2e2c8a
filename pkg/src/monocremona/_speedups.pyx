# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled kernels for the enumeration hot loop.

Same contracts as `_kernels_py`.  Arithmetic runs on 64-bit integers; inputs
that could overflow (entry magnitudes beyond the per-size Bareiss bound)
raise OverflowError so the dispatcher in `kernels` can fall back to the
exact pure-Python path.
"""

from libc.stdlib cimport free, malloc

from itertools import permutations as _permutations

cdef int _NPERM[7]
cdef int _PERMS[7][720][6]
cdef long long _ENTRY_BOUND[7]


def _setup():
    cdef int s, k, pos
    for s in range(2, 7):
        k = 0
        for perm in _permutations(range(s)):
            for pos in range(s):
                _PERMS[s][k][pos] = perm[pos]
            k += 1
        _NPERM[s] = k
    # Bareiss intermediates are k x k minors, bounded by k! * B^k; keep
    # that below 2^63 for every k <= size.
    _ENTRY_BOUND[1] = 2000000000
    _ENTRY_BOUND[2] = 2000000000
    _ENTRY_BOUND[3] = 1000000
    _ENTRY_BOUND[4] = 20000
    _ENTRY_BOUND[5] = 2000
    _ENTRY_BOUND[6] = 300


_setup()


cdef long long _bareiss(long long* a, int n):
    cdef int i, j, k, r, sign = 1
    cdef long long prev = 1, pivot, tmp
    for k in range(n - 1):
        if a[k * n + k] == 0:
            r = -1
            for i in range(k + 1, n):
                if a[i * n + k] != 0:
                    r = i
                    break
            if r < 0:
                return 0
            for j in range(n):
                tmp = a[k * n + j]
                a[k * n + j] = a[r * n + j]
                a[r * n + j] = tmp
            sign = -sign
        pivot = a[k * n + k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) // prev
            a[i * n + k] = 0
        prev = pivot
    if sign > 0:
        return a[n * n - 1]
    return -a[n * n - 1]


cdef bint _row_less(long long* a, long long* b, int n):
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


cdef void _canon(long long* m, int n, long long* best):
    cdef int pi, i, j, k
    cdef int nperm = _NPERM[n]
    cdef long long cand[36]
    cdef long long rowbuf[6]
    cdef int* perm
    cdef bint smaller
    for pi in range(nperm):
        perm = &_PERMS[n][pi][0]
        for i in range(n):
            for j in range(n):
                cand[i * n + j] = m[i * n + perm[j]]
        # ascending insertion sort of the rows
        for i in range(1, n):
            for k in range(n):
                rowbuf[k] = cand[i * n + k]
            j = i - 1
            while j >= 0 and _row_less(rowbuf, &cand[j * n], n):
                for k in range(n):
                    cand[(j + 1) * n + k] = cand[j * n + k]
                j -= 1
            for k in range(n):
                cand[(j + 1) * n + k] = rowbuf[k]
        if pi == 0:
            for i in range(n * n):
                best[i] = cand[i]
        else:
            smaller = False
            for i in range(n * n):
                if cand[i] != best[i]:
                    smaller = cand[i] < best[i]
                    break
            if smaller:
                for i in range(n * n):
                    best[i] = cand[i]


def det_small(flat, int size):
    cdef long long a[36]
    cdef long long bound, v
    cdef int i, total
    if size < 1 or size > 6:
        raise OverflowError("compiled kernel supports sizes 1..6")
    total = size * size
    if len(flat) != total:
        raise ValueError("flat length does not match size")
    bound = _ENTRY_BOUND[size]
    for i in range(total):
        v = flat[i]
        if v > bound or v < -bound:
            raise OverflowError("entry magnitude too large for the compiled kernel")
        a[i] = v
    if size == 1:
        return a[0]
    return _bareiss(a, size)


def canonical_key(flat, int size):
    cdef long long m[36]
    cdef long long best[36]
    cdef int i, total
    if size < 1 or size > 6:
        raise OverflowError("compiled kernel supports sizes 1..6")
    total = size * size
    if len(flat) != total:
        raise ValueError("flat length does not match size")
    for i in range(total):
        m[i] = flat[i]
    if size == 1:
        return (m[0],)
    _canon(m, size, best)
    return tuple([best[i] for i in range(total)])


cdef class _Scanner:
    cdef long long* comps
    cdef int ncomps
    cdef int size
    cdef long long d
    cdef long long raw
    cdef int idx[8]
    cdef set keys

    def __cinit__(self):
        self.comps = NULL
        self.keys = set()
        self.raw = 0

    def __dealloc__(self):
        if self.comps != NULL:
            free(self.comps)
            self.comps = NULL

    cdef void scan(self, int depth, int start):
        cdef int i, j, t, missing
        cdef bint has_zero
        cdef long long m[36]
        cdef long long work[36]
        cdef long long best[36]
        cdef long long det
        cdef int n = self.size
        missing = 0
        for j in range(n):
            has_zero = False
            for t in range(depth):
                if self.comps[self.idx[t] * n + j] == 0:
                    has_zero = True
                    break
            if not has_zero:
                missing += 1
        if missing > (n - depth) * (n - 1):
            return
        if depth == n:
            for t in range(n):
                for j in range(n):
                    m[t * n + j] = self.comps[self.idx[t] * n + j]
            for i in range(n * n):
                work[i] = m[i]
            det = _bareiss(work, n)
            if det < 0:
                det = -det
            if det == self.d:
                self.raw += 1
                _canon(m, n, best)
                self.keys.add(tuple([best[i] for i in range(n * n)]))
            return
        for i in range(start, self.ncomps):
            self.idx[depth] = i
            self.scan(depth + 1, i)


def scan_multisets(comps, int size, d, int first):
    cdef int ncomps = len(comps)
    cdef long long dd
    cdef int i, j
    if size < 2 or size > 5:
        raise OverflowError("compiled scan supports sizes 2..5")
    dd = d
    if dd < 1 or dd > _ENTRY_BOUND[size]:
        raise OverflowError("degree out of compiled kernel range")
    if first < 0 or first >= ncomps:
        raise ValueError("first row index out of range")
    cdef _Scanner sc = _Scanner()
    sc.comps = <long long*> malloc(ncomps * size * sizeof(long long))
    if sc.comps == NULL:
        raise MemoryError()
    sc.ncomps = ncomps
    sc.size = size
    sc.d = dd
    for i in range(ncomps):
        row = comps[i]
        if len(row) != size:
            raise ValueError("composition width does not match size")
        for j in range(size):
            sc.comps[i * size + j] = row[j]
    sc.idx[0] = first
    sc.scan(1, first)
    return sc.raw, sc.keys
