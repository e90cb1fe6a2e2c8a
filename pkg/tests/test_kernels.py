import random

import pytest

from monocremona import _kernels_py, kernels
from monocremona.enumeration import compositions
from monocremona.linalg import determinant

compiled = pytest.importorskip("monocremona._speedups") if kernels.BACKEND == "compiled" else None

pytestmark = pytest.mark.skipif(
    kernels.BACKEND != "compiled", reason="compiled kernels not built"
)


def random_flat(rand, size, lo=-9, hi=9):
    return [rand.randint(lo, hi) for _ in range(size * size)]


def test_det_parity():
    rand = random.Random(101)
    for _ in range(300):
        size = rand.randint(1, 5)
        flat = random_flat(rand, size)
        expected = _kernels_py.det_small(flat, size)
        assert compiled.det_small(flat, size) == expected
        rows = [flat[i * size : (i + 1) * size] for i in range(size)]
        assert expected == determinant(rows)


def test_canonical_parity():
    rand = random.Random(103)
    for _ in range(300):
        size = rand.randint(2, 5)
        flat = random_flat(rand, size, 0, 6)
        assert compiled.canonical_key(flat, size) == _kernels_py.canonical_key(flat, size)


@pytest.mark.parametrize("n,d", [(2, 3), (3, 2), (3, 3)])
def test_scan_parity(n, d):
    size = n + 1
    comps = compositions(d, size)
    for first in range(len(comps)):
        fast = compiled.scan_multisets(comps, size, d, first)
        pure = _kernels_py.scan_multisets(comps, size, d, first)
        assert fast[0] == pure[0]
        assert fast[1] == pure[1]


def test_dispatcher_falls_back_on_huge_entries():
    big = 10**30
    flat = [big, 0, 0, 0, 1, 0, 0, 0, 1]
    assert kernels.det_small(flat, 3) == big
    key = kernels.canonical_key(flat, 3)
    assert key == _kernels_py.canonical_key(flat, 3)


def test_compiled_kernel_rejects_out_of_range():
    with pytest.raises(OverflowError):
        compiled.det_small([10**30, 0, 0, 1], 2)
    with pytest.raises(OverflowError):
        compiled.scan_multisets(compositions(2, 3), 3, 2 * 10**9, 0)
