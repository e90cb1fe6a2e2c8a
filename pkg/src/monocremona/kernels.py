"""Backend selection for the hot-path kernels.

The compiled extension (`_speedups`) is optional; `_kernels_py` implements
the same contracts.  Set MONOCREMONA_PURE=1 to force the fallback.  The
compiled kernels work on 64-bit integers and raise OverflowError when inputs
are out of range, in which case the wrappers below fall back transparently,
so callers always get exact results.
"""

import os

from . import _kernels_py as _py

_impl = _py
if os.environ.get("MONOCREMONA_PURE") != "1":
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _py

BACKEND = "compiled" if _impl is not _py else "pure-python"

if _impl is _py:
    det_small = _py.det_small
    canonical_key = _py.canonical_key
    scan_multisets = _py.scan_multisets
else:

    def det_small(flat, size):
        try:
            return _impl.det_small(flat, size)
        except OverflowError:
            return _py.det_small(flat, size)

    def canonical_key(flat, size):
        try:
            return _impl.canonical_key(flat, size)
        except OverflowError:
            return _py.canonical_key(flat, size)

    def scan_multisets(comps, size, d, first):
        try:
            return _impl.scan_multisets(comps, size, d, first)
        except OverflowError:
            return _py.scan_multisets(comps, size, d, first)
