"""Role co-occurrence counting.

Two interchangeable implementations of the same kernel:

* ``cooccurrence_jit`` -- explicit row loop compiled with numba.
* ``cooccurrence_numpy`` -- an integer Gram matrix ``X.T @ X``.

``cooccurrence`` points at the JIT version when numba imports and
``VNROLES_DISABLE_NUMBA`` is unset (or "0"), and at the numpy one otherwise.
"""

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False


def _numba_disabled():
    flag = os.environ.get("VNROLES_DISABLE_NUMBA", "").strip().lower()
    return flag not in ("", "0", "false", "no")


USE_NUMBA = HAS_NUMBA and not _numba_disabled()


def cooccurrence_numpy(cells):
    """counts[i, j] = number of rows with a 1 in both column i and column j."""
    # float64 goes through BLAS; counts stay exact below 2**53 rows
    x = np.asarray(cells, dtype=np.float64)
    return np.rint(x.T @ x).astype(np.int64)


if HAS_NUMBA:

    @njit(cache=True, nogil=True)
    def _cooccurrence_loop(cells):
        n_rows, n_cols = cells.shape
        out = np.zeros((n_cols, n_cols), dtype=np.int64)
        hits = np.empty(n_cols, dtype=np.int64)
        for r in range(n_rows):
            k = 0
            for j in range(n_cols):
                if cells[r, j]:
                    hits[k] = j
                    k += 1
            for a in range(k):
                i = hits[a]
                for b in range(a, k):
                    out[i, hits[b]] += 1
        for i in range(n_cols):
            for j in range(i):
                out[i, j] = out[j, i]
        return out

    def cooccurrence_jit(cells):
        return _cooccurrence_loop(np.ascontiguousarray(cells, dtype=np.uint8))

else:  # pragma: no cover
    cooccurrence_jit = cooccurrence_numpy


cooccurrence = cooccurrence_jit if USE_NUMBA else cooccurrence_numpy
