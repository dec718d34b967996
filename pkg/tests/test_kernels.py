import os
import subprocess
import sys

import numpy as np
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from vnroles import _kernels


def slow_counts(cells):
    n_cols = cells.shape[1]
    return np.array(
        [[sum(1 for row in cells if row[i] and row[j]) for j in range(n_cols)] for i in range(n_cols)]
    )


binary = st.tuples(st.integers(0, 40), st.integers(1, 8)).flatmap(
    lambda shape: arrays(np.uint8, shape, elements=st.integers(0, 1))
)


@settings(max_examples=200, deadline=None)
@given(binary)
def test_both_paths_match_loop(cells):
    expected = slow_counts(cells)
    assert np.array_equal(_kernels.cooccurrence_numpy(cells), expected)
    assert np.array_equal(_kernels.cooccurrence_jit(cells), expected)


def test_diagonal_is_popcount():
    rng = np.random.default_rng(0)
    cells = (rng.random((500, 30)) < 0.2).astype(np.uint8)
    counts = _kernels.cooccurrence(cells)
    assert np.array_equal(np.diag(counts), cells.sum(axis=0))
    assert np.array_equal(counts, counts.T)


def _selected(env_value):
    env = dict(os.environ)
    env.pop("VNROLES_DISABLE_NUMBA", None)
    if env_value is not None:
        env["VNROLES_DISABLE_NUMBA"] = env_value
    code = "from vnroles import _kernels as k; print(k.cooccurrence.__name__)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_env_flag_selects_numpy():
    assert _selected("1") == "cooccurrence_numpy"
    assert _selected("0") == ("cooccurrence_jit" if _kernels.HAS_NUMBA else "cooccurrence_numpy")
