"""Compare the numba and numpy co-occurrence kernels, then time a full
pipeline on a synthetic lexicon the size of VerbNet 3.2b.

    python benchmarks/bench_cooccurrence.py [--repeat 20]
"""

import argparse
import sys
import tempfile
import time
from pathlib import Path

import numpy as np

from vnroles import _kernels
from vnroles.lexicon import Lexicon, VerbClass, parse_lexicon
from vnroles.pipeline import analyse

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from oracle import write_lexicon  # noqa: E402

ROLES = [f"Role{i:02d}" for i in range(30)]


def best_of(fn, arg, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(arg)
        times.append(time.perf_counter() - start)
    return min(times)


def synthetic_lexicon(rng, n_roots=277, n_classes=498, n_members=6394):
    per_class = np.bincount(rng.choice(n_classes, n_members), minlength=n_classes)
    parents = [None] * n_roots + [rng.integers(0, i) for i in range(n_roots, n_classes)]
    owned = [frozenset(rng.choice(ROLES, rng.integers(0, 4), replace=False)) for _ in range(n_classes)]

    def build(i):
        kids = [j for j in range(n_classes) if parents[j] == i]
        return VerbClass(
            f"c{i}-{i}", tuple(f"v{i}_{k}" for k in range(per_class[i])), owned[i], tuple(build(j) for j in kids)
        )

    return Lexicon.from_roots(build(i) for i in range(n_roots))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    print(f"numba available: {_kernels.HAS_NUMBA}, default kernel: {_kernels.cooccurrence.__name__}")
    if _kernels.HAS_NUMBA:
        start = time.perf_counter()
        _kernels.cooccurrence_jit(np.zeros((2, 2), dtype=np.uint8))
        print(f"first jit call (compile or cache load): {time.perf_counter() - start:.3f}s")

    print(f"{'rows':>9} {'cols':>5} {'numpy ms':>10} {'numba ms':>10}")
    for rows, cols in [(290, 30), (6394, 30), (100_000, 30), (1_000_000, 30)]:
        cells = (rng.random((rows, cols)) < 0.15).astype(np.uint8)
        t_np = best_of(_kernels.cooccurrence_numpy, cells, args.repeat)
        t_nb = best_of(_kernels.cooccurrence_jit, cells, args.repeat)
        assert np.array_equal(_kernels.cooccurrence_numpy(cells), _kernels.cooccurrence_jit(cells))
        print(f"{rows:>9} {cols:>5} {t_np * 1e3:>10.3f} {t_nb * 1e3:>10.3f}")

    lex = synthetic_lexicon(rng)
    with tempfile.TemporaryDirectory() as tmp:
        write_lexicon(tmp, lex)
        start = time.perf_counter()
        parsed = parse_lexicon(tmp)
        t_parse = time.perf_counter() - start
        start = time.perf_counter()
        analyse(parsed, 55)
        t_analyse = time.perf_counter() - start
    print(f"synthetic 498-class / 6394-member lexicon: parse {t_parse:.3f}s, analyse {t_analyse:.3f}s")


if __name__ == "__main__":
    main()
