"""Compare the compiled elimination kernel with the pure-Python fallback.

    python benchmarks/bench_elim.py [--sizes 20 40 80] [--repeat 3] [--seed 0]

Both kernels run on the same random integer matrices and must return
identical results; the script prints the best time of each and the ratio.
"""

from __future__ import annotations

import argparse
import random
import timeit

from takiff_lab._kernels import _elim_py

try:
    from takiff_lab._kernels import _elim as _elim_c
except ImportError:
    _elim_c = None


def random_matrix(rng: random.Random, n: int, rank_defect: int = 2) -> list[list[int]]:
    rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n - rank_defect)]
    # dependent rows keep the elimination from terminating early on full rank
    for _ in range(rank_defect):
        a, b = rng.sample(range(len(rows)), 2)
        rows.append([x + 2 * y for x, y in zip(rows[a], rows[b])])
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if _elim_c is None:
        print("compiled kernel not built; only the fallback is available")
    rng = random.Random(args.seed)
    print(f"{'n':>5} {'kernel':>7} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in args.sizes:
        m = random_matrix(rng, n)
        for name in ("rank", "rref"):
            py_fn = (lambda: _elim_py.bareiss_rank(m)) if name == "rank" else (lambda: _elim_py.bareiss_rref(m, n))
            t_py = min(timeit.repeat(py_fn, number=1, repeat=args.repeat))
            if _elim_c is None:
                print(f"{n:>5} {name:>7} {t_py:>10.4f} {'-':>10} {'-':>8}")
                continue
            c_fn = (lambda: _elim_c.bareiss_rank(m)) if name == "rank" else (lambda: _elim_c.bareiss_rref(m, n))
            assert py_fn() == c_fn(), "kernels disagree"
            t_c = min(timeit.repeat(c_fn, number=1, repeat=args.repeat))
            print(f"{n:>5} {name:>7} {t_py:>10.4f} {t_c:>10.4f} {t_py / t_c:>8.2f}")


if __name__ == "__main__":
    main()
