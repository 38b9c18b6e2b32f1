#!/usr/bin/env python3
"""Benchmark the pure-Python elimination kernel against the compiled one.

Cases are (a) seeded random sparse rational matrices and (b) the actual
differential matrices of the genus-2 model at the deepest degrees, which
is what dominates a real run. Results are checked for agreement before
timings are reported.
"""

import random
import time
from fractions import Fraction

from sphomotopy import _elim_py
from sphomotopy import exact_linalg as ela
from sphomotopy import sullivan

try:
    from sphomotopy import _elim_cy
except ImportError:
    _elim_cy = None


def _copy(rows):
    return [(list(c), list(n)) for c, n in rows]


def random_case(seed, nrows, ncols, density):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        row = {j: Fraction(rng.randint(-9, 9), rng.randint(1, 6))
               for j in range(ncols) if rng.random() < density}
        rows.append({k: v for k, v in row.items() if v})
    return f"random {nrows}x{ncols} d={density}", ela._int_rows(rows)


def model_cases(max_degree=10):
    model = sullivan.build(sullivan.moduli_target(2), max_degree)
    out = []
    for degree in (max_degree, max_degree + 1):
        src, dst, mat = model.dga.d_matrix(degree)
        label = f"genus-2 model d: deg {degree} ({len(dst)}x{len(src)})"
        out.append((label, ela._int_rows(mat.rows)))
    return out


def time_kernel(kernel, rows, repeats=3):
    best = None
    result = None
    for _ in range(repeats):
        work = _copy(rows)
        t0 = time.perf_counter()
        result = kernel(work)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    # dense random rational matrices suffer the usual coefficient growth
    # of exact elimination, so they are kept small; the model matrices
    # are the realistic workload
    cases = [
        random_case(1, 60, 80, 0.10),
        random_case(2, 90, 120, 0.06),
    ]
    cases.extend(model_cases())
    print(f"{'case':<44} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for label, rows in cases:
        t_py, r_py = time_kernel(_elim_py.echelon, rows)
        if _elim_cy is None:
            print(f"{label:<44} {t_py:>10.4f} {'n/a':>13} {'n/a':>8}")
            continue
        t_cy, r_cy = time_kernel(_elim_cy.echelon, rows)
        assert r_py == r_cy, f"backends disagree on {label}"
        print(f"{label:<44} {t_py:>10.4f} {t_cy:>13.4f} {t_py / t_cy:>7.2f}x")
    if _elim_cy is None:
        print("\ncompiled kernel not built; install with Cython for the comparison")


if __name__ == "__main__":
    main()
