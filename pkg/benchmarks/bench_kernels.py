"""Compare the compiled and pure-Python polynomial kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on identical random inputs in both backends; results must
agree exactly before timings are printed.  A second section times one
end-to-end workload (the product formulas in type G2) under each backend in a
subprocess.
"""

import argparse
import os
import random
import subprocess
import sys
import time

from hecke_cell_lab import _kernels_py as pure
from hecke_cell_lab.laurent import MASK, OFF, layout

try:
    from hecke_cell_lab import _kernels as fast
except ImportError:
    fast = None


def random_poly(rng, lay, nterms, radius=6):
    out = {}
    for _ in range(nterms):
        x = tuple(rng.randint(-radius, radius) for _ in range(lay.n))
        out[lay.pack(x, rng.randint(-4, 4))] = rng.randint(-5, 5) or 1
    return out


def cases(seed=0):
    rng = random.Random(seed)
    lay = layout(2)
    a = random_poly(rng, lay, 60)
    b = random_poly(rng, lay, 60)
    alpha = lay.delta((2, -1))
    deltas = [lay.delta((-1, 0)) - lay.delta((0, 0)), lay.delta((1, 1))]
    prod = pure.poly_mul(a, b, lay.zero)
    return {
        "poly_mul": (lambda m: m.poly_mul(a, b, lay.zero)),
        "poly_add": (lambda m: m.poly_add(a, b, 3)),
        "poly_act": (lambda m: m.poly_act(a, lay.x_shifts, MASK, OFF, deltas)),
        "poly_demazure": (lambda m: m.poly_demazure(a, lay.x_shifts[0], MASK, OFF, alpha, -1)),
        "poly_divexact": (lambda m: m.poly_divexact(prod, b, lay.zero, lay.all_shifts, MASK, OFF)),
    }


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


WORKLOAD = (
    "import time\n"
    "from hecke_cell_lab.hecke_bernstein import bernstein_algebra\n"
    "from hecke_cell_lab.kernels import BACKEND\n"
    "t = time.perf_counter()\n"
    "B = bernstein_algebra('G2')\n"
    "for x in [(a, b) for a in range(-2, 3) for b in range(-2, 3)]:\n"
    "    assert B.verify_formula(1, x)['holds']\n"
    "for k in range(2, 6):\n"
    "    assert B.verify_formula(k)['holds']\n"
    "print(BACKEND, round(time.perf_counter() - t, 3))\n"
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if fast is None:
        print("compiled kernels not available; only the pure-Python backend exists")
        return 1
    print("%-15s %12s %12s %8s" % ("kernel", "python (s)", "cython (s)", "speedup"))
    for name, fn in cases().items():
        if fn(pure) != fn(fast):
            print("%s: backends disagree" % name)
            return 1
        tp, tc = timeit(lambda: fn(pure), args.repeat), timeit(lambda: fn(fast), args.repeat)
        print("%-15s %12.5f %12.5f %7.1fx" % (name, tp, tc, tp / tc))
    print("\nend-to-end (formulas in G2, fresh process):")
    for pure_flag in ("1", ""):
        env = dict(os.environ, HECKE_CELL_LAB_PURE=pure_flag)
        out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True)
        print("  " + (out.stdout.strip() or out.stderr.strip()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
