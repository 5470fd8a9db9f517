"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

The first table times each kernel directly on the same inputs.  The second
runs an end-to-end workload (root towers for a batch of random polynomials)
in a subprocess per backend, switched with VROOTS_PURE_PYTHON.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from vroots import _pykernels as py

try:
    from vroots import _ckernels as cy
except ImportError:
    cy = None

WORKLOAD = """
import time
from fractions import Fraction
from vroots.oracle import random_monic
from vroots.virtual import RthTower, ThomTower, all_codes
t = time.perf_counter()
for i in range(120):
    p = random_monic(1 + i % 6, 9, i)
    rth, thom = RthTower(p), ThomTower(p)
    for j in range(1, p.degree + 1):
        rth.value(j).refine(Fraction(1, 10 ** 30))
    for s in all_codes(p.degree - 1):
        thom.rho(s)
print(time.perf_counter() - t)
"""


def kernel_cases(rng):
    poly = tuple(rng.randint(-10 ** 6, 10 ** 6) for _ in range(9))
    big = tuple(rng.randint(-10 ** 40, 10 ** 40) for _ in range(7))
    seq = [tuple(rng.randint(-1000, 1000) for _ in range(k + 1)) for k in range(8, -1, -1)]
    # (7x - 22)(x^2 + 3): single real root 22/7, bracketed by [3, 4]
    cubic = (-66, 21, -22, 7)
    dabs = (21, 44, 21)
    return {
        "sign_at deg 8": lambda k: k.sign_at(poly, 355, 113),
        "sign_at deg 6, 40-digit": lambda k: k.sign_at(big, 10 ** 20 + 7, 3 ** 30),
        "variations, 9 polys": lambda k: k.variations(seq, -17, 5),
        "bisect to 2^-100": lambda k: k.bisect(cubic, 3, 4, 1, 1, 2 ** 100),
        "centered_sign": lambda k: k.centered_sign(cubic, dabs, 6, 7, 2),
    }


def bench_kernels(repeat):
    cases = kernel_cases(random.Random(0))
    print(f"{'kernel':28s} {'python us':>11s} {'cython us':>11s} {'speedup':>8s}")
    for name, call in cases.items():
        number = 2000
        t_py = min(timeit.repeat(lambda: call(py), number=number, repeat=repeat)) / number * 1e6
        if cy is None:
            print(f"{name:28s} {t_py:11.2f} {'n/a':>11s} {'':>8s}")
            continue
        assert call(cy) == call(py)
        t_cy = min(timeit.repeat(lambda: call(cy), number=number, repeat=repeat)) / number * 1e6
        print(f"{name:28s} {t_py:11.2f} {t_cy:11.2f} {t_py / t_cy:7.2f}x")


def bench_workload():
    times = {}
    for backend, flag in (("python", "1"), ("cython", "0")):
        env = dict(os.environ, VROOTS_PURE_PYTHON=flag)
        out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
        times[backend] = float(out.stdout)
    print(f"\nend-to-end towers, 120 polynomials: python {times['python']:.2f}s, cython {times['cython']:.2f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    bench_kernels(args.repeat)
    bench_workload()


if __name__ == "__main__":
    main()
