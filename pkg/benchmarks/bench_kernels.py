"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--nmax 6]

Part 1 times each kernel in isolation on the same inputs.  Part 2 runs an
end-to-end workload (build every G_w for w in S_n, then check the chain
formula against brute force on S_{n-1}) in a fresh interpreter per backend.
"""

import argparse
import os
import subprocess
import sys
import timeit

from grothpieri import _pykernels as py
from grothpieri.basis import grothendieck_polynomial
from grothpieri.perm import parse_permutation

try:
    from grothpieri import _ckernels as cy
except ImportError:
    cy = None


def kernel_cases():
    g = grothendieck_polynomial(parse_permutation("351624")).terms
    h = grothendieck_polynomial(parse_permutation("241635")).terms
    big = py.poly_mul(g, h)
    window = tuple(range(40, 0, -1))
    return {
        "poly_mul": lambda m: m.poly_mul(g, h),
        "poly_axpy": lambda m: m.poly_axpy(big, big, -3),
        "divdiff": lambda m: m.divdiff(big, 2),
        "isobaric": lambda m: m.isobaric(big, 3),
        "lowest_lex_min": lambda m: m.lowest_lex_min(big),
        "inversions": lambda m: m.inversions(window),
        "is_cover": lambda m: m.is_cover(window, 3, 37),
    }


END_TO_END = """
import time
from grothpieri import kernels
from grothpieri.perm import all_permutations
from grothpieri.basis import grothendieck_polynomial
from grothpieri.pieri import pieri_e_product, oracle_e_product
t0 = time.perf_counter()
for w in all_permutations({n}):
    grothendieck_polynomial(w)
t1 = time.perf_counter()
for v in all_permutations({m}):
    for k in range(1, {m}):
        for p in range(1, k + 1):
            assert pieri_e_product(v, k, p) == oracle_e_product(v, k, p)
t2 = time.perf_counter()
print(kernels.BACKEND, t1 - t0, t2 - t1)
"""


def end_to_end(nmax: int, pure: bool):
    env = dict(os.environ)
    env.pop("GROTHPIERI_PURE", None)
    if pure:
        env["GROTHPIERI_PURE"] = "1"
    code = END_TO_END.format(n=nmax, m=nmax - 1)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, build, check = out.stdout.split()
    return backend, float(build), float(check)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--nmax", type=int, default=6)
    args = ap.parse_args(argv)

    print(f"{'kernel':<16}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, fn in kernel_cases().items():
        n = 20
        tp = min(timeit.repeat(lambda: fn(py), number=n, repeat=args.repeat)) / n
        if cy is None:
            print(f"{name:<16}{tp * 1e3:>14.3f}{'n/a':>14}{'':>10}")
            continue
        assert fn(cy) == fn(py), name
        tc = min(timeit.repeat(lambda: fn(cy), number=n, repeat=args.repeat)) / n
        print(f"{name:<16}{tp * 1e3:>14.3f}{tc * 1e3:>14.3f}{tp / tc:>9.1f}x")

    print()
    print(f"end to end: build G_w on S_{args.nmax}, check products on S_{args.nmax - 1}")
    rows = [end_to_end(args.nmax, pure=True)]
    if cy is not None:
        rows.append(end_to_end(args.nmax, pure=False))
    for backend, build, check in rows:
        print(f"  {backend:<8} build {build:8.2f}s   check {check:8.2f}s")


if __name__ == "__main__":
    main()
