"""Compare the numba and numpy kernels on GL_2(F_q) multiplication tables.

    python benchmarks/bench_gloracle.py [q ...]
"""

import sys
import time

import numpy as np

from charvar.gloracle import build_gl
from charvar.gloracle import kernels


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(primes):
    backends = [b for b in kernels.BACKENDS if b != "numba" or kernels.HAVE_NUMBA]
    if "numba" in backends:
        warm = build_gl(2, 2)
        kernels.commutator_counts(warm.mul, warm.inv, "numba")
        kernels.class_structure(warm.mul, warm.inv, warm.cls, warm.class_reps, warm.num_classes, "numba")
    print(f"{'group':<12}{'kernel':<20}" + "".join(f"{b:>12}" for b in backends))
    for p in primes:
        G = build_gl(2, p)
        name = f"GL_2(F_{p})"
        for label, fn, args in (
            ("commutators", kernels.commutator_counts, (G.mul, G.inv)),
            ("class structure", kernels.class_structure,
             (G.mul, G.inv, G.cls, G.class_reps, G.num_classes)),
        ):
            row, ref = [], None
            for b in backends:
                secs, out = timed(fn, *args, b)
                if ref is None:
                    ref = out
                elif not np.array_equal(ref, out):
                    raise SystemExit(f"backends disagree on {label} for {name}")
                row.append(f"{secs * 1e3:10.1f}ms")
            print(f"{name:<12}{label:<20}" + "".join(f"{r:>12}" for r in row))


if __name__ == "__main__":
    main([int(a) for a in sys.argv[1:]] or [3, 5, 7])
