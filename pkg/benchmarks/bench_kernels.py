"""Compare the compiled polynomial kernels against the pure-Python twins.

Runs identical seeded workloads through both implementations, asserts the
outputs are bit-identical, and prints a timing table.

    python3 benchmarks/bench_kernels.py [--terms N] [--rounds R]
"""

import argparse
import random
import time

from mpqg import _kernels_py

try:
    from mpqg import _kernels_cy
except ImportError:
    _kernels_cy = None

BITS = _kernels_py.BITS


def random_poly(rng, nterms, nfields, maxexp):
    out = {}
    for _ in range(nterms):
        key = 0
        for f in range(nfields):
            key |= rng.randrange(maxexp) << (f * BITS)
        out[key] = rng.randrange(-50, 51) or 1
    return out


def workload(impl, polys, rounds):
    t0 = time.perf_counter()
    acc = []
    for _ in range(rounds):
        for i in range(0, len(polys) - 1, 2):
            a, b = polys[i], polys[i + 1]
            m = impl.p_mul(a, b)
            s = impl.p_add(m, a)
            s = impl.p_sub(s, b)
            s = impl.p_scale(s, 3)
            acc.append(s)
    return time.perf_counter() - t0, acc


def reduce_workload(impl, polys, rounds):
    # symbol layout: two params, one root symbol sitting above them
    param_mask = (1 << (2 * BITS)) - 1
    sym_shifts = (2 * BITS,)
    sym_bases = ({0: -1, 1 << BITS: 1},)  # square of the symbol: x - 1
    t0 = time.perf_counter()
    acc = []
    for _ in range(rounds):
        defpow = {}
        for p in polys:
            acc.append(impl.sym_reduce(p, param_mask, sym_shifts, sym_bases, defpow))
    return time.perf_counter() - t0, acc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--terms", type=int, default=120)
    ap.add_argument("--rounds", type=int, default=30)
    args = ap.parse_args()

    rng = random.Random(20260815)
    polys = [random_poly(rng, args.terms, 3, 40) for _ in range(24)]
    sym_polys = [random_poly(rng, args.terms, 3, 6) for _ in range(24)]

    impls = [("python", _kernels_py)]
    if _kernels_cy is not None:
        impls.append(("cython", _kernels_cy))
    else:
        print("compiled extension not built; timing pure backend only")

    results = {}
    for name, impl in impls:
        t_mul, acc = workload(impl, polys, args.rounds)
        t_red, acc2 = reduce_workload(impl, sym_polys, args.rounds)
        results[name] = (t_mul, t_red, acc, acc2)
        print(f"{name:>7}: arithmetic {t_mul:8.3f}s   sym_reduce {t_red:8.3f}s")

    if len(results) == 2:
        pa = results["python"]
        ca = results["cython"]
        assert pa[2] == ca[2], "arithmetic outputs differ between backends"
        assert pa[3] == ca[3], "sym_reduce outputs differ between backends"
        print(
            f"outputs bit-identical; speedup: arithmetic x{pa[0] / ca[0]:.2f}, "
            f"sym_reduce x{pa[1] / ca[1]:.2f}"
        )


if __name__ == "__main__":
    main()
