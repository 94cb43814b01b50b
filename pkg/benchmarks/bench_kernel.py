"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernel.py [--nmax 11] [--repeat 3]

Both backends run the same full enumeration (with the bound check enabled)
and must return identical results; times are best-of-``repeat``.
"""
import argparse
import time

from polyiamonds import _pykernel
from polyiamonds.bounds import p_min

try:
    from polyiamonds import _ckernel
except ImportError:
    _ckernel = None


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def full_run(grow, n, pmin, keys=None):
    return [grow(n, root, (), -1, 0, pmin, None, keys) for root in (0, 1)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmin", type=int, default=6)
    ap.add_argument("--nmax", type=int, default=11)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--free", action="store_true", help="also build canonical keys")
    args = ap.parse_args()
    if _ckernel is None:
        raise SystemExit("compiled kernel not built; run pip install -e . first")

    pmin = [0] + [p_min(i) for i in range(1, 2 * args.nmax + 2)]
    print("n\tshapes\tpython_s\tcython_s\tspeedup")
    for n in range(args.nmin, args.nmax + 1):
        def run(grow):
            return full_run(grow, n, pmin, set() if args.free else None)

        tp, rp = best_time(lambda: run(_pykernel.grow), args.repeat)
        tc, rc = best_time(lambda: run(_ckernel.grow), args.repeat)
        assert rp == rc, f"kernels disagree at n={n}"
        shapes = sum(r[0] for r in rc)
        print(f"{n}\t{shapes}\t{tp:.4f}\t{tc:.4f}\t{tp / tc:.1f}x")


if __name__ == "__main__":
    main()
