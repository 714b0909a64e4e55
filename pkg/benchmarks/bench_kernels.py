"""Time the compiled and pure-Python enumeration kernels side by side.

    python3 benchmarks/bench_kernels.py --n-max 8 --k 3 --repeat 3
"""

import argparse
import time

from chordsieve import kernel


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--k", type=int, default=3, help="crossing bound")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    names = sorted(kernel.BACKENDS)
    if "cython" not in names:
        print("compiled kernel not built; timing the pure-Python kernel only")
    print(f"{'kernel':<20} {'n':>3} " + " ".join(f"{name:>10}" for name in names) + "   speedup")
    for n in range(args.n_min, args.n_max + 1):
        for label, call in (
            ("crossing_histogram", lambda b: b.crossing_histogram(n, args.k)),
            ("period_histogram", lambda b: b.period_histogram(n, args.k)),
        ):
            times, results = {}, {}
            for name in names:
                times[name], results[name] = best_of(lambda: call(kernel.BACKENDS[name]), args.repeat)
            if len({tuple(r) for r in results.values()}) != 1:
                raise SystemExit(f"backends disagree on {label}({n}, {args.k})")
            speedup = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
            cells = " ".join(f"{times[name]:9.4f}s" for name in names)
            print(f"{label:<20} {n:>3} {cells}   {speedup}")


if __name__ == "__main__":
    main()
