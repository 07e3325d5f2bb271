"""Compute ex_2(n, K4^3) for small n and print one row per n.

n <= 6 uses the exhaustive oracle as a cross-check; every n up to --exact-max
is settled by branch and bound.  Beyond that the heuristic gives a lower bound
and vertex deletion (ex(n+1) <= ex(n) + 1) gives an upper bound.
"""
import argparse
import time

from hyperturan import ForbiddenFamily, complete
from hyperturan.solver import PROVED_EXACT, SolverConfig, exact_ex, heuristic_lower_bound, oracle_ex


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--exact-max", type=int, default=10)
    ap.add_argument("--n-max", type=int, default=11)
    ap.add_argument("--time-budget", type=float, default=600)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    fam = ForbiddenFamily.of([complete(4, 3)])
    config = SolverConfig(time_budget=args.time_budget, parallel_workers=args.workers)
    prev = None
    print(f"{'n':>3} {'value':>8} {'status':<18} {'oracle':>6} {'seconds':>8}")
    for n in range(4, args.n_max + 1):
        start = time.perf_counter()
        oracle = oracle_ex(n, 3, 2, fam).value if n <= 6 else "-"
        if n <= args.exact_max:
            res = exact_ex(n, 3, 2, fam, config)
            value, status = res.value, res.status
            prev = value if res.status == PROVED_EXACT else None
        else:
            res = heuristic_lower_bound(n, 3, 2, fam, config)
            upper = prev + 1 if prev is not None else res.hi
            value = res.lo if res.lo == upper else f"{res.lo}..{upper}"
            status = "proved-exact" if res.lo == upper else "interval"
            prev = res.lo if res.lo == upper else None
        print(f"{n:>3} {str(value):>8} {status:<18} {oracle:>6} {time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main()
