"""Build the Giraud-type 4-graph from a Sylvester matrix and summarise it."""
import argparse
import math
from fractions import Fraction

from hyperturan import build_giraud, complete, contains, min_l_degree, sylvester_hadamard


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 4, 8, 16])
    args = ap.parse_args()
    K5 = complete(5, 4)
    for m in args.orders:
        H = build_giraud(sylvester_hadamard(m))
        n = 2 * m
        d3, witness = min_l_degree(H, 3)
        ratio = Fraction(len(H), math.comb(n, 4))
        free = not contains(H, K5) if m <= 8 else "skipped"
        print(f"m={m:>2} n={n:>2} edges={len(H):>5} K5^4-free={free} delta_3={d3} at {witness} "
              f"finite ratio e/C(n,4)={ratio} (~{float(ratio):.4f})")


if __name__ == "__main__":
    main()
