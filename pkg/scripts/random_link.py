"""Random-link experiment: K4^3-freeness and minimum codegree over seeds."""
import argparse
import statistics

from hyperturan import ForbiddenFamily, build_random_link, complete, complete_bipartite, is_family_free, min_l_degree


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--seeds", type=int, default=30)
    ap.add_argument("--bipartite", default="10,10")
    ap.add_argument("--check-free", action="store_true", help="also test K4^3-freeness (slow for large n)")
    args = ap.parse_args()
    s, t = map(int, args.bipartite.split(","))
    base = complete_bipartite(s, t)
    fam = ForbiddenFamily.of([complete(4, 3)])
    mins = []
    for seed in range(args.seeds):
        H = build_random_link(base, args.n, 3, 2, seed)
        d = min_l_degree(H, 2)[0]
        mins.append(d)
        extra = f" free={is_family_free(H, fam)}" if args.check_free else ""
        print(f"seed={seed:>3} edges={len(H):>6} delta_2={d} ratio={d / (args.n - 2):.4f}{extra}")
    print(f"delta_2 min={min(mins)} median={statistics.median(mins)} max={max(mins)}")


if __name__ == "__main__":
    main()
