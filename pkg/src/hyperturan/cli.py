"""``hyperturan`` command line.

Exit codes: 0 success, 2 budget exhausted, 64 usage, 65 bad data,
66 unsupported size.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .combinatorics import M_threshold, as_fraction, count_good_subsets, jump_parameters, layered_parameters
from .constructions import VARIANTS, ConstructionSpec, complete_bipartite
from .errors import HyperturanError, InvalidArgument, ResourceLimit, UnsupportedSize
from .hypergraph import (ForbiddenFamily, automorphism_count, count_copies, count_injections,
                         from_canonical, is_family_free, link_family, min_l_degree)
from .io import digest, read_hypergraph, write_hypergraph
from .named import resolve_named
from .report import RunReport
from .solver import (BUDGET_EXHAUSTED, SolverConfig, exact_ex, exists_with_min_degree,
                     heuristic_lower_bound, oracle_ex)

EXIT_OK = 0
EXIT_BUDGET = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_SIZE = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def load_graph(ref: str):
    """A path to an edge-list file, or a built-in name."""
    path = Path(ref)
    if path.is_file():
        return read_hypergraph(path)
    return resolve_named(ref)


def load_family(refs, k=None) -> ForbiddenFamily:
    return ForbiddenFamily.of([load_graph(r) for r in refs], k=k, name=",".join(refs))


def _ratio(num: int, den: int) -> Fraction | None:
    return Fraction(num, den) if den else None


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args, rep):
    v = args.variant
    if v == "B":
        params = {"p": args.p, "t": args.t, "k": args.k, "l": args.l}
    elif v == "Layered":
        params = {"k": args.k, "l": args.l, "a": args.a, "b": args.b, "t": args.t, "p": args.p}
    elif v == "Giraud":
        params = {"order": args.order, "four_line_edges": args.four_line_edges}
    else:
        if args.base:
            base = load_graph(args.base)
        elif args.bipartite:
            s, t = (int(x) for x in args.bipartite.split(","))
            base = complete_bipartite(s, t)
        else:
            raise UsageError("RandomLink needs --base or --bipartite")
        params = {"base": base, "n": args.n, "k": args.k, "l": args.l, "seed": args.seed}
    missing = [key for key, val in params.items() if val is None]
    if missing:
        raise UsageError(f"{v} needs --{' --'.join(missing)}")
    spec = ConstructionSpec(v, params)
    H = spec.build()
    sha = write_hypergraph(H, args.out)
    meta = spec.metadata()
    meta.update({"k": H.k, "n": H.n, "edges": H.num_edges, "sha256": sha, "version": __version__})
    side = Path(str(args.out) + ".json")
    side.write_text(json.dumps(meta, sort_keys=True, indent=1) + "\n")
    rep.artifacts[str(args.out)] = sha
    rep["variant"] = v
    rep["parameters"] = {key: val for key, val in meta.items() if key not in ("base",)}
    rep["k"], rep["n"], rep["edges"] = H.k, H.n, H.num_edges
    rep["metadata_file"] = str(side)
    return EXIT_OK


def cmd_stats(args, rep):
    H = load_graph(args.file)
    rep["file_sha256"] = digest(H)
    rep["k"], rep["n"], rep["edges"] = H.k, H.n, H.num_edges
    rep["edge_density (finite ratio e/C(n,k))"] = _ratio(H.num_edges, math.comb(H.n, H.k))
    for l in args.l:
        if not 0 <= l < H.k:
            raise InvalidArgument(f"need 0 <= l < k = {H.k}, got l = {l}")
        value, witness = min_l_degree(H, l)
        rep[f"delta_{l}"] = value
        rep[f"delta_{l}_witness"] = list(witness)
        rep[f"finite ratio delta_{l}/C(n,k-l)"] = _ratio(value, math.comb(H.n, H.k - l))
    return EXIT_OK


def cmd_check_free(args, rep):
    H = load_graph(args.file)
    fam = load_family(args.forbidden, k=H.k)
    rep["file_sha256"] = digest(H)
    rep["family_size"] = len(fam)
    rep["free"] = is_family_free(H, fam)
    return EXIT_OK


def cmd_count_copies(args, rep):
    H = load_graph(args.file)
    F = load_graph(args.pattern)
    if F.k != H.k:
        raise InvalidArgument(f"pattern uniformity {F.k} differs from host {H.k}")
    rep["file_sha256"] = digest(H)
    rep["injections"] = count_injections(H, F)
    rep["automorphisms"] = automorphism_count(F)
    rep["copies"] = count_copies(H, F)
    return EXIT_OK


def cmd_link_family(args, rep):
    graphs = [load_graph(r) for r in args.graph]
    fam = link_family(graphs, args.l)
    members = sorted(fam)
    rep["l"] = args.l
    rep["size"] = len(members)
    for i, form in enumerate(members):
        G = from_canonical(form)
        rep[f"member_{i}"] = {"k": G.k, "n": G.n, "edges": [list(e) for e in G.edges]}
    return EXIT_OK


def _parse_mode(mode):
    if mode in ("oracle", "exact", "heuristic"):
        return mode, None
    if mode.startswith("decision:"):
        try:
            return "decision", int(mode.split(":", 1)[1])
        except ValueError:
            pass
    raise UsageError(f"--mode must be oracle|exact|heuristic|decision:<d>, got {mode!r}")


def cmd_solve(args, rep):
    mode, target = _parse_mode(args.mode)
    fam = load_family(args.forbidden, k=args.k)
    config = SolverConfig(time_budget=args.time_budget, node_budget=args.nodes,
                          symmetry_breaking=not args.no_symmetry,
                          parallel_workers=args.workers or SolverConfig().parallel_workers,
                          seed=args.seed, restarts=args.restarts)
    rep["parameters"] = {"n": args.n, "k": args.k, "l": args.l, "forbidden": args.forbidden,
                         "mode": args.mode, "seed": args.seed, "time_budget": args.time_budget,
                         "node_budget": args.nodes, "symmetry_breaking": config.symmetry_breaking,
                         "workers": config.parallel_workers, "restarts": config.restarts}
    if mode == "oracle":
        res = oracle_ex(args.n, args.k, args.l, fam)
    elif mode == "exact":
        res = exact_ex(args.n, args.k, args.l, fam, config)
    elif mode == "heuristic":
        res = heuristic_lower_bound(args.n, args.k, args.l, fam, config)
    else:
        res = exists_with_min_degree(args.n, args.k, args.l, fam, target, config)
    value = res.value
    rep["value"] = value if isinstance(value, int) else list(value)
    rep["status"] = res.status
    rep["nodes"] = res.nodes
    rep["solver_time"] = round(res.wall_time, 6)
    if res.witness is not None:
        rep["finite ratio delta_l/C(n,k-l)"] = _ratio(res.lo, math.comb(args.n, args.k - args.l))
        if args.witness_out:
            rep.artifacts[str(args.witness_out)] = write_hypergraph(res.witness, args.witness_out)
            rep["witness_file"] = str(args.witness_out)
        else:
            rep["witness_sha256"] = digest(res.witness)
    return EXIT_BUDGET if res.status == BUDGET_EXHAUSTED else EXIT_OK


def cmd_params(args, rep):
    delta = as_fraction(args.delta) if args.delta is not None else None
    if args.threshold_eps is not None:
        rep["M_threshold"] = M_threshold(args.k, args.l, args.threshold_eps)
        rep["threshold_epsilon"] = as_fraction(args.threshold_eps)
    if delta is None:
        if args.threshold_eps is None:
            raise UsageError("params needs --delta and/or --threshold-eps")
        return EXIT_OK
    if args.q is not None:
        P = layered_parameters(args.k, args.l, delta, as_fraction(args.q))
    else:
        P = jump_parameters(args.k, args.l, delta)
    for key, val in P.as_dict().items():
        if val is not None:
            rep[key] = val
    return EXIT_OK


def cmd_count(args, rep):
    if args.what != "good-subsets":
        raise UsageError(f"unknown count target {args.what!r}")
    H = load_graph(args.file)
    if args.exact and args.samples:
        raise UsageError("--exact and --samples are exclusive")
    res = count_good_subsets(H, args.l, args.m, as_fraction(args.alpha),
                             exact_budget=args.budget,
                             samples=None if args.exact else args.samples, seed=args.seed,
                             confidence=args.confidence)
    rep["file_sha256"] = digest(H)
    rep["parameters"] = {"l": args.l, "m": args.m, "alpha": args.alpha, "seed": args.seed}
    rep["exact"] = res.exact
    rep["total_subsets"] = res.total
    rep["count"] = res.count
    if res.total:
        rep["fraction"] = _ratio(res.hits, res.samples) if not res.exact else _ratio(int(res.count), res.total)
    if not res.exact:
        rep["samples"] = res.samples
        rep["hits"] = res.hits
        rep["ci"] = [res.ci_low, res.ci_high]
        rep["confidence"] = res.confidence
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    p = _Parser(prog="hyperturan", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a construction and write it as an edge list")
    c.add_argument("variant", choices=VARIANTS)
    c.add_argument("--out", required=True, type=Path)
    for name in ("p", "t", "k", "l", "a", "b", "n", "order"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--base", help="base graph for RandomLink (name or file)")
    c.add_argument("--bipartite", help="RandomLink base K_{s,t} given as s,t")
    c.add_argument("--four-line-edges", action="store_true")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("stats", help="degrees and densities of a graph")
    s.add_argument("--file", required=True)
    s.add_argument("--l", type=int, action="append", required=True)
    s.set_defaults(func=cmd_stats)

    f = sub.add_parser("check-free", help="is the graph free of every forbidden graph")
    f.add_argument("--file", required=True)
    f.add_argument("--forbidden", action="append", required=True)
    f.set_defaults(func=cmd_check_free)

    cc = sub.add_parser("count-copies", help="number of copies of a pattern")
    cc.add_argument("--file", required=True)
    cc.add_argument("--pattern", required=True)
    cc.set_defaults(func=cmd_count_copies)

    lf = sub.add_parser("link-family", help="link family up to isomorphism")
    lf.add_argument("--graph", action="append", required=True)
    lf.add_argument("--l", type=int, required=True)
    lf.set_defaults(func=cmd_link_family)

    so = sub.add_parser("solve", help="compute or bound ex_l(n, family)")
    for name in ("n", "k", "l"):
        so.add_argument(f"--{name}", type=int, required=True)
    so.add_argument("--forbidden", action="append", required=True)
    so.add_argument("--mode", default="exact")
    so.add_argument("--time-budget", type=float, default=600.0)
    so.add_argument("--nodes", type=int, default=50_000_000)
    so.add_argument("--workers", type=int)
    so.add_argument("--seed", type=int, default=0)
    so.add_argument("--restarts", type=int, default=16)
    so.add_argument("--no-symmetry", action="store_true")
    so.add_argument("--witness-out", type=Path)
    so.set_defaults(func=cmd_solve)

    pa = sub.add_parser("params", help="constants of the non-jump constructions")
    pa.add_argument("--k", type=int, required=True)
    pa.add_argument("--l", type=int, required=True)
    pa.add_argument("--delta")
    pa.add_argument("--q")
    pa.add_argument("--threshold-eps")
    pa.set_defaults(func=cmd_params)

    co = sub.add_parser("count", help="count good m-subsets")
    co.add_argument("what")
    co.add_argument("--file", required=True)
    co.add_argument("--l", type=int, required=True)
    co.add_argument("--m", type=int, required=True)
    co.add_argument("--alpha", required=True)
    co.add_argument("--exact", action="store_true")
    co.add_argument("--samples", type=int)
    co.add_argument("--seed", type=int, default=0)
    co.add_argument("--confidence", type=float, default=0.95)
    co.add_argument("--budget", type=int, default=200_000)
    co.set_defaults(func=cmd_count)
    return p


def run_command(argv) -> tuple[int, RunReport | None, str]:
    """Run one command; returns (exit code, report or None, error message)."""
    argv = list(argv)
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return EXIT_USAGE, None, str(exc)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0), None, ""
    rep = RunReport(argv, __version__)
    try:
        code = args.func(args, rep)
    except UsageError as exc:
        return EXIT_USAGE, None, str(exc)
    except UnsupportedSize as exc:
        return EXIT_SIZE, None, f"unsupported size: {exc}"
    except ResourceLimit as exc:
        return EXIT_BUDGET, None, f"budget: {exc}"
    except (HyperturanError, ValueError, OSError, KeyError) as exc:
        return EXIT_DATA, None, f"error: {exc}"
    rep.wall_time = time.perf_counter() - start
    return code, rep, ""


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, rep, err = run_command(argv)
    if rep is not None:
        sys.stdout.write(rep.render())
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
