"""Branch and bound for the decision form of ex_l, and the exact solver built on it.

A node is a pair of slot masks ``(inc, exc)`` (edges fixed in / out).  After
every decision a propagation loop runs to a fixpoint:

* including a slot completes no forbidden copy; a copy with exactly one
  slot left open forces that slot out;
* excluding a slot keeps every l-set inside it at ``inc+open >= d``; an
  l-set with exactly d slots left forces all of them in;
* lex-leader symmetry breaking: for each vertex transposition pi the edge
  vector x must satisfy ``x >=_lex pi(x)`` in slot order.  Each
  transposition carries a scan position; once decided pairs settle the
  comparison it is dropped.

Branching takes the lowest open slot in colex order, "in" before "out".
"""
from __future__ import annotations

import math
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait

from ..errors import InvalidArgument
from ..hypergraph import ForbiddenFamily
from .heuristic import heuristic_lower_bound
from .space import copies_by_slot, copy_masks, slot_space
from .types import (BUDGET_EXHAUSTED, LOWER_BOUND_ONLY, PROVED_EXACT, UNSAT, SearchResult,
                    SolverConfig, certify, check_problem)


class _OutOfBudget(Exception):
    pass


class _Decision:
    def __init__(self, n, k, l, members, d, symmetry, node_budget, deadline):
        self.space = space = slot_space(n, k, l)
        self.d = d
        self.by_slot = copies_by_slot(space, copy_masks(space, members))
        self.lset_slots = space.lset_slots
        self.slot_lsets = space.slot_lsets
        self.full = space.full
        self.sym = []
        if symmetry:
            self.sym = [space.transposition_pairs(i, j) for i in range(n) for j in range(i + 1, n)]
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = deadline

    def root(self):
        if self.d > self.space.max_degree:
            return None
        # every l-set already has exactly max_degree open slots
        inc = 0
        if self.d == self.space.max_degree:
            inc = self.full
        return self.propagate(inc, 0, _bits(inc), [], tuple((t, 0) for t in range(len(self.sym))))

    def propagate(self, inc, exc, new_in, new_out, sym):
        d = self.d
        by_slot, lset_slots, slot_lsets = self.by_slot, self.lset_slots, self.slot_lsets
        while True:
            while new_in or new_out:
                if new_in:
                    s = new_in.pop()
                    for c in by_slot[s]:
                        if c & exc:
                            continue
                        missing = c & ~inc
                        if not missing:
                            return None
                        if not missing & (missing - 1):
                            exc |= missing
                            new_out.append(missing.bit_length() - 1)
                else:
                    s = new_out.pop()
                    for i in slot_lsets[s]:
                        avail = lset_slots[i] & ~exc
                        room = avail.bit_count()
                        if room < d:
                            return None
                        if room == d:
                            forced = avail & ~inc
                            if forced:
                                inc |= forced
                                new_in.extend(_bits(forced))
            if not sym:
                return inc, exc, sym
            sym, inc, exc, new_in, new_out = self._symmetry(inc, exc, sym)
            if sym is None:
                return None
            if not new_in and not new_out:
                return inc, exc, sym

    def _symmetry(self, inc, exc, sym):
        still = []
        new_in, new_out = [], []
        for tid, pos in sym:
            pairs = self.sym[tid]
            while pos < len(pairs):
                s, t = pairs[pos]
                a = 1 if inc >> s & 1 else (0 if exc >> s & 1 else None)
                b = 1 if inc >> t & 1 else (0 if exc >> t & 1 else None)
                if a is not None and b is not None:
                    if a == b:
                        pos += 1
                        continue
                    if a < b:
                        return None, inc, exc, new_in, new_out
                    pos = -1  # strictly satisfied
                    break
                if a == 0:
                    exc |= 1 << t
                    new_out.append(t)
                    pos += 1
                    continue
                if b == 1:
                    inc |= 1 << s
                    new_in.append(s)
                    pos += 1
                    continue
                break
            if 0 <= pos < len(pairs):
                still.append((tid, pos))
        return tuple(still), inc, exc, new_in, new_out

    def satisfied(self, inc):
        d = self.d
        return all((m & inc).bit_count() >= d for m in self.lset_slots)

    def tick(self):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _OutOfBudget
        if self.nodes & 1023 == 0 and time.perf_counter() > self.deadline:
            raise _OutOfBudget

    def children(self, state):
        inc, exc, sym = state
        free = self.full & ~(inc | exc)
        s = (free & -free).bit_length() - 1
        bit = 1 << s
        out = []
        child = self.propagate(inc | bit, exc, [s], [], sym)
        if child is not None:
            out.append(child)
        child = self.propagate(inc, exc | bit, [], [s], sym)
        if child is not None:
            out.append(child)
        return out

    def dfs(self, state):
        """Return an edge mask meeting the target, or None if the subtree has none."""
        self.tick()
        inc, exc, sym = state
        if self.satisfied(inc):
            # leaving the remaining open slots out is consistent with every constraint
            # except possibly the symmetry scan, which only prunes duplicates
            return inc
        if not self.full & ~(inc | exc):
            return None
        for child in self.children(state):
            found = self.dfs(child)
            if found is not None:
                return found
        return None


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _subtree_job(args):
    n, k, l, members, d, symmetry, node_budget, deadline, state = args
    search = _Decision(n, k, l, members, d, symmetry, node_budget, deadline)
    try:
        found = search.dfs(state)
    except _OutOfBudget:
        return "budget", None, search.nodes
    return ("sat" if found is not None else "unsat"), found, search.nodes


def _frontier(search, root, size):
    """Expand the tree breadth-first, in DFS order, until ``size`` open nodes exist."""
    nodes = [root]
    while len(nodes) < size:
        grown = []
        progressed = False
        for st in nodes:
            inc, exc, _ = st
            if search.satisfied(inc) or not search.full & ~(inc | exc):
                grown.append(st)
                continue
            grown.extend(search.children(st))
            progressed = True
        nodes = grown
        if not progressed or not nodes:
            break
    return nodes


def decide(n, k, l, family, d, config, deadline=None, node_budget=None):
    """Core of :func:`exists_with_min_degree`; returns (status, edge_mask, nodes)."""
    members = tuple(family.members)
    deadline = time.perf_counter() + config.time_budget if deadline is None else deadline
    node_budget = config.node_budget if node_budget is None else node_budget
    search = _Decision(n, k, l, members, d, config.symmetry_breaking, node_budget, deadline)
    root = search.root()
    if root is None:
        return "unsat", None, 0
    if config.parallel_workers <= 1:
        try:
            found = search.dfs(root)
        except _OutOfBudget:
            return "budget", None, search.nodes
        return ("sat" if found is not None else "unsat"), found, search.nodes

    frontier = _frontier(search, root, 4 * config.parallel_workers)
    jobs = [(n, k, l, members, d, config.symmetry_breaking, node_budget, deadline, st) for st in frontier]
    outcomes = [None] * len(jobs)
    with ProcessPoolExecutor(config.parallel_workers) as pool:
        futures = {pool.submit(_subtree_job, job): i for i, job in enumerate(jobs)}
        pending = set(futures)
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for f in done:
                outcomes[futures[f]] = f.result()
            # the answer is the first subtree (in DFS order) that is sat, once all before it are settled
            first = next((i for i, o in enumerate(outcomes) if o is None or o[0] != "unsat"), None)
            if first is not None and outcomes[first] is not None and outcomes[first][0] == "sat":
                for f in pending:
                    f.cancel()
                break
    nodes = search.nodes + sum(o[2] for o in outcomes if o is not None)
    for o in outcomes:
        if o is None:
            continue
        if o[0] == "sat":
            return "sat", o[1], nodes
        if o[0] == "budget":
            return "budget", None, nodes
    return "unsat", None, nodes


def exists_with_min_degree(n: int, k: int, l: int, family: ForbiddenFamily, d: int,
                           config: SolverConfig = SolverConfig()) -> SearchResult:
    """Is there a family-free k-graph on n vertices with minimum l-degree >= d?"""
    check_problem(n, k, l, family)
    if d < 0:
        raise InvalidArgument(f"target degree must be >= 0, got {d}")
    start = time.perf_counter()
    space = slot_space(n, k, l)
    status, mask, nodes = decide(n, k, l, family, d, config)
    wall = time.perf_counter() - start
    if status == "sat":
        witness = space.to_hypergraph(mask)
        value = certify(witness, family, l)
        if value < d:
            raise AssertionError("decision witness failed re-verification")
        return SearchResult(value, space.max_degree, LOWER_BOUND_ONLY, witness, nodes, wall, {"target": d})
    if status == "unsat":
        return SearchResult(0, d - 1, UNSAT, None, nodes, wall, {"target": d})
    return SearchResult(0, space.max_degree, BUDGET_EXHAUSTED, None, nodes, wall, {"target": d})


def exact_ex(n: int, k: int, l: int, family: ForbiddenFamily,
             config: SolverConfig = SolverConfig()) -> SearchResult:
    """ex_l(n, family): heuristic lower bound, then ascending decision queries until unsat."""
    check_problem(n, k, l, family)
    start = time.perf_counter()
    deadline = start + config.time_budget
    space = slot_space(n, k, l)
    heur = heuristic_lower_bound(n, k, l, family, config)
    lo, witness = heur.lo, heur.witness
    nodes = 0
    queries = []
    status = PROVED_EXACT
    hi = lo
    d = lo + 1
    while d <= space.max_degree:
        outcome, mask, used = decide(n, k, l, family, d, config, deadline=deadline,
                                     node_budget=config.node_budget - nodes)
        nodes += used
        queries.append((d, outcome))
        if outcome == "sat":
            witness = space.to_hypergraph(mask)
            lo = certify(witness, family, l)
            if lo < d:
                raise AssertionError("decision witness failed re-verification")
            hi = lo
            d = lo + 1
            continue
        if outcome == "unsat":
            hi = d - 1
        else:
            status = BUDGET_EXHAUSTED
            hi = space.max_degree
        break
    if lo != certify(witness, family, l):
        raise AssertionError("witness failed re-verification")
    return SearchResult(lo, hi, status, witness, nodes, time.perf_counter() - start,
                        {"heuristic": heur.lo, "queries": queries,
                         "upper_trivial": math.comb(n - l, k - l)})
