"""Simulated-annealing search for family-free graphs with large minimum l-degree."""
from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..hypergraph import ForbiddenFamily
from .space import copies_by_slot, copy_masks, slot_space
from .types import LOWER_BOUND_ONLY, SearchResult, SolverConfig, certify, check_problem


def _restart_seed(seed: int, restart: int) -> int:
    ss = np.random.SeedSequence(entropy=seed & (2**64 - 1), spawn_key=(restart,))
    return int(ss.generate_state(1, np.uint64)[0])


def _creates_copy(H: int, s: int, by_slot) -> bool:
    bit = 1 << s
    return any(c & ~H == bit for c in by_slot[s])


def _greedy_fill(H: int, order, by_slot) -> int:
    for s in order:
        if not H >> s & 1 and not _creates_copy(H, s, by_slot):
            H |= 1 << s
    return H


def _score(deg, weight):
    low = min(deg)
    return low * weight - deg.count(low), low


def anneal(n, k, l, members, *, seed, steps, temperature, deadline=None, stop_at=None):
    """One annealing run; returns ``(delta, count_at_min, edge_mask)``.

    States are always family-free.  A move toggles one random slot: removing
    an edge, or adding one and deleting a random other edge from every
    forbidden copy the addition would complete.  The objective is the pair
    (min l-degree, -number of l-sets at the minimum) folded into one integer.
    """
    space = slot_space(n, k, l)
    by_slot = copies_by_slot(space, copy_masks(space, members))
    rng = random.Random(seed)
    order = list(range(space.size))
    rng.shuffle(order)
    H = _greedy_fill(0, order, by_slot)
    deg = space.degrees(H)
    weight = len(deg) + 1
    score, low = _score(deg, weight)
    best = (score, H)
    target = space.max_degree if stop_at is None else min(stop_at, space.max_degree)
    t_hi, t_lo = temperature
    slot_lsets = space.slot_lsets
    for step in range(steps):
        if low >= target:
            break
        if deadline is not None and step & 255 == 0 and time.perf_counter() > deadline:
            break
        temp = t_hi * (t_lo / t_hi) ** (step / max(steps - 1, 1))
        s = rng.randrange(space.size)
        bit = 1 << s
        removed = []
        if H & bit:
            new = H ^ bit
            removed.append(s)
            added = None
        else:
            if bit in by_slot[s]:
                continue  # the edge alone is a forbidden copy
            new = H | bit
            added = s
            for c in by_slot[s]:
                if c & ~new == 0:
                    victims = c & new & ~bit
                    choices = []
                    while victims:
                        v = victims & -victims
                        victims ^= v
                        choices.append(v.bit_length() - 1)
                    r = rng.choice(choices)
                    new ^= 1 << r
                    removed.append(r)
        nd = deg[:]
        if added is not None:
            for i in slot_lsets[added]:
                nd[i] += 1
        for r in removed:
            for i in slot_lsets[r]:
                nd[i] -= 1
        nscore, nlow = _score(nd, weight)
        diff = nscore - score
        if diff >= 0 or rng.random() < math.exp(diff / temp):
            H, deg, score, low = new, nd, nscore, nlow
            if score > best[0]:
                best = (score, H)
    H = _greedy_fill(best[1], order, by_slot)
    deg = space.degrees(H)
    low = min(deg)
    return low, deg.count(low), H


def _restart_job(args):
    n, k, l, members, seed, steps, temperature, deadline, stop_at = args
    return anneal(n, k, l, members, seed=seed, steps=steps, temperature=temperature,
                  deadline=deadline, stop_at=stop_at)


def heuristic_lower_bound(n: int, k: int, l: int, family: ForbiddenFamily,
                          config: SolverConfig = SolverConfig(), stop_at: int | None = None) -> SearchResult:
    """Best witness over ``config.restarts`` independent seeded annealing runs.

    ``stop_at`` ends a run early once its minimum l-degree reaches that value;
    remaining restarts still run unless one has already reached it.
    """
    check_problem(n, k, l, family)
    start = time.perf_counter()
    deadline = start + config.time_budget
    space = slot_space(n, k, l)
    members = tuple(family.members)
    jobs = [(n, k, l, members, _restart_seed(config.seed, r), config.sa_steps,
             tuple(config.sa_temperature), deadline, stop_at) for r in range(config.restarts)]
    runs = []
    if config.parallel_workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(config.parallel_workers) as pool:
            runs = list(pool.map(_restart_job, jobs))
    else:
        for job in jobs:
            runs.append(_restart_job(job))
            if stop_at is not None and runs[-1][0] >= stop_at:
                break
            if time.perf_counter() > deadline:
                break
    # best delta, then fewest l-sets at the minimum, then lexicographically smallest edge list
    top = max((r[0], -r[1]) for r in runs)
    best = min((r for r in runs if (r[0], -r[1]) == top), key=lambda r: space.to_hypergraph(r[2]).edges)
    witness = space.to_hypergraph(best[2])
    value = certify(witness, family, l)
    if value != best[0]:
        raise AssertionError("heuristic bookkeeping disagrees with re-verification")
    return SearchResult(value, space.max_degree, LOWER_BOUND_ONLY, witness,
                        wall_time=time.perf_counter() - start,
                        detail={"restarts_run": len(runs), "per_restart": [r[0] for r in runs]})

