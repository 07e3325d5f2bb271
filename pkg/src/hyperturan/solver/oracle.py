"""Brute-force ex_l by enumerating every family-free k-graph on n vertices.

Deliberately shares nothing with the branch-and-bound search: slots are in
lexicographic order, forbidden copies are found by trying every injection,
and the only pruning is "this edge completes a forbidden copy".
"""
from __future__ import annotations

import itertools
import math
import time

from ..errors import InvalidArgument, UnsupportedSize
from ..hypergraph import ForbiddenFamily, Hypergraph, to_mask
from .types import PROVED_EXACT, SearchResult, certify, check_problem

ORACLE_MAX_SLOTS = 24


def _forbidden_masks(n, slots, family):
    index = {to_mask(e): i for i, e in enumerate(slots)}
    out = set()
    for F in family:
        if F.n > n:
            continue
        if not F.edges:
            raise InvalidArgument("family has an edgeless member; every graph on n vertices contains it")
        for image in itertools.permutations(range(n), F.n):
            out.add(sum(1 << index[to_mask(image[v] for v in e)] for e in F.edges))
    return out


def oracle_ex(n: int, k: int, l: int, family: ForbiddenFamily) -> SearchResult:
    check_problem(n, k, l, family)
    slots = list(itertools.combinations(range(n), k))
    N = len(slots)
    if N > ORACLE_MAX_SLOTS:
        raise UnsupportedSize(f"oracle enumerates 2^C(n,k) graphs; C({n},{k}) = {N} > {ORACLE_MAX_SLOTS}")
    start = time.perf_counter()
    # a forbidden copy is checked when its highest slot is decided
    closing = [[] for _ in range(N)]
    for m in _forbidden_masks(n, slots, family):
        closing[m.bit_length() - 1].append(m)
    lset_masks = []
    for T in itertools.combinations(range(n), l):
        t = to_mask(T)
        lset_masks.append(sum(1 << i for i, e in enumerate(slots) if to_mask(e) & t == t))

    best = -1
    best_mask = 0
    leaves = 0
    stack = [(0, 0)]
    while stack:
        i, H = stack.pop()
        if i == N:
            leaves += 1
            d = min((m & H).bit_count() for m in lset_masks)
            if d > best:
                best, best_mask = d, H
            continue
        with_edge = H | (1 << i)
        if not any(m & with_edge == m for m in closing[i]):
            stack.append((i + 1, with_edge))
        stack.append((i + 1, H))
    witness = Hypergraph(k, n, [slots[i] for i in range(N) if best_mask >> i & 1])
    if certify(witness, family, l) != best:
        raise AssertionError("oracle witness failed re-verification")
    return SearchResult(best, best, PROVED_EXACT, witness, nodes=leaves,
                        wall_time=time.perf_counter() - start,
                        detail={"graphs_enumerated": leaves, "upper_trivial": math.comb(n - l, k - l)})
