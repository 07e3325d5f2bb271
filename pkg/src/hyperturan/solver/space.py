"""Edge slots of K_n^k as bit positions, and forbidden copies as slot masks."""
from __future__ import annotations

import itertools
import math
from functools import lru_cache

from ..errors import InvalidArgument
from ..hypergraph import Hypergraph, to_mask


class SlotSpace:
    """Bit ``s`` of a graph mask stands for the s-th k-set in colex order."""

    def __init__(self, n: int, k: int, l: int):
        self.n, self.k, self.l = n, k, l
        self.slots = sorted(itertools.combinations(range(n), k), key=lambda e: e[::-1])
        self.size = len(self.slots)
        self.full = (1 << self.size) - 1
        self.index = {to_mask(e): i for i, e in enumerate(self.slots)}
        self.lsets = list(itertools.combinations(range(n), l))
        lset_pos = {to_mask(T): i for i, T in enumerate(self.lsets)}
        self.lset_slots = [0] * len(self.lsets)
        self.slot_lsets = []
        for s, e in enumerate(self.slots):
            mine = tuple(lset_pos[to_mask(T)] for T in itertools.combinations(e, l))
            self.slot_lsets.append(mine)
            for i in mine:
                self.lset_slots[i] |= 1 << s
        self.max_degree = math.comb(n - l, k - l)

    def mask_of(self, H: Hypergraph) -> int:
        return sum(1 << self.index[m] for m in H.edge_masks)

    def to_hypergraph(self, mask: int) -> Hypergraph:
        edges = []
        while mask:
            low = mask & -mask
            edges.append(self.slots[low.bit_length() - 1])
            mask ^= low
        return Hypergraph(self.k, self.n, edges)

    def degrees(self, mask: int) -> list[int]:
        return [(m & mask).bit_count() for m in self.lset_slots]

    def transposition_pairs(self, i: int, j: int) -> list[tuple[int, int]]:
        """Slot pairs swapped by the vertex transposition (i j), ordered by first slot."""
        pairs = []
        for s, e in enumerate(self.slots):
            if i in e and j not in e:
                t = self.index[to_mask(j if v == i else v for v in e)]
                pairs.append((min(s, t), max(s, t)))
        return sorted(pairs)


@lru_cache(maxsize=32)
def slot_space(n: int, k: int, l: int) -> SlotSpace:
    return SlotSpace(n, k, l)


def _patterns(F: Hypergraph) -> set:
    """Distinct edge sets of F under all relabellings of its vertex positions."""
    out = set()
    for perm in itertools.permutations(range(F.n)):
        out.add(tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in F.edges)))
    return out


def copy_masks(space: SlotSpace, family) -> list[int]:
    """Slot masks of every copy of every family member in K_n^k, deduplicated."""
    out = set()
    for F in family:
        if F.n > space.n:
            continue
        if not F.edges:
            raise InvalidArgument("family has an edgeless member; every graph on n vertices contains it")
        pats = _patterns(F)
        for S in itertools.combinations(range(space.n), F.n):
            for pat in pats:
                mask = 0
                for e in pat:
                    mask |= 1 << space.index[to_mask(S[i] for i in e)]
                out.add(mask)
    return sorted(out)


def copies_by_slot(space: SlotSpace, copies: list[int]) -> list[list[int]]:
    table = [[] for _ in range(space.size)]
    for c in copies:
        rest = c
        while rest:
            low = rest & -rest
            rest ^= low
            table[low.bit_length() - 1].append(c)
    return table
