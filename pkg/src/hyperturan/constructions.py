"""Explicit hypergraph constructions.

Labelling conventions (relied on by tests and witnesses):

* ``build_B(p, t, k, l)``: part ``V_i = {i*p, ..., i*p + p - 1}`` for
  ``i = 0..t-1``.
* ``build_layered(k, l, a, b, t, p)``: block ``W_j = {j*t*p, ..., (j+1)*t*p - 1}``;
  inside a block the parts of its ``B(p, t, k, l)`` copy are laid out as in
  ``build_B`` shifted by ``j*t*p``.
* ``build_giraud(M)``: rows are ``0..m-1``, columns ``m..2m-1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import InvalidArgument
from .hypergraph import Hypergraph

VARIANTS = ("B", "Layered", "Giraud", "RandomLink")


def _bounded_compositions(total: int, parts: int, cap: int):
    """Tuples of ``parts`` integers in ``0..cap`` summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(cap, total) + 1):
        for rest in _bounded_compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def _profile_edges(groups, counts):
    """All sets taking ``counts[i]`` vertices from ``groups[i]``."""
    pools = [itertools.combinations(g, c) for g, c in zip(groups, counts) if c]
    for pieces in itertools.product(*pools):
        yield tuple(v for piece in pieces for v in piece)


def _check_B(p, t, k, l):
    if not (t >= k > l > 1):
        raise InvalidArgument(f"B needs t >= k > l > 1, got t={t}, k={k}, l={l}")
    if p < 1:
        raise InvalidArgument(f"B needs p >= 1, got p={p}")


def _B_edges(p, t, k, l, offset=0):
    parts = [range(offset + i * p, offset + (i + 1) * p) for i in range(t)]
    # E1: fewer than l vertices in every part
    for counts in _bounded_compositions(k, t, l - 1):
        yield from _profile_edges(parts, counts)
    # E2: l vertices in V_i and one in each of V_{i+1}, ..., V_{i+k-l} (cyclic)
    for i in range(t):
        counts = [0] * t
        counts[i] = l
        for j in range(1, k - l + 1):
            counts[(i + j) % t] = 1
        yield from _profile_edges(parts, counts)


def build_B(p: int, t: int, k: int, l: int) -> Hypergraph:
    """The k-graph on t parts of size p whose minimum l-degree is p**(k-l)."""
    _check_B(p, t, k, l)
    return Hypergraph(k, t * p, _B_edges(p, t, k, l))


def build_layered(k: int, l: int, a: int, b: int, t: int, p: int) -> Hypergraph:
    """b blocks of size t*p, each carrying a copy of B(p, t, k, l).

    Cross-block edges: either every block meets the edge in fewer than l
    vertices, or one block ``i0`` meets it in exactly l vertices, the next
    ``a`` blocks (cyclically) in fewer than l each, and all others in none.
    """
    if not k > l > 1:
        raise InvalidArgument(f"layered needs k > l > 1, got k={k}, l={l}")
    if a <= 0 or a + k >= b:
        raise InvalidArgument(f"layered needs 0 < a and a + k < b, got a={a}, b={b}")
    if t < k:
        raise InvalidArgument(f"layered needs t >= k, got t={t}")
    if p < l:
        raise InvalidArgument(f"layered needs p >= l, got p={p}")
    size = t * p
    blocks = [range(j * size, (j + 1) * size) for j in range(b)]

    def edges():
        for counts in _bounded_compositions(k, b, l - 1):
            yield from _profile_edges(blocks, counts)
        for i0 in range(b):
            for tail in _bounded_compositions(k - l, a, l - 1):
                counts = [0] * b
                counts[i0] = l
                for j, c in enumerate(tail, start=1):
                    counts[(i0 + j) % b] = c
                yield from _profile_edges(blocks, counts)
        for j in range(b):
            yield from _B_edges(p, t, k, l, offset=j * size)

    return Hypergraph(k, b * size, edges())


def sylvester_hadamard(order: int) -> np.ndarray:
    """Sylvester Hadamard matrix of the given order with -1 entries replaced by 0."""
    if order < 1 or order & (order - 1) or order > 32:
        raise InvalidArgument(f"order must be a power of two in 1..32, got {order}")
    H = np.ones((1, 1), dtype=np.int8)
    while H.shape[0] < order:
        H = np.block([[H, H], [H, -H]])
    return (H > 0).astype(np.int8)


def build_giraud(M, four_line_edges: bool = False) -> Hypergraph:
    """Giraud's 4-graph on the rows and columns of a 0/1 matrix.

    A 4-set with exactly three rows (so one column) or exactly three columns
    is an edge, as is a 2-rows-2-columns set whose 2x2 submatrix has odd sum.
    ``four_line_edges`` additionally makes 4 rows or 4 columns an edge; that
    reading is not K_5^4-free once m >= 5 and exists only to demonstrate it.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise InvalidArgument(f"matrix must be square and non-empty, got shape {M.shape}")
    if not np.isin(M, (0, 1)).all():
        raise InvalidArgument("matrix entries must be 0 or 1")
    m = M.shape[0]
    rows = range(m)
    cols = range(m, 2 * m)
    edges = []
    for r3 in itertools.combinations(rows, 3):
        edges.extend(r3 + (c,) for c in cols)
    for c3 in itertools.combinations(cols, 3):
        edges.extend((r,) + c3 for r in rows)
    for r1, r2 in itertools.combinations(rows, 2):
        diff = M[r1] ^ M[r2]
        for c1, c2 in itertools.combinations(range(m), 2):
            if (diff[c1] + diff[c2]) % 2:
                edges.append((r1, r2, m + c1, m + c2))
    if four_line_edges:
        edges.extend(itertools.combinations(rows, 4))
        edges.extend(itertools.combinations(cols, 4))
    return Hypergraph(4, 2 * m, edges)


def lset_value(seed: int, S: tuple[int, ...], m: int) -> int:
    """Uniform draw from ``0..m-1`` owned by the l-set S.

    Each set gets its own PCG64 stream keyed by ``(seed, S)``, so the value
    does not depend on the order in which sets are visited.
    """
    ss = np.random.SeedSequence(entropy=seed & (2**64 - 1), spawn_key=tuple(S))
    return int(np.random.Generator(np.random.PCG64(ss)).integers(m))


def build_random_link(base: Hypergraph, n: int, k: int, l: int, seed: int) -> Hypergraph:
    """Random k-graph whose (l-1)-links are homomorphic to ``base``.

    Every l-set S of ``0..n-1`` draws a vertex X_S of ``base``.  A sorted
    k-set ``i_1 < ... < i_k`` is an edge iff the k-l+1 draws for the sets
    ``{i_1..i_{l-1}, i_{l-1+j}}`` are pairwise distinct and span an edge
    of ``base``.
    """
    if not k > l >= 2:
        raise InvalidArgument(f"random link needs k > l >= 2, got k={k}, l={l}")
    if base.k != k - l + 1:
        raise InvalidArgument(f"base must be a {k - l + 1}-graph, got uniformity {base.k}")
    if n < k:
        raise InvalidArgument(f"need n >= k, got n={n}")
    m = base.n
    if m < 1:
        raise InvalidArgument("base must have at least one vertex")
    X = {S: lset_value(seed, S, m) for S in itertools.combinations(range(n), l)}
    base_edges = base.edge_mask_set
    width = k - l + 1
    edges = []
    for K in itertools.combinations(range(n), k):
        head = K[: l - 1]
        mask = 0
        for v in K[l - 1:]:
            mask |= 1 << X[head + (v,)]
        if mask.bit_count() == width and mask in base_edges:
            edges.append(K)
    return Hypergraph(k, n, edges)


def complete_bipartite(s: int, t: int) -> Hypergraph:
    return Hypergraph(2, s + t, [(i, s + j) for i in range(s) for j in range(t)])


@dataclass(frozen=True)
class ConstructionSpec:
    """A named construction with its parameters; ``build()`` validates and builds."""

    variant: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise InvalidArgument(f"unknown construction {self.variant!r}; expected one of {VARIANTS}")

    def build(self) -> Hypergraph:
        p = self.params
        if self.variant == "B":
            return build_B(p["p"], p["t"], p["k"], p["l"])
        if self.variant == "Layered":
            return build_layered(p["k"], p["l"], p["a"], p["b"], p["t"], p["p"])
        if self.variant == "Giraud":
            M = p["matrix"] if "matrix" in p else sylvester_hadamard(p["order"])
            return build_giraud(M, p.get("four_line_edges", False))
        return build_random_link(p["base"], p["n"], p["k"], p["l"], p["seed"])

    def metadata(self) -> dict[str, Any]:
        out: dict[str, Any] = {"variant": self.variant}
        for key, val in self.params.items():
            if isinstance(val, Hypergraph):
                out[key] = {"k": val.k, "n": val.n, "edges": [list(e) for e in val.edges]}
            elif isinstance(val, np.ndarray):
                out[key] = val.tolist()
            else:
                out[key] = val
        return out
