"""Immutable k-uniform hypergraphs and the degree/link/containment toolkit.

Vertices are the integers ``0..n-1``.  Vertex sets are passed around either
as iterables of ints or, internally, as int bitmasks (bit ``v`` set iff
``v`` is a member); :func:`to_mask` and :func:`from_mask` convert.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import InvalidArgument, UnsupportedSize

DEFAULT_MAX_ORDER = 12
CANONICAL_MAX_ORDER = 10

CanonicalForm = tuple  # (k, n, edges)


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """A k-graph on vertices ``0..n-1``.

    Edges are normalised to sorted tuples and stored in lexicographic order.
    Duplicate edges, repeated vertices and out-of-range labels are rejected.
    """

    k: int
    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.k < 1:
            raise InvalidArgument(f"uniformity must be >= 1, got {self.k}")
        if self.n < 0:
            raise InvalidArgument(f"vertex count must be >= 0, got {self.n}")
        normal = []
        for e in self.edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != self.k or len(set(t)) != self.k:
                raise InvalidArgument(f"edge {e!r} does not have {self.k} distinct vertices")
            if t and (t[0] < 0 or t[-1] >= self.n):
                raise InvalidArgument(f"edge {e!r} has a vertex outside 0..{self.n - 1}")
            normal.append(t)
        normal.sort()
        for a, b in zip(normal, normal[1:]):
            if a == b:
                raise InvalidArgument(f"duplicate edge {a!r}")
        object.__setattr__(self, "edges", tuple(normal))

    @classmethod
    def from_masks(cls, k: int, n: int, masks: Iterable[int]) -> "Hypergraph":
        return cls(k, n, [from_mask(m) for m in masks])

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge) -> bool:
        return to_mask(edge) in self.edge_mask_set

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(e) for e in self.edges)

    @cached_property
    def edge_mask_set(self) -> frozenset:
        return frozenset(self.edge_masks)

    @cached_property
    def vertex_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    @cached_property
    def _completions(self) -> dict[int, int]:
        # (k-1)-set mask -> mask of vertices completing it to an edge
        comp: dict[int, int] = {}
        for m in self.edge_masks:
            rest = m
            while rest:
                low = rest & -rest
                rest ^= low
                key = m ^ low
                comp[key] = comp.get(key, 0) | low
        return comp

    def __repr__(self):
        return f"Hypergraph(k={self.k}, n={self.n}, e={len(self.edges)})"


VertexSet = Iterable[int]


def _as_mask(T, n: int) -> int:
    T = list(T)
    if len(set(T)) != len(T) or any(v < 0 for v in T):
        raise InvalidArgument(f"vertex set {T!r} has repeated or negative members")
    mask = to_mask(T)
    if mask >> n:
        raise InvalidArgument(f"vertex set {T!r} is not a subset of 0..{n - 1}")
    return mask


# ---------------------------------------------------------------------------
# degrees and links


def degree(H: Hypergraph, T: VertexSet) -> int:
    """Number of (k-|T|)-sets S disjoint from T with S | T an edge."""
    t = _as_mask(T, H.n)
    if t.bit_count() > H.k:
        raise InvalidArgument(f"|T| = {t.bit_count()} exceeds k = {H.k}")
    return sum(1 for m in H.edge_masks if m & t == t)


def degree_table(H: Hypergraph, l: int) -> Counter:
    """Map from l-set mask to its degree; l-sets of degree 0 are absent."""
    table: Counter = Counter()
    for e in H.edges:
        for sub in itertools.combinations(e, l):
            table[to_mask(sub)] += 1
    return table


def link(H: Hypergraph, T: VertexSet) -> Hypergraph:
    """The link graph N^H(T) as a (k-|T|)-graph on the same labels."""
    t = _as_mask(T, H.n)
    size = t.bit_count()
    if size >= H.k:
        raise InvalidArgument(f"link needs |T| < k, got |T| = {size}, k = {H.k}")
    if size == 0:
        return H
    return Hypergraph.from_masks(H.k - size, H.n, (m ^ t for m in H.edge_masks if m & t == t))


def min_l_degree(H: Hypergraph, l: int) -> tuple[int, tuple[int, ...]]:
    """Minimum l-degree and the lexicographically first l-set attaining it."""
    if l < 0 or l >= H.k:
        raise InvalidArgument(f"need 0 <= l < k, got l = {l}, k = {H.k}")
    if l > H.n:
        raise InvalidArgument(f"l = {l} exceeds the vertex count {H.n}")
    if l == 0:
        return len(H.edges), ()
    table = degree_table(H, l)
    best = None
    witness = None
    for T in itertools.combinations(range(H.n), l):
        d = table.get(to_mask(T), 0)
        if best is None or d < best:
            best, witness = d, T
            if d == 0:
                break
    return best, witness


def induced(H: Hypergraph, S: VertexSet) -> Hypergraph:
    """Subgraph induced on S, relabelled to ``0..|S|-1`` in increasing order."""
    s = _as_mask(S, H.n)
    verts = from_mask(s)
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [tuple(relabel[v] for v in e) for e, m in zip(H.edges, H.edge_masks) if m & s == m]
    return Hypergraph(H.k, len(verts), edges)


def isolated_vertices(H: Hypergraph) -> tuple[int, ...]:
    return tuple(v for v, d in enumerate(H.vertex_degrees) if d == 0)


def drop_isolated(H: Hypergraph) -> Hypergraph:
    return induced(H, [v for v, d in enumerate(H.vertex_degrees) if d > 0])


# ---------------------------------------------------------------------------
# containment and copy counting


def _embedding_order(F: Hypergraph) -> list[int]:
    # Greedy: close as many pattern edges as early as possible.
    deg = F.vertex_degrees
    chosen: list[int] = []
    chosen_mask = 0
    remaining = set(range(F.n))
    while remaining:
        def score(v):
            bit = 1 << v
            closed = sum(1 for m in F.edge_masks if m & bit and m & ~(chosen_mask | bit) == 0)
            touching = sum(1 for m in F.edge_masks if m & bit and m & chosen_mask)
            return (closed, touching, deg[v], -v)

        v = max(remaining, key=score)
        chosen.append(v)
        chosen_mask |= 1 << v
        remaining.discard(v)
    return chosen


def _injection_plan(F: Hypergraph):
    order = _embedding_order(F)
    pos = {v: i for i, v in enumerate(order)}
    closers: list[list[tuple[int, ...]]] = [[] for _ in order]
    for e in F.edges:
        idx = sorted(pos[v] for v in e)
        closers[idx[-1]].append(tuple(idx[:-1]))
    need = [F.vertex_degrees[v] for v in order]
    return order, closers, need


def _injections(H: Hypergraph, F: Hypergraph, first_only: bool) -> int:
    if F.k != H.k:
        raise InvalidArgument(f"uniformity mismatch: host k={H.k}, pattern k={F.k}")
    if F.n > H.n:
        return 0
    if F.n == 0:
        return 1
    if len(F.edges) > len(H.edges):
        return 0
    _, closers, need = _injection_plan(F)
    hdeg = H.vertex_degrees
    allowed_cache: dict[int, int] = {}

    def allowed(d):
        if d not in allowed_cache:
            allowed_cache[d] = to_mask(v for v in range(H.n) if hdeg[v] >= d)
        return allowed_cache[d]

    allowed_at = [allowed(d) for d in need]
    comp = H._completions
    images = [0] * F.n
    last = F.n - 1

    def rec(j, used):
        cand = allowed_at[j] & ~used
        for others in closers[j]:
            key = 0
            for o in others:
                key |= images[o]
            cand &= comp.get(key, 0)
            if not cand:
                return 0
        if j == last:
            if first_only:
                return 1 if cand else 0
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            images[j] = low
            total += rec(j + 1, used | low)
            if first_only and total:
                return total
        return total

    return rec(0, 0)


def contains(H: Hypergraph, F: Hypergraph) -> bool:
    """True iff some injection V(F) -> V(H) maps every edge of F to an edge of H."""
    return _injections(H, F, first_only=True) > 0


def count_injections(H: Hypergraph, F: Hypergraph) -> int:
    """Number of edge-preserving injections V(F) -> V(H)."""
    return _injections(H, F, first_only=False)


def automorphism_count(F: Hypergraph) -> int:
    return _injections(F, F, first_only=False)


def count_copies(H: Hypergraph, F: Hypergraph) -> int:
    """Number of unlabelled (not necessarily induced) copies of F in H."""
    return count_injections(H, F) // automorphism_count(F)


# ---------------------------------------------------------------------------
# canonical forms and link families


def _refined_classes(F: Hypergraph) -> list[list[int]]:
    """Partition vertices into isomorphism-invariant colour classes."""
    colour = list(F.vertex_degrees)
    incident: list[list[tuple[int, ...]]] = [[] for _ in range(F.n)]
    for e in F.edges:
        for v in e:
            incident[v].append(tuple(u for u in e if u != v))
    n_classes = len(set(colour))
    while True:
        sig = [
            (colour[v], tuple(sorted(tuple(sorted(colour[u] for u in rest)) for rest in incident[v])))
            for v in range(F.n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        colour = [ranks[s] for s in sig]
        if len(ranks) == n_classes:
            break
        n_classes = len(ranks)
    classes: dict[int, list[int]] = {}
    for v in range(F.n):
        classes.setdefault(colour[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_form(F: Hypergraph, max_order: int = CANONICAL_MAX_ORDER) -> CanonicalForm:
    """Isomorphism-invariant key ``(k, n, edges)``.

    The edge tuple is the lexicographic minimum over all relabellings that
    respect a colour-refinement partition of the vertices.  Two graphs get
    equal keys iff they are isomorphic.
    """
    if F.n > max_order:
        raise UnsupportedSize(f"canonical form limited to {max_order} vertices, got {F.n}")
    if not F.edges:
        return (F.k, F.n, ())
    classes = _refined_classes(F)
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in classes)):
        label = [0] * F.n
        nxt = 0
        for block in perms:
            for v in block:
                label[v] = nxt
                nxt += 1
        key = tuple(sorted(tuple(sorted(label[v] for v in e)) for e in F.edges))
        if best is None or key < best:
            best = key
    return (F.k, F.n, best)


def from_canonical(form: CanonicalForm) -> Hypergraph:
    k, n, edges = form
    return Hypergraph(k, n, edges)


def canonical_graph(F: Hypergraph, max_order: int = CANONICAL_MAX_ORDER) -> Hypergraph:
    return from_canonical(canonical_form(F, max_order))


def is_isomorphic(A: Hypergraph, B: Hypergraph, max_order: int = CANONICAL_MAX_ORDER) -> bool:
    if (A.k, A.n, len(A.edges)) != (B.k, B.n, len(B.edges)):
        return False
    return canonical_form(A, max_order) == canonical_form(B, max_order)


def link_family(F, l: int, max_order: int = CANONICAL_MAX_ORDER) -> frozenset:
    """Canonical forms of the links of all l-sets of F, isolated vertices dropped.

    ``F`` may be a single hypergraph, a :class:`ForbiddenFamily` or any
    iterable of hypergraphs; for a collection the union is returned.
    """
    members = [F] if isinstance(F, Hypergraph) else list(F)
    out = set()
    for G in members:
        if not 0 < l < G.k:
            raise InvalidArgument(f"need 0 < l < k, got l = {l}, k = {G.k}")
        for T in itertools.combinations(range(G.n), l):
            out.add(canonical_form(drop_isolated(link(G, T)), max_order))
    return frozenset(out)


def blow_up(F: Hypergraph, s: int) -> Hypergraph:
    """Replace vertex i by the class ``{i*s, ..., i*s+s-1}``; edges become all transversals."""
    if s < 1:
        raise InvalidArgument(f"blow-up factor must be >= 1, got {s}")
    edges = []
    for e in F.edges:
        for choice in itertools.product(range(s), repeat=F.k):
            edges.append(tuple(v * s + c for v, c in zip(e, choice)))
    return Hypergraph(F.k, F.n * s, edges)


# ---------------------------------------------------------------------------
# basic graphs and families


def complete(t: int, k: int) -> Hypergraph:
    return Hypergraph(k, t, itertools.combinations(range(t), k))


def edgeless(n: int, k: int) -> Hypergraph:
    return Hypergraph(k, n, ())


@dataclass(frozen=True)
class ForbiddenFamily:
    """Pairwise non-isomorphic k-graphs, each stored in canonical labelling."""

    k: int
    members: tuple = ()
    name: str | None = None

    @classmethod
    def of(cls, graphs: Iterable[Hypergraph], k: int | None = None, name: str | None = None,
           max_order: int = DEFAULT_MAX_ORDER) -> "ForbiddenFamily":
        graphs = list(graphs)
        if k is None:
            if not graphs:
                raise InvalidArgument("an empty family needs an explicit uniformity")
            k = graphs[0].k
        seen = {}
        for G in graphs:
            if G.k != k:
                raise InvalidArgument(f"family member has uniformity {G.k}, expected {k}")
            if G.n > max_order:
                raise UnsupportedSize(f"family member has {G.n} vertices, max is {max_order}")
            form = canonical_form(G, max_order)
            seen.setdefault(form, from_canonical(form))
        members = tuple(seen[f] for f in sorted(seen))
        return cls(k, members, name)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def is_family_free(H: Hypergraph, family: ForbiddenFamily) -> bool:
    if family.k != H.k:
        raise InvalidArgument(f"uniformity mismatch: host k={H.k}, family k={family.k}")
    return not any(contains(H, F) for F in family.members)


def handshake_total(H: Hypergraph, l: int) -> int:
    """C(k, l) * e(H); the sum of all l-degrees must equal this."""
    return math.comb(H.k, l) * len(H.edges)
