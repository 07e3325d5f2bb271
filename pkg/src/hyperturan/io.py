"""Edge-list text format.

First line ``k n``; then one edge per line as k space-separated 0-based
vertex labels in increasing order, lines sorted lexicographically.  The
reader accepts unsorted labels and lines but rejects duplicates and
out-of-range vertices; the writer always emits normalised text.
"""
from __future__ import annotations

import hashlib
from pathlib import Path

from .errors import ParseError
from .hypergraph import Hypergraph


def parse_hypergraph(text: str) -> Hypergraph:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("missing header 'k n'", line=1)
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"header must be 'k n', got {header!r}", line=no)
    try:
        k, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer header {header!r}", line=no) from None
    if k < 1 or n < 0:
        raise ParseError(f"header needs k >= 1 and n >= 0, got {k} {n}", line=no)
    seen = set()
    edges = []
    for no, ln in lines[1:]:
        try:
            verts = [int(x) for x in ln.split()]
        except ValueError:
            raise ParseError(f"non-integer vertex in {ln!r}", line=no) from None
        if len(verts) != k:
            raise ParseError(f"expected {k} vertices, got {len(verts)}", line=no)
        if len(set(verts)) != k:
            raise ParseError(f"repeated vertex in {ln!r}", line=no)
        bad = [v for v in verts if not 0 <= v < n]
        if bad:
            raise ParseError(f"vertex {bad[0]} out of range 0..{n - 1}", line=no)
        key = tuple(sorted(verts))
        if key in seen:
            raise ParseError(f"duplicate edge {' '.join(map(str, key))}", line=no)
        seen.add(key)
        edges.append(key)
    return Hypergraph(k, n, edges)


def emit_hypergraph(H: Hypergraph) -> str:
    out = [f"{H.k} {H.n}"]
    out.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(out) + "\n"


def read_hypergraph(path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def write_hypergraph(H: Hypergraph, path) -> str:
    """Write H to ``path`` and return the sha256 of the bytes written."""
    data = emit_hypergraph(H).encode()
    Path(path).write_bytes(data)
    return hashlib.sha256(data).hexdigest()


def digest(H: Hypergraph) -> str:
    return hashlib.sha256(emit_hypergraph(H).encode()).hexdigest()
