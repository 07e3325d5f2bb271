"""Built-in graphs addressable by name.

Accepted names::

    K{t}_{k}          complete k-graph on t vertices (t <= 8, k <= 5)
    K4_3_minus_e      the 3-graph on 4 vertices with 3 edges
    P3                the 2-edge path on 3 vertices (a 2-graph)
    edgeless(n,k)     also spelled edgeless_{n}_{k}
"""
from __future__ import annotations

import re

from .errors import InvalidArgument
from .hypergraph import Hypergraph, complete, edgeless

_COMPLETE = re.compile(r"^K(\d+)_(\d+)$")
_EDGELESS = re.compile(r"^edgeless(?:\((\d+),\s*(\d+)\)|_(\d+)_(\d+))$")


def resolve_named(name: str) -> Hypergraph:
    name = name.strip()
    if name == "K4_3_minus_e":
        return Hypergraph(3, 4, [(0, 1, 3), (0, 2, 3), (1, 2, 3)])
    if name == "P3":
        return Hypergraph(2, 3, [(0, 1), (1, 2)])
    m = _COMPLETE.match(name)
    if m:
        t, k = int(m.group(1)), int(m.group(2))
        if not (1 <= k <= 5 and k <= t <= 8):
            raise InvalidArgument(f"{name}: complete graphs need 1 <= k <= 5 and k <= t <= 8")
        return complete(t, k)
    m = _EDGELESS.match(name)
    if m:
        g = [x for x in m.groups() if x is not None]
        n, k = int(g[0]), int(g[1])
        if k < 1:
            raise InvalidArgument(f"{name}: uniformity must be >= 1")
        return edgeless(n, k)
    raise InvalidArgument(f"unknown graph name {name!r}")
