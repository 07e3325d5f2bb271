from __future__ import annotations

import os
from dataclasses import dataclass, field

from ..errors import InvalidArgument
from ..hypergraph import ForbiddenFamily, Hypergraph, is_family_free, min_l_degree

PROVED_EXACT = "proved-exact"
LOWER_BOUND_ONLY = "lower-bound-only"
UNSAT = "unsat"
BUDGET_EXHAUSTED = "budget-exhausted"

MAX_SOLVER_N = 64


def default_workers() -> int:
    return int(os.environ.get("HYPERTURAN_WORKERS", "1"))


@dataclass(frozen=True)
class SolverConfig:
    """Search budgets and knobs.  ``time_budget`` is in seconds."""

    time_budget: float = 600.0
    node_budget: int = 50_000_000
    symmetry_breaking: bool = True
    parallel_workers: int = field(default_factory=default_workers)
    seed: int = 0
    restarts: int = 16
    sa_steps: int = 20_000
    sa_temperature: tuple = (2.0, 0.05)

    def __post_init__(self):
        if self.time_budget <= 0 or self.node_budget <= 0:
            raise InvalidArgument("budgets must be positive")
        if self.parallel_workers < 1 or self.restarts < 1 or self.sa_steps < 0:
            raise InvalidArgument("workers and restarts must be >= 1, sa_steps >= 0")


@dataclass(frozen=True)
class SearchProblem:
    n: int
    k: int
    l: int
    family: ForbiddenFamily
    mode: str = "exact"
    config: SolverConfig = field(default_factory=SolverConfig)

    def __post_init__(self):
        check_problem(self.n, self.k, self.l, self.family)


def check_problem(n, k, l, family):
    if not 0 <= l < k <= n:
        raise InvalidArgument(f"need 0 <= l < k <= n, got n={n}, k={k}, l={l}")
    if family.k != k:
        raise InvalidArgument(f"family uniformity {family.k} differs from k = {k}")
    if n > MAX_SOLVER_N:
        raise InvalidArgument(f"solver supports n <= {MAX_SOLVER_N}, got {n}")


@dataclass
class SearchResult:
    """Outcome of a solver call.

    ``lo``/``hi`` bracket ex_l(n, family); they coincide when the value is
    known exactly.
    """

    lo: int
    hi: int
    status: str
    witness: Hypergraph | None = None
    nodes: int = 0
    wall_time: float = 0.0
    detail: dict = field(default_factory=dict)

    @property
    def value(self):
        if self.lo == self.hi:
            return self.lo
        return (self.lo, self.hi)


def certify(witness: Hypergraph, family: ForbiddenFamily, l: int) -> int:
    """Re-check a witness with the core routines and return its minimum l-degree."""
    if not is_family_free(witness, family):
        raise AssertionError("solver produced a witness containing a forbidden graph")
    return min_l_degree(witness, l)[0]
