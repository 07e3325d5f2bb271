from .heuristic import heuristic_lower_bound
from .oracle import oracle_ex
from .types import (BUDGET_EXHAUSTED, LOWER_BOUND_ONLY, PROVED_EXACT, UNSAT, SearchProblem,
                    SearchResult, SolverConfig, certify)
from .search import exact_ex, exists_with_min_degree
