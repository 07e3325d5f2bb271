"""Minimum l-degree Turán problems on k-uniform hypergraphs."""
from importlib.metadata import PackageNotFoundError, version as _version

from .combinatorics import (GoodSubsetCount, JumpParams, M_threshold, count_good_subsets, f_multi,
                            f_uniform, jump_parameters, layered_parameters)
from .constructions import (ConstructionSpec, build_B, build_giraud, build_layered, build_random_link,
                            complete_bipartite, sylvester_hadamard)
from .errors import HyperturanError, InvalidArgument, ParseError, ResourceLimit, UnsupportedSize
from .hypergraph import (ForbiddenFamily, Hypergraph, automorphism_count, blow_up, canonical_form,
                         complete, contains, count_copies, degree, degree_table, edgeless,
                         handshake_total, induced, is_family_free, is_isomorphic, link, link_family,
                         min_l_degree)
from .io import emit_hypergraph, parse_hypergraph, read_hypergraph, write_hypergraph
from .named import resolve_named
from .solver import (SearchProblem, SearchResult, SolverConfig, exact_ex, exists_with_min_degree,
                     heuristic_lower_bound, oracle_ex)

try:
    __version__ = _version("artifact")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"
