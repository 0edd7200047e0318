"""Exact algorithms for capacitated coalition formation.

Vertices of an edge-weighted graph are split into coalitions of at most C
members so that the total weight of edges inside coalitions is as large as
possible. Solvers: exhaustive search (`solve_exact`), tree-decomposition DP
(`solve_tw`), vertex cover enumeration plus matching (`solve_vc`), and vertex
integrity with a small integer program (`solve_vi`).
"""

from .core import (CPartition, Instance, ParseError, PreconditionError, SolveResult, WeightedGraph,
                   is_nash_stable, read_instance, read_partition, validate, value, write_instance,
                   write_result)
from .dp_tw import solve_tw
from .gen import BinPackingInstance, from_bin_packing, gen_random
from .kernel import kernelize
from .oracle import enumerate_c_partitions, solve_exact
from .treedec import decompose, make_nice, validate_nice
from .vc_solver import min_vertex_cover, solve_vc
from .vi_solver import solve_vi

__all__ = [
    "BinPackingInstance", "CPartition", "Instance", "ParseError", "PreconditionError", "SolveResult",
    "WeightedGraph", "decompose", "enumerate_c_partitions", "from_bin_packing", "gen_random",
    "is_nash_stable", "kernelize", "make_nice", "min_vertex_cover", "read_instance", "read_partition",
    "solve_exact", "solve_tw", "solve_vc", "solve_vi", "validate", "validate_nice", "value",
    "write_instance", "write_result",
]
