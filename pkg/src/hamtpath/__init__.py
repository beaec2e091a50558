"""Time graphs, exact LP-based useless-edge pruning, and a harness that checks
the pruning verdict against brute-force Hamiltonicity."""

from .lp import (
    Feasible,
    Infeasible,
    LPInstance,
    build_lp,
    is_useless,
    solve_feasibility,
    verify_certificate,
)
from .oracle import OracleResult, enumerate_htps, is_hamiltonian
from .pruning import Decision, PruneReport, prune, prune_single_pass
from .reduction import Digraph, hampath_oracle, reduce_hampath
from .search import GeneratorSpec, minimize_discrepancy, run_campaign
from .timegraph import (
    EdgeId,
    Flow,
    TimeGraph,
    TimePath,
    complete_time_graph,
    layer_sum,
    paper_s5_graph,
    parse_timegraph,
    path_to_flow,
    serialize_timegraph,
    validate_edge,
)

__version__ = "0.1.0"
