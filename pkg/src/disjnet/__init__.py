"""Exact analysis of disjunctive Boolean networks.

A disjunctive network on a digraph ``D`` updates vertex ``i`` to the OR of the
states of its in-neighbours.  Configurations are Python ints used as bitsets
(bit ``i`` is the state of vertex ``i``), so a configuration doubles as the
support set of vertices that are on.
"""

from disjnet.errors import (
    DisjnetError,
    InputError,
    OracleMismatch,
    PreconditionError,
    ResourceError,
)
from disjnet.graph import (
    DirectedGraph,
    SccDecomposition,
    coverable_by_cycles,
    disjoint_union,
    from_edge_list,
    is_primitive,
    loop_number,
    partition_classes,
    scc,
    structural_predicates,
)
from disjnet.families import is_near_cyclic, make_graph, parse_family_spec
from disjnet.network import (
    Configuration,
    DisjunctiveNetwork,
    TruthTableNetwork,
    eval_conjunctive,
    eval_disjunctive,
    interaction_graph,
    to_truth_table,
)
from disjnet.dynamics import (
    PeriodicStructure,
    Topology,
    fixed_points,
    graph_from_topology,
    image_set,
    is_image_point,
    is_topology,
    maximal_preimage,
    periodic_structure,
)
from disjnet.ranks import RankTriple, ranks

__version__ = "0.1.0"

__all__ = [
    "Configuration",
    "DirectedGraph",
    "DisjnetError",
    "DisjunctiveNetwork",
    "InputError",
    "OracleMismatch",
    "PeriodicStructure",
    "PreconditionError",
    "RankTriple",
    "ResourceError",
    "SccDecomposition",
    "Topology",
    "TruthTableNetwork",
    "coverable_by_cycles",
    "disjoint_union",
    "eval_conjunctive",
    "eval_disjunctive",
    "fixed_points",
    "from_edge_list",
    "graph_from_topology",
    "image_set",
    "interaction_graph",
    "is_image_point",
    "is_near_cyclic",
    "is_primitive",
    "is_topology",
    "loop_number",
    "make_graph",
    "maximal_preimage",
    "parse_family_spec",
    "partition_classes",
    "periodic_structure",
    "ranks",
    "scc",
    "structural_predicates",
    "to_truth_table",
]
