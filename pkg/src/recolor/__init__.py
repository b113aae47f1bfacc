"""Single-vertex recoloring reconfiguration of graph colorings."""

__version__ = "0.1.0"

from .coloring import (
    Coloring,
    RecoloringSequence,
    Step,
    admissible_moves,
    apply_sequence,
    is_frozen,
    is_proper,
    reverse_sequence,
)
from .decider import MixingVerdict, Reason, decide_mixing, is_3_mixing, three_to_two
from .explorer import (
    ConfigStats,
    census,
    components,
    decode,
    encode,
    enumerate_colorings,
    is_mixing_bruteforce,
    iter_colorings,
    reachable,
    reaches_two_coloring,
)
from .graph import Bipartition, Graph, QuotientMap, bipartition, build_graph, join_clique, quotient
from .reduction import ReductionInstance, embed_coloring, non_mixing_witness, reduce
from .synthesis import clique_schedule, compose_three_mixing, lift, relabel, synthesize_k, two_coloring_bridge

__all__ = [
    "Bipartition",
    "Coloring",
    "ConfigStats",
    "Graph",
    "MixingVerdict",
    "QuotientMap",
    "Reason",
    "RecoloringSequence",
    "ReductionInstance",
    "Step",
    "admissible_moves",
    "apply_sequence",
    "bipartition",
    "build_graph",
    "census",
    "clique_schedule",
    "components",
    "compose_three_mixing",
    "decide_mixing",
    "decode",
    "embed_coloring",
    "encode",
    "enumerate_colorings",
    "is_3_mixing",
    "is_frozen",
    "is_mixing_bruteforce",
    "is_proper",
    "iter_colorings",
    "join_clique",
    "lift",
    "non_mixing_witness",
    "quotient",
    "reachable",
    "reaches_two_coloring",
    "reduce",
    "relabel",
    "reverse_sequence",
    "synthesize_k",
    "three_to_two",
    "two_coloring_bridge",
]
