"""Degree-sequence invariants, realizations and subdivided-clique witnesses.

The package certifies facts about graphic degree sequences at desk scale:
graphicality, the exact largest clique order over all realizations, a
profile classifier for odd near-regular sequences, constructive realizers
(trees, forced cliques, bipartite graphs with saturating matchings), a
witness construction producing a realization with an embedded subdivided
clique, exhaustive oracles for the chromatic quantities, and a sweep
driver for the package's five inequalities.
"""

from .errors import (
    ArgumentError,
    DegseqError,
    InfeasibleError,
    InternalBugError,
    NotGraphicError,
    ParseError,
    ResourceLimitError,
)
from .sequences import (
    SOURCE_ORACLE,
    SOURCE_RAO,
    SOURCE_WITNESS,
    BasicProfile,
    DegreeSequence,
    ProfileVerdict,
    SequenceStats,
    classify_basic_profile,
    is_graphic,
    largecl_check,
    omega_of_sequence,
    parse_sequence,
    rao_omega_at_least,
    yinli_sufficient,
)
from .graphs import (
    SimpleGraph,
    canonical_key,
    graph6_decode,
    graph6_encode,
    to_dot,
)
from .realize import (
    BipartiteRealization,
    enumerate_realizations,
    realize_any,
    realize_bipartite_with_matching,
    realize_low_degree,
    realize_tree,
    realize_with_clique,
)
from .analysis import (
    JoinDecomposition,
    StarSubdivisionWitness,
    WitnessReport,
    chromatic_number,
    clique_number,
    find_join_decomposition,
    h1_of_graph,
    has_perfect_matching,
    is_basic,
    is_chi_critical,
    is_hypomatchable,
    join_graphs,
    maximum_matching,
    verify_witness,
    witness_from_json,
    witness_to_json,
)
from .hajos import (
    BoundCheck,
    BoundReport,
    ConstructionCase,
    ConstructionPlan,
    build_basic_witness,
    check_bounds,
    join_witness_realizations,
    plan_construction,
    witness_pipeline,
)
from .oracle import (
    CheckOutcome,
    SweepReport,
    chi_of_sequence,
    enumerate_graphic_sequences,
    h1_of_sequence,
    has_realization_bruteforce,
    nonisomorphic_graphs,
    omega_of_sequence_bruteforce,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "DegseqError",
    "ParseError",
    "ArgumentError",
    "NotGraphicError",
    "InfeasibleError",
    "ResourceLimitError",
    "InternalBugError",
    "DegreeSequence",
    "parse_sequence",
    "is_graphic",
    "rao_omega_at_least",
    "omega_of_sequence",
    "yinli_sufficient",
    "largecl_check",
    "ProfileVerdict",
    "BasicProfile",
    "classify_basic_profile",
    "SequenceStats",
    "SOURCE_RAO",
    "SOURCE_ORACLE",
    "SOURCE_WITNESS",
    "SimpleGraph",
    "graph6_encode",
    "graph6_decode",
    "to_dot",
    "canonical_key",
    "realize_any",
    "realize_tree",
    "realize_low_degree",
    "realize_bipartite_with_matching",
    "BipartiteRealization",
    "realize_with_clique",
    "enumerate_realizations",
    "chromatic_number",
    "clique_number",
    "maximum_matching",
    "has_perfect_matching",
    "is_hypomatchable",
    "is_chi_critical",
    "is_basic",
    "join_graphs",
    "JoinDecomposition",
    "find_join_decomposition",
    "StarSubdivisionWitness",
    "WitnessReport",
    "verify_witness",
    "h1_of_graph",
    "witness_to_json",
    "witness_from_json",
    "ConstructionCase",
    "ConstructionPlan",
    "plan_construction",
    "build_basic_witness",
    "join_witness_realizations",
    "witness_pipeline",
    "BoundCheck",
    "BoundReport",
    "check_bounds",
    "nonisomorphic_graphs",
    "enumerate_graphic_sequences",
    "has_realization_bruteforce",
    "chi_of_sequence",
    "h1_of_sequence",
    "omega_of_sequence_bruteforce",
    "CheckOutcome",
    "SweepReport",
    "sweep",
]
