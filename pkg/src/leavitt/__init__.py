"""Exact symbolic computation in Leavitt path algebras of finite graphs.

The package computes in L_K(E) for a finite directed graph E over an exact
field K (the rationals or a prime field), with every element kept in a
canonical normal form. On top of the arithmetic sit certificate-producing
decision procedures: reduction of a nonzero element to a scalar vertex or a
cycle polynomial, nondegeneracy witnesses, minimality of vertex left ideals,
simplicity, socle membership, and the matricial structure of the socle.
"""

from .fields import (
    FieldError,
    GFElement,
    PrimeField,
    QQ,
    RationalField,
    field_from_selector,
    is_prime,
)
from .graphs import (
    CycleError,
    CyclicGraphError,
    Edge,
    Graph,
    GraphError,
    GraphParseError,
    HedgehogGraph,
    Path,
    SubsetError,
    UnknownVertexError,
    condition_L,
    cycle_has_exit,
    entry_paths,
    hedgehog_graph,
    hereditary_saturated_closure,
    is_acyclic,
    is_bifurcation,
    is_hereditary,
    is_saturated,
    line_points,
    parse_graph,
    paths_from_by_length,
    quotient_graph,
    require_cycle,
    simple_cycles,
    to_dot,
    tree,
    vertices_on_cycles,
)
from .algebra import (
    AlgebraError,
    Element,
    LeavittAlgebra,
    MixedContextError,
    Monomial,
    RelationsReport,
    ZeroElementError,
    special_edges,
)
from .expr import ExprParseError, parse_element
from .reduction import (
    CyclePolynomial,
    Generator,
    ReductionWitness,
    ScalarVertex,
    is_simple,
    nondegeneracy_witness,
    outcome_element,
    realify,
    reduce,
    verify_witness,
    vertex_ideal_minimal,
    witness_from_obj,
    witness_to_obj,
)
from .socle import (
    SinkMatrices,
    SocleReport,
    in_socle,
    left_ideal_sum_membership,
    matrix_rep,
    quotient_image,
    socle_equals_algebra,
    socle_generators,
    socle_is_nonzero,
    socle_structure,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "CycleError",
    "CyclePolynomial",
    "CyclicGraphError",
    "Edge",
    "Element",
    "ExprParseError",
    "FieldError",
    "GFElement",
    "Generator",
    "Graph",
    "GraphError",
    "GraphParseError",
    "HedgehogGraph",
    "LeavittAlgebra",
    "MixedContextError",
    "Monomial",
    "Path",
    "PrimeField",
    "QQ",
    "RationalField",
    "ReductionWitness",
    "RelationsReport",
    "ScalarVertex",
    "SinkMatrices",
    "SocleReport",
    "SubsetError",
    "UnknownVertexError",
    "ZeroElementError",
    "condition_L",
    "cycle_has_exit",
    "entry_paths",
    "field_from_selector",
    "hedgehog_graph",
    "hereditary_saturated_closure",
    "in_socle",
    "is_acyclic",
    "is_bifurcation",
    "is_hereditary",
    "is_prime",
    "is_saturated",
    "is_simple",
    "left_ideal_sum_membership",
    "line_points",
    "matrix_rep",
    "nondegeneracy_witness",
    "outcome_element",
    "parse_element",
    "parse_graph",
    "paths_from_by_length",
    "quotient_graph",
    "quotient_image",
    "realify",
    "reduce",
    "require_cycle",
    "simple_cycles",
    "socle_equals_algebra",
    "socle_generators",
    "socle_is_nonzero",
    "socle_structure",
    "special_edges",
    "to_dot",
    "tree",
    "verify_witness",
    "vertex_ideal_minimal",
    "vertices_on_cycles",
    "witness_from_obj",
    "witness_to_obj",
]
