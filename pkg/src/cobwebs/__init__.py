"""Cobweb posets, orderable DAGs, and two-chain realizers.

The package answers one question in several guises: when is a DAG the
Hasse diagram of a partial order whose dimension is at most two, and
how do you exhibit the two total orders that prove it?  Cobweb posets,
built layer by layer from a sequence of level sizes, are the motivating
family; every one of them carries an explicit realizer.
"""

from .cobweb import (
    CobwebPoset,
    ConstantSequence,
    ExplicitSequence,
    FibonacciSequence,
    LevelOutOfRangeError,
    LevelSequence,
    NonPositiveSizeError,
    SequenceError,
    SequenceSpecError,
    build_cobweb,
    parse_sequence_spec,
    strict_order_relation,
)
from .graphs import (
    Arc,
    Chain,
    CheckResult,
    CyclicInputError,
    Digraph,
    NotLinearExtensionError,
    Relation,
    Vertex,
    VertexSetMismatchError,
    is_acyclic,
    is_admissible,
    is_linear_extension,
    is_regular,
    iter_topological_orders,
    reachability,
    topological_order,
    transitive_reduction,
)
from .oracle import (
    FinitePoset,
    TooLargeError,
    brute_force_dim_le_2,
    enumerate_linear_extensions,
    order_dimension,
)
from .realizers import (
    DEFAULT_SEARCH_BUDGET,
    ConjugateCycleError,
    NoAdmissibleChain,
    NonTransitiveConjugate,
    NotRegular,
    Orderable,
    OrderabilityVerdict,
    Realizer,
    ascending_chain,
    conjugate_chain,
    decide_orderable,
    descending_chain,
    intersect_chains,
    verify_realizer,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "Chain",
    "CheckResult",
    "CobwebPoset",
    "ConjugateCycleError",
    "ConstantSequence",
    "CyclicInputError",
    "DEFAULT_SEARCH_BUDGET",
    "Digraph",
    "ExplicitSequence",
    "FibonacciSequence",
    "FinitePoset",
    "LevelOutOfRangeError",
    "LevelSequence",
    "NoAdmissibleChain",
    "NonPositiveSizeError",
    "NonTransitiveConjugate",
    "NotLinearExtensionError",
    "NotRegular",
    "Orderable",
    "OrderabilityVerdict",
    "Realizer",
    "Relation",
    "SequenceError",
    "SequenceSpecError",
    "TooLargeError",
    "Vertex",
    "VertexSetMismatchError",
    "ascending_chain",
    "brute_force_dim_le_2",
    "build_cobweb",
    "conjugate_chain",
    "decide_orderable",
    "descending_chain",
    "enumerate_linear_extensions",
    "intersect_chains",
    "is_acyclic",
    "is_admissible",
    "is_linear_extension",
    "is_regular",
    "iter_topological_orders",
    "order_dimension",
    "parse_sequence_spec",
    "reachability",
    "strict_order_relation",
    "topological_order",
    "transitive_reduction",
    "verify_realizer",
]
