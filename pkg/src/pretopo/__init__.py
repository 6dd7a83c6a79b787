"""Finite pre-topological spaces and knowledge spaces.

Families of subsets of a finite universe, closed under union: the open
sets of a pre-topology and the states of a knowledge space are the same
objects. The package builds them, computes closure/interior/boundary
style operators, classifies separation and connectivity, moves between
spaces and quasi-orders, delineates skill multimaps, finds primary item
sets, and audits the underlying theorems over exhaustively enumerated
small spaces.
"""

from .core import (
    ItemSet,
    KnowledgeStructure,
    PreTopology,
    SetFamily,
    Universe,
    distance,
    irreducible_states,
    is_pre_base_for,
    union_closure,
)
from .errors import (
    AxiomViolation,
    BoundExceeded,
    CombinatorialBoundExceeded,
    CoverError,
    EmptyMemberError,
    EmptySubspace,
    NotACover,
    NotAPartition,
    NotAPreBase,
    NotAState,
    NotMinimalPreBase,
    NotQuasiOrdinal,
    NotSurjective,
    PretopoError,
    SchemaError,
    SkillBoundExceeded,
    UniverseOverflow,
)
from .structure import (
    Classification,
    ClosureOperatorTable,
    classify,
    from_closure_operator,
    from_relation,
    is_atom_pre_base,
    is_minimal_pre_base,
)
from .operators import (
    FringeReport,
    boundary,
    closure,
    derived_set,
    fringes,
    interior,
    is_dense,
)
from .separation import (
    SeparationProfile,
    is_completely_discriminative,
    is_normal_property,
    is_regular_property,
    is_t0,
    is_t1,
    is_t2,
    separation_profile,
)
from .connectivity import (
    ChainWitness,
    ConnectednessReport,
    NoChain,
    clopen_sets,
    connectedness,
    find_simple_chain,
    is_connected,
    is_tight_n_connected,
    is_well_graded,
)
from .order import (
    QuasiOrder,
    Reduction,
    atoms_at,
    discriminative_reduction,
    from_quasi_order,
    is_antimatroid,
    is_granular,
    is_quasi_ordinal,
    minimal_state,
    to_quasi_order,
)
from .maps import (
    ChildPretopology,
    MapClassification,
    PointMap,
    child_pretopology,
    classify_map,
    is_pre_closed,
    is_pre_continuous,
    is_pre_continuous_at,
    is_pre_open,
    is_pre_quotient,
    pre_continuity_witness,
    product,
    quotient,
    quotient_projection,
    subspace,
)
from .skills import (
    DelineationReport,
    SkillMultimap,
    delineate,
    is_completely_discriminative_delineation,
    is_delineated_space,
    problem_function,
    star_condition,
)
from .cardinal import (
    MatrixState,
    PrimaryItemsTrace,
    cellularity,
    character,
    density_exact,
    greedy_primary_items,
    matrix_primary_items,
    weight,
)
from .miner import (
    MinerReport,
    audit,
    available_theorems,
    enumerate_spaces,
    reports_to_json,
    sample_spaces,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "BoundExceeded",
    "ChainWitness",
    "ChildPretopology",
    "Classification",
    "ClosureOperatorTable",
    "CombinatorialBoundExceeded",
    "ConnectednessReport",
    "CoverError",
    "DelineationReport",
    "EmptyMemberError",
    "EmptySubspace",
    "FringeReport",
    "ItemSet",
    "KnowledgeStructure",
    "MapClassification",
    "MatrixState",
    "MinerReport",
    "NoChain",
    "NotACover",
    "NotAPartition",
    "NotAPreBase",
    "NotAState",
    "NotMinimalPreBase",
    "NotQuasiOrdinal",
    "NotSurjective",
    "PointMap",
    "PreTopology",
    "PretopoError",
    "PrimaryItemsTrace",
    "QuasiOrder",
    "Reduction",
    "SchemaError",
    "SeparationProfile",
    "SetFamily",
    "SkillBoundExceeded",
    "SkillMultimap",
    "Universe",
    "UniverseOverflow",
    "atoms_at",
    "audit",
    "available_theorems",
    "boundary",
    "cellularity",
    "character",
    "child_pretopology",
    "classify",
    "classify_map",
    "clopen_sets",
    "closure",
    "connectedness",
    "delineate",
    "density_exact",
    "derived_set",
    "discriminative_reduction",
    "distance",
    "enumerate_spaces",
    "find_simple_chain",
    "fringes",
    "from_closure_operator",
    "from_quasi_order",
    "from_relation",
    "greedy_primary_items",
    "interior",
    "irreducible_states",
    "is_antimatroid",
    "is_atom_pre_base",
    "is_completely_discriminative",
    "is_completely_discriminative_delineation",
    "is_connected",
    "is_delineated_space",
    "is_dense",
    "is_granular",
    "is_minimal_pre_base",
    "is_normal_property",
    "is_pre_base_for",
    "is_pre_closed",
    "is_pre_continuous",
    "is_pre_continuous_at",
    "is_pre_open",
    "is_pre_quotient",
    "is_quasi_ordinal",
    "is_regular_property",
    "is_t0",
    "is_t1",
    "is_t2",
    "is_tight_n_connected",
    "is_well_graded",
    "matrix_primary_items",
    "minimal_state",
    "pre_continuity_witness",
    "problem_function",
    "product",
    "quotient",
    "quotient_projection",
    "reports_to_json",
    "sample_spaces",
    "separation_profile",
    "subspace",
    "to_quasi_order",
    "union_closure",
    "weight",
]
