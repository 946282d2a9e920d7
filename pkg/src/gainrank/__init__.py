"""gainrank: rank and inertia of complex unit gain graphs.

Build gain graphs (cycles, two-cycle bases, the G1..G22 catalog), compute
the inertia of their Hermitian adjacency matrices by two independent
algorithms, classify gain cycles into the five types that drive the
closed-form rank rules, and verify every rank statement against numeric
oracles with the seeded harness in :mod:`gainrank.verify`.
"""

from .catalog import (
    BASE_IDS,
    CATALOG_EDGES,
    CATALOG_IDS,
    PENDANT_IDS,
    catalog_edges,
    catalog_graph,
    catalog_order,
    exact_catalog_id,
    match_catalog,
)
from .errors import (
    GainMismatch,
    GainRankError,
    HasTwins,
    InternalInconsistency,
    InvalidBase,
    InvalidGain,
    NoConvergence,
    NotACycle,
    NotAPendant,
    NotBicyclic,
    NotConnected,
    NotHermitian,
    NotInCatalog,
    ParseError,
    TooSmall,
    TypeParityError,
    UnknownCatalogId,
    UnknownClaim,
    VertexOutOfRange,
)
from .fileformat import emit, parse
from .gaingraph import (
    BaseDescriptor,
    CycleWalk,
    GainGraph,
    as_unit_gain,
    attach_pendants,
    build_cycle,
    build_infinity,
    build_theta,
    components,
    cycle_walk,
    delete_vertices,
    disjoint_union,
    empty_graph,
    gauge_transform,
    induced_subgraph,
    is_connected,
    make_gain,
    path_graph,
    relabel,
    star_graph,
)
from .inertia import (
    DEFAULT_TOL,
    InertiaTriple,
    adjacency,
    graph_inertia,
    inertia_congruence,
    inertia_eigen,
    rank,
)
from .predictors import (
    TABLE1,
    TABLE2,
    ConditionReport,
    RankPrediction,
    cycle_inertia_formula,
    evaluate_table1,
    evaluate_table2,
    infinity_rank_lower_bound,
    predict_rank,
    rank_cycle_with_graph,
    theta_rank_lower_bound,
)
from .structure import (
    BaseExtraction,
    CycleClassification,
    CycleType,
    PendantPairDeletion,
    ReductionTrace,
    TwinDeletion,
    bicyclic_base,
    classify_cycle,
    cycle_type,
    delete_pendant_pair,
    find_pendant,
    fundamental_cycles,
    pendant_twins,
    reduce,
)
from .verify import (
    Report,
    TrialSpec,
    forced_cycle,
    forward_witness,
    iff_fuzz_table,
    list_claims,
    sample_unit_gain,
    sharpness_witness_infinity,
    sharpness_witness_theta,
    verify_claim,
    verify_transformation_lemma,
)

__version__ = "0.1.0"
