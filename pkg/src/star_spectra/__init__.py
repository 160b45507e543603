"""Star-shaped graphs, exact Coxeter combinatorics, and weighted projection-family representations.

The package decides which weight tuples (alpha, beta, delta, gamma) admit an
irreducible non-degenerate representation by three orthoprojection families
summing to gamma * I, and numerically constructs and verifies those
representations.
"""

from .coxeter import (
    GVector,
    NonDynkinError,
    OrbitEntry,
    OrbitOverflowError,
    UnwindReport,
    char_map,
    coxeter_map,
    enumerate_nondegenerate_dims,
    g_vector,
    orbit_entries,
    reflect,
    simple_vector,
    unwind,
)
from .instances import CATALOG_INSTANCES, instance_graph
from .membership import (
    CATALOG,
    CrossValidationReport,
    MembershipDecision,
    Witness,
    cross_validate,
    decide_catalog,
    decide_generic,
)
from .param_bridge import (
    AlgebraParams,
    DegenerateCharacterError,
    DegenerateDimensionError,
    GenDim,
    ShapeMismatchError,
    algebra_params,
    character_to_params,
    dim_to_generalized,
    generalized_to_dim,
    params_to_character,
    trace_gap,
    weighted_multiplicity_sum,
)
from .rep_builder import (
    GraphRep,
    RankExtractionError,
    SolveResult,
    StarRep,
    VerifyReport,
    commutant_dimension,
    intertwiner_equivalence,
    measure_local_scalars,
    solve_representation,
    star_to_graph,
    starrep_from_json_obj,
    starrep_to_json_obj,
    target_spectra,
    verify,
)
from .star_graph import (
    DynkinClass,
    Parity,
    StarGraph,
    build_star,
    classify,
    positive_root_count,
)

__version__ = "0.1.0"
