"""Exact lattice arithmetic for rational elliptic surfaces.

The package mechanizes the integer bookkeeping behind rank-jump
constructions: intersection theory on the blow-up lattice of the plane at
nine points, quadratic Cremona reduction with replayable certificates,
construction and search of genus-zero pencils mapping two-to-one onto the
base, singular-fibre accounting under quadratic base change, and the
Mordell-Weil height pairing with exact local corrections.
"""

from .base_change import (
    BranchLocus,
    FibreConfiguration,
    FibreProductKind,
    KodairaFibre,
    SurfaceClass,
    base_changed_configuration,
    classify_quadratic_base_change,
    euler_total,
    fibre_product_genus,
    transform_fibre,
)
from .cremona import (
    CremonaStep,
    ReductionCertificate,
    is_connected_class,
    quadratic_transform,
    reduce_to_line,
)
from .heights import (
    KummerInputs,
    ReducibleFibreData,
    SectionIntersections,
    cartan_matrix,
    contribution,
    enumerate_section_classes,
    height_pairing,
    invert_exact,
    kummer_bound,
    multiplication_pullback_degree,
)
from .pencils import (
    OrbitStructure,
    PencilReport,
    PencilSpec,
    Unsupported,
    construct_pencils,
    degree_to_base_spec,
    dim_lower_bound,
    genus_upper_bound,
    reduce_orbit_config,
    search_pencils,
    to_numerical_class,
    verify,
)
from .picard_lattice import (
    CANONICAL,
    FIBRE,
    LINE,
    NumericalClass,
    arithmetic_genus,
    degree_to_base,
    exceptional,
    intersect,
    mw_rank_bound,
    unirationality_check,
)

__version__ = "0.1.0"

__all__ = [
    "BranchLocus",
    "CANONICAL",
    "CremonaStep",
    "FIBRE",
    "FibreConfiguration",
    "FibreProductKind",
    "KodairaFibre",
    "KummerInputs",
    "LINE",
    "NumericalClass",
    "OrbitStructure",
    "PencilReport",
    "PencilSpec",
    "ReducibleFibreData",
    "ReductionCertificate",
    "SectionIntersections",
    "SurfaceClass",
    "Unsupported",
    "arithmetic_genus",
    "base_changed_configuration",
    "cartan_matrix",
    "classify_quadratic_base_change",
    "construct_pencils",
    "contribution",
    "degree_to_base",
    "degree_to_base_spec",
    "dim_lower_bound",
    "enumerate_section_classes",
    "euler_total",
    "exceptional",
    "fibre_product_genus",
    "genus_upper_bound",
    "height_pairing",
    "intersect",
    "invert_exact",
    "is_connected_class",
    "kummer_bound",
    "multiplication_pullback_degree",
    "mw_rank_bound",
    "quadratic_transform",
    "reduce_orbit_config",
    "reduce_to_line",
    "search_pencils",
    "to_numerical_class",
    "transform_fibre",
    "unirationality_check",
    "verify",
]
