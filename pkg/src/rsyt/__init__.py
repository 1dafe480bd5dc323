"""Exact tools for outer-sum realizability of standard Young tableaux,
sorting networks from planar point sweeps, and permutahedron slices.
"""

from .enumeration import (
    BoundsReport,
    EnumerationReport,
    bounds,
    enumerate_realizable,
    enumerate_single_row_extensions,
    extension_count_formula,
    fixed_witness_extensions,
    hyperplane_count,
    region_count_crosscheck,
)
from .errors import (
    BadInput,
    CapExceeded,
    DimensionMismatch,
    EmptySlice,
    FaceMissesHyperplane,
    InvalidTableau,
    NotABijection,
    NotGeneric,
    NotIncreasing,
    NotRealizableError,
    RsytError,
)
from .networks import (
    PointConfiguration,
    RealizabilityVerdict,
    SortingNetwork,
    enumerate_networks,
    network_count,
    network_of_points,
    saturation_enumerate,
    staircase_lower_recurrence,
    staircase_recurrence_factor,
    staircase_upper_bound,
    witness_search,
)
from .realizability import (
    FarkasCertificate,
    FeasibilityResult,
    OuterSumWitness,
    StrictSystem,
    TabooCertificate,
    decide_realizable,
    find_taboo_certificate,
    strict_system_of,
    survey_taboo_completeness,
    tableau_of_outer_sum,
    verify_farkas,
    verify_taboo,
    verify_witness,
)
from .slices import (
    Flag,
    LabeledLatticePath,
    NormalConeDescription,
    SliceVertex,
    cone_contains,
    edge_oracle,
    face_dimension,
    lattice_path_of_vertex,
    min_max_prefix,
    normal_cone,
    slice_edges,
    slice_vertices,
    vertex_count_formula,
    vertex_neighbors,
)
from .tableaux import (
    Shape,
    Tableau,
    catalan,
    hook_length_count,
    iterate_syt,
    validate_tableau,
)

__version__ = "0.1.0"
