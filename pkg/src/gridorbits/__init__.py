"""Exact engine for Borel orbits of grid-quiver representation tuples and
linear degenerations of type-A Schubert varieties."""

from .decomposition import (
    RankVector,
    SolveFailure,
    decompose,
    flat_intersections,
    full_vector,
    heights_rank_vector,
    independence_check,
    inter_order,
    rank_vector,
    same_rank_vector,
)
from .degeneration_lab import (
    DEFAULT_BUDGET,
    DEFAULT_QS,
    DimEstimate,
    FitFailure,
    FlatScanResult,
    FlatScanRow,
    HomReport,
    InfeasibleSize,
    NoPointFound,
    PointCountTable,
    estimate_dim,
    euler_form,
    fit_dimension,
    flat_scan,
    hom_report,
    point_counts,
    rep_variety_count,
    subrep_count,
)
from .exact_linalg import (
    Matrix,
    b_reduce,
    compose_window,
    image_meet_coord_dim,
    inverse_upper_triangular,
    is_upper_triangular,
    principal_block,
    rank,
    sw_rank,
)
from .fields import GF, QQ, GaloisField, RationalField, is_prime_power
from .grid_quiver import (
    Decomposition,
    EmptySupport,
    GridQuiverError,
    GridShape,
    HeightOutOfRange,
    HeightVector,
    InvalidDecomposition,
    MapTuple,
    NonContiguousSupport,
    NonMonotone,
    SizeMismatch,
    TriangularityViolation,
    assemble_canonical,
    borel_act,
    column_heights,
    dims_of_heights,
    enumerate_indecomposables,
    full_dim_grid,
    identity_tuple,
    make_point,
    validate_heights,
    windows,
    zero_tuple,
)
from .orbit_poset import (
    CountReport,
    OrbitNode,
    OrbitPoset,
    bell,
    build_poset,
    count_report,
    enumerate_orbits,
    export_dot,
    f2_distinct_count,
    matchings_to_decomposition,
    order_matchings,
)
from .parametrizations import (
    InvalidTable,
    Order,
    ReconstructInvalid,
    SWArray,
    array_leq,
    compare,
    degenerates,
    pivots,
    reconstruct,
    same_orbit,
    sw_array,
    sw_table,
    validate_array_inequalities,
)
from .schubert import (
    contains_pattern,
    e_grid,
    is_smooth,
    length,
    r_grid,
    target_dims,
)

__all__ = [name for name in dir() if not name.startswith("_")]
