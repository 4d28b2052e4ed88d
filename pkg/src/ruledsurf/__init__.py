"""Exact-arithmetic toolkit for bundles on Hirzebruch and ruled surfaces.

Four layers: the numerical intersection ring of a ruled surface
(geometry), line-bundle cohomology on Hirzebruch surfaces and the counts
built from it (cohomology), the calculus of splitting types on the
projective line (splitting), and numerical vector-bundle operations
including jumping-fiber counts with independent oracles (bundles).  The
verify module runs the cross-checking property grids; cli exposes
everything on the command line.
"""

from .bundles import (
    BundleNumerics,
    ExtensionData,
    GrrReport,
    destabilizes,
    euler_char_bundle,
    extension_chern,
    extension_data_from_chern,
    fiber_degree,
    grr_verify,
    jumping_count,
    jumping_count_chi_oracle,
    pushforward_degree,
    slope,
    twist,
)
from .cohomology import (
    CohomologyTable,
    ConormalData,
    PositiveGenusError,
    SplitBundle,
    StabilizationError,
    check_conormal,
    conormal_vanishing,
    endomorphism_growth,
    euler_char,
    h_line,
    h_split_end,
    moduli_dimension_split,
    serre_dual,
    stabilization_index,
)
from .geometry import (
    FIBER,
    SECTION,
    ZERO,
    CurveCycle,
    CycleClass,
    DivisorClass,
    SurfaceGeometry,
    canonical_class,
    chern_character,
    curve_mul,
    cycle_mul,
    intersect,
    is_ample,
    is_good_polarization,
    min_good_twist,
    pushforward_to_curve,
    todd_curve,
    todd_surface,
)
from .splitting import (
    SplittingType,
    enumerate_types,
    formal_lift_obstructions,
    h1_end,
    is_rigid,
    jumping_type,
    rigid_type,
    semicontinuity_oracle,
    specialization_chain,
    specializes,
)

__version__ = "0.1.0"
