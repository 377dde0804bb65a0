"""Exact-arithmetic weighted projective invariants of colored point configurations."""

from .configuration import (
    Configuration,
    ConfigurationError,
    DegreeReport,
    ProjPoint,
    RTuple,
    Subspace,
    build_configuration,
    configuration_to_json,
    load_configuration,
    parse_configuration,
    point_degree,
    span_of,
    subspace_degree,
    validate_h,
)
from .invariant import (
    BasisChoice,
    ChartError,
    InvariantValue,
    LinearMorphism,
    MorphismError,
    NotHConfigurationError,
    TrianglePattern,
    apply_morphism,
    bracket,
    cross_ratio,
    eves_invariant,
    eves_invariant_with_choices,
    signed_length_bracket,
    triangle_ratio,
)
from .numtheory import (
    CongruenceSystem,
    crt_solve,
    ext_gcd,
    integer_nth_root,
    rational_nth_roots,
    root_power_count,
)
from .reconstruct import (
    CompareReport,
    ReconstructionVector,
    check_reconstruction_identity,
    compare,
    reconstruction_vector,
    restrict_pair,
    unit_weight_expansion,
)
from .wps import (
    AxisProjectionSpec,
    FieldKind,
    UndefinedPointError,
    Weight,
    WeightedPoint,
    apply_axis_projection,
    canonical_axis_projection,
    factor_through_h,
    is_reconstructible,
    nonreconstructible_witness,
    product_map,
    reduce_weight,
    wps_equivalent,
)

__version__ = "0.1.0"
