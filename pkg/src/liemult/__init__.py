"""Exact weight multiplicities of simple Lie algebra representations."""
from .rootsystem import (
    InternalConsistencyError,
    LieType,
    RootSystem,
    a_type_orthogonal_coords,
    build_root_system,
    coroot_pairing,
    inner_product,
    root_system,
)
from .weights import (
    dominant_representative,
    dominant_weights_below,
    is_dominant,
    reflect,
    root_coordinates,
    subdominant_weights,
    weyl_group_order,
    weyl_orbit_size,
)
from .multiplicity import (
    MultiplicityTable,
    WeightProfile,
    a_type_dimension_product,
    freudenthal_multiplicity,
    max_multiplicity,
    multiplicity_table,
    weight_count_profile,
    weyl_dimension,
)
from .kostant import kostant_multiplicity_oracle

__version__ = "0.1.0"
