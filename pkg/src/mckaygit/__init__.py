"""Exact GIT chamber machinery for framed McKay quiver varieties.

The package computes, over exact rationals throughout: ADE root data and
the framed McKay lattice, the wall hyperplane arrangement on the stability
space with chamber enumeration and counting, the Namikawa Weyl group
action with reduction to its fundamental domain, canonical decompositions
and stratum labels, wall classification with etale-local model data and a
semismallness audit, and the linearisation maps onto the Mori chamber
decomposition of the movable cone.
"""

from .arrangement import (
    Chamber,
    Hyperplane,
    OnWall,
    StabilityParameter,
    build_arrangement,
    chamber_facets,
    chamber_touches_delta_wall,
    count_chambers_formula,
    count_chambers_total,
    enumerate_chambers_in_F,
    locate,
    reference_chamber_minus,
    reference_chamber_plus,
    slice_polygons,
    stability_from_affine,
    stability_from_framed,
)
from .decomposition import (
    CanonicalDecomposition,
    ParameterClassification,
    RepresentationType,
    canonical_decomposition,
    classify_parameter,
    r_theta_plus,
    representation_types,
    sigma_theta,
    sigma_theta_contains,
)
from .errors import (
    McKayGitError,
    NotEffectiveError,
    ResourceCapError,
    ValidationError,
    WallPointError,
)
from .framed import (
    FramedLattice,
    cartan_pairing,
    enumerate_positive_roots_below,
    framed_lattice,
    is_positive_root,
    p_form,
)
from .mori import (
    IsomorphismResult,
    MoriReport,
    NefConeModel,
    aw_coordinates,
    aw_transform,
    linearisation_L,
    linearisation_LF,
    models_isomorphic,
    mori_chamber_report,
    movable_cone_facets,
)
from .root_data import RootSystemData, build_root_system, involution_iota
from .walls import (
    ExtGraphModel,
    SemismallReport,
    WallInfo,
    adjacent_chamber_parameters,
    classify_wall,
    contraction_type,
    ext_graph_model,
    pick_generic_wall_point,
    semismall_audit,
)
from .weyl import (
    WeylElement,
    apply,
    apply_minus_iota,
    compose,
    generator,
    generator_labels,
    identity_element,
    inverse,
    minus_iota_element,
    reduce_to_F,
    weyl_group,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
