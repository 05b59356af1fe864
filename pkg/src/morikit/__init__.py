"""Exact birational-geometry computations for GIT quotients of points on the line."""

from .chambers import (
    ChamberReport,
    FlipStage,
    RayReport,
    Wall,
    eff_cone,
    eff_generators,
    fano_chamber,
    fano_cone,
    fano_locus,
    flip_sequence,
    flip_type,
    locate_divisor,
    mov_cone,
    moving_curve_rays,
    ne_extremal_rays,
    nef_cone,
    walls,
)
from .cones import (
    Classification,
    HCone,
    Position,
    ResourceLimitExceeded,
    VCone,
    classify_point,
    dual,
    h_to_v,
    v_to_h,
)
from .exact import QPolynomial, binomial_poly, kernel_basis, rank
from .facts import FactSheet, facts
from .linsys import (
    HilbertData,
    LinearSystem,
    hilbert,
    hilbert_sigma_even,
    hilbert_sigma_odd,
    k_value,
    kumar_system,
    linear_expected_dim,
    linear_virtual_dim,
    mu_system,
    section_space_dim_odd,
    sigma_system,
)
from .picard import (
    BlowupModel,
    CurveClass,
    DivisorClass,
    anticanonical,
    cremona_pushforward,
    pair,
    picard_rank_stage,
)
from .weights import (
    Polarization,
    WeightVector,
    phi,
    polarization_from_weights,
    reduction_admissible,
    weight_wall_sides,
    weights_from_polarization,
)

__version__ = "0.1.0"
