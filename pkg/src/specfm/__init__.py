"""Exact spectral-data toolkit for sheaves on elliptic surfaces.

Computes and cross-checks, in exact arithmetic: the invariant-level relative
Fourier-Mukai transform of Chern triples, polarisation walls and suitability,
spectral divisors of fibrewise bundle data over finite fields, stability of
the resulting pure-dimension-one torsion sheaves, and the dimension
identities of the moduli fibration.
"""

from .chern_fm import (
    ChernTriple,
    FibrePair,
    GeneratorObject,
    GeneratorTag,
    fibre_pair_transform,
    fm_transform_ch,
    mukai_nahm_ch,
    slope,
    verify_diagram_generators,
)
from .elliptic_fibre import (
    INFINITY,
    CurvePoint,
    EllipticCurve,
    FibreBundleClass,
    curve_points,
    group_order,
    h0_h1,
    is_regular,
    jordan_holder_multiplicity,
    point_add,
    point_mul,
    point_neg,
)
from .lattice import (
    ABELIAN,
    FIBRE,
    K3,
    SIGMA,
    DivisorClass,
    SurfaceKind,
    SurfaceModel,
    WallSet,
    arithmetic_genus,
    find_suitable,
    intersect,
    is_ample_model,
    is_suitable,
    linear_system_dim,
    linear_system_dims,
    self_intersection,
    wall_set,
)
from .moduli import (
    ModuliDescriptor,
    double_fibration_check,
    fibration_dimensions,
    lagrangian_check,
    nahm_bijection_check,
)
from .simpson import (
    StabilityVerdict,
    TorsionSheafModel,
    Verdict,
    hilbert_polynomial,
    irreducible_shortcut,
    reduced_hilbert_constant,
    stability_verdict,
    subsheaf_candidates,
    transform_classification,
)
from .spectral import (
    ProductFamily,
    SheafDescription,
    SpectralDivisor,
    construct_from_spectral,
    spectral_divisor,
    wit_classify,
)

__version__ = "0.1.0"
