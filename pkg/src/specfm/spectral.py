"""Spectral divisors of fibrewise bundle families and the marked-point constructor.

A family on the product of two elliptic curves that is constant along the
base restricts to the same degree-0 bundle on every fibre.  The spectral
divisor collects the points of the dual fibre where the twisted fibrewise
cohomology jumps: the scan is exhaustive over the rational points, so the
computed support is the jump locus by definition, not by prediction.

Richer spectral supports (several components with marked-point degrees)
enter through ``construct_from_spectral``, which assembles the torsion-sheaf
model that the stability engine consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elliptic_fibre import (
    CurvePoint,
    EllipticCurve,
    FibreBundleClass,
    curve_points,
    h0_h1,
    jordan_holder_multiplicity,
    on_curve,
    point_neg,
)
from .lattice import DivisorClass, SurfaceModel, arithmetic_genus
from .simpson import TorsionSheafModel, euler_characteristic

__all__ = [
    "ProductFamily",
    "SpectralDivisor",
    "MarkedConstruction",
    "WIT0",
    "WIT1",
    "SheafDescription",
    "spectral_divisor",
    "wit_classify",
    "construct_from_spectral",
]


@dataclass(frozen=True)
class ProductFamily:
    """Fibrewise-constant bundle data on a product of two elliptic curves.

    ``fibre_class`` is the restriction to any fibre; its block points live on
    the fibre curve, identified with its own dual through the origin.
    """

    base_curve: EllipticCurve
    fibre_curve: EllipticCurve
    fibre_class: FibreBundleClass

    def __post_init__(self) -> None:
        for q, _ in self.fibre_class.blocks:
            if not on_curve(q, self.fibre_curve):
                raise ValueError(f"block point {q!r} is not on the fibre curve")

    @property
    def rank(self) -> int:
        return self.fibre_class.rank

    def chern_triple_shape(self) -> tuple[int, int, int]:
        """Invariant triple ``(rank, 0, 0)`` of a constant degree-0 family."""
        return (self.rank, 0, 0)


@dataclass(frozen=True)
class SpectralDivisor:
    """Jump locus with multiplicities, split into horizontal and vertical parts.

    Horizontal entries ``(w_hat, mult)`` are base-direction components in the
    section class; vertical entries ``(v, mult)`` are full fibres.  The total
    class is ``(sum horizontal mult) * sigma_hat + (sum vertical mult) * f_hat``.
    """

    horizontal: tuple[tuple[CurvePoint, int], ...]
    vertical: tuple[tuple[CurvePoint, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "horizontal",
            tuple(sorted(self.horizontal, key=lambda hm: hm[0].sort_key())),
        )
        object.__setattr__(
            self,
            "vertical",
            tuple(sorted(self.vertical, key=lambda vm: vm[0].sort_key())),
        )

    def divisor_class(self) -> DivisorClass:
        return DivisorClass(
            sum(m for _, m in self.horizontal),
            sum(m for _, m in self.vertical),
        )

    def support_points(self) -> tuple[CurvePoint, ...]:
        return tuple(pt for pt, _ in self.horizontal)


def spectral_divisor(family: ProductFamily) -> SpectralDivisor:
    """Exhaustive jump-locus scan over the rational points of the dual fibre.

    A point enters the horizontal part when the twisted fibrewise cohomology
    is nonzero there, with multiplicity the total block rank detected at it;
    constant families have no vertical part.
    """
    W = family.fibre_curve
    horizontal = []
    for pt in curve_points(W):
        _, h1 = h0_h1(family.fibre_class, pt, W)
        if h1:
            mult = jordan_holder_multiplicity(
                family.fibre_class, point_neg(pt, W)
            )
            horizontal.append((pt, mult))
    return SpectralDivisor(horizontal=tuple(horizontal))


WIT0 = 0
WIT1 = 1


@dataclass(frozen=True)
class SheafDescription:
    """The facts about a sheaf that decide its transform concentration."""

    torsion_free: bool
    has_semistable_fibre_restriction: bool
    zero_dimensional_support: bool = False


def wit_classify(desc: SheafDescription) -> int | None:
    """Homological degree in which the transform of the sheaf concentrates.

    A skyscraper transforms in degree 0; a torsion-free sheaf that is
    semistable on some fibre transforms in degree 1 (the structure sheaf
    being the basic case).  Anything else is refused with ``None`` rather
    than classified on insufficient data.
    """
    if desc.zero_dimensional_support:
        return WIT0
    if desc.torsion_free and desc.has_semistable_fibre_restriction:
        return WIT1
    return None


@dataclass(frozen=True)
class MarkedConstruction:
    """Validated input for building a torsion-sheaf model from a spectral curve.

    ``components`` pairs each support component class with its adjunction
    genus; ``degrees`` counts the marked points placed on each component,
    which must total ``g(D) - 1`` and stay away from the nodes; the extension
    class glueing the marked points must be nonzero on each factor for the
    result to be a line bundle on the whole support.
    """

    components: tuple[tuple[DivisorClass, int], ...]
    incidence: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    nonzero_on_each_factor: bool


def construct_from_spectral(
    surface: SurfaceModel,
    components: list[DivisorClass],
    degrees: list[int],
    incidence: list[list[int]] | None = None,
    marked_points_valid: bool = True,
    nonzero_on_each_factor: bool = True,
) -> TorsionSheafModel:
    """Build the torsion-sheaf model of a marked spectral curve.

    Checks the degree budget (``sum(degrees) = g(total) - 1``), the caller's
    assertion that marked points avoid the nodes, and that the extension
    class is nonzero on each factor; the resulting model always has Euler
    characteristic zero, so its reduced polynomial is exactly ``n``.
    """
    if len(components) != len(degrees):
        raise ValueError("one degree per component is required")
    if not components:
        raise ValueError("at least one component is required")
    if any(d < 0 for d in degrees):
        raise ValueError("marked-point degrees must be nonnegative")
    if not marked_points_valid:
        raise ValueError("marked points must avoid the nodes of the support")
    if not nonzero_on_each_factor:
        raise ValueError(
            "extension class vanishing on a factor does not glue to a line bundle"
        )
    total = DivisorClass(
        sum(c.a for c in components), sum(c.b for c in components)
    )
    genus = arithmetic_genus(total, surface)
    if sum(degrees) != genus - 1:
        raise ValueError(
            f"degree sum {sum(degrees)} must equal g - 1 = {genus - 1}"
        )
    model = TorsionSheafModel(
        surface=surface,
        components=tuple(zip(components, degrees)),
        incidence=(
            tuple(tuple(row) for row in incidence) if incidence is not None else None
        ),
        reduced=True,
    )
    assert euler_characteristic(model) == 0
    return model
