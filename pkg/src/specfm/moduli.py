"""Dimension bookkeeping for the moduli fibration over spectral curves.

The moduli space of rank-``r`` charge-``k`` objects fibres over the family
of spectral curves in the class ``k*f_hat + r*sigma_hat``; the fibre over a
curve is a torsor of its degree ``g - 1`` line bundles, of dimension the
arithmetic genus.  The identities checked here are exact integers: base and
fibre each have dimension ``g`` and the total is ``2g``, matching the closed
forms ``2(rk - r^2 + 1)`` (K3) and ``2rk + 2`` (abelian product).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chern_fm import ChernTriple, mukai_nahm_ch
from .lattice import (
    DivisorClass,
    SurfaceModel,
    arithmetic_genus,
    linear_system_dims,
)

__all__ = [
    "ModuliDescriptor",
    "FibrationDimensions",
    "spectral_support_class",
    "fibration_dimensions",
    "lagrangian_check",
    "nahm_bijection_check",
    "double_fibration_check",
]


@dataclass(frozen=True)
class ModuliDescriptor:
    """Surface flavour plus rank ``r >= 2`` and charge ``k >= 2``."""

    surface: SurfaceModel
    r: int
    k: int

    def __post_init__(self) -> None:
        if self.r < 2 or self.k < 2:
            raise ValueError("nonempty moduli need rank and charge both at least 2")


@dataclass(frozen=True)
class FibrationDimensions:
    base_dim: int
    fibre_dim: int
    genus: int
    total_dim: int


def spectral_support_class(M: ModuliDescriptor) -> DivisorClass:
    """The class ``k*f_hat + r*sigma_hat`` of the spectral curves."""
    return DivisorClass(M.r, M.k)


def fibration_dimensions(M: ModuliDescriptor) -> FibrationDimensions:
    d = spectral_support_class(M)
    genus = arithmetic_genus(d, M.surface)
    base = linear_system_dims(d, M.surface).base_dim
    return FibrationDimensions(
        base_dim=base, fibre_dim=genus, genus=genus, total_dim=base + genus
    )


def lagrangian_check(M: ModuliDescriptor) -> bool:
    """Half-dimensionality of the fibres: base and fibre dimensions agree."""
    dims = fibration_dimensions(M)
    return dims.base_dim == dims.fibre_dim


def nahm_bijection_check(M: ModuliDescriptor) -> bool:
    """Rank/charge swap preserves the total dimension on the product torus.

    Also checks that the swap on Chern triples is an involution.  Stated for
    the flat 4-torus only; K3 input is an error.
    """
    if not M.surface.is_abelian:
        raise ValueError("the rank/charge swap statement is torus-only")
    here = fibration_dimensions(M).total_dim
    there = fibration_dimensions(
        ModuliDescriptor(M.surface, M.k, M.r)
    ).total_dim
    triple = ChernTriple(M.r, DivisorClass(0, 0), Fraction(-M.k))
    involution = mukai_nahm_ch(mukai_nahm_ch(triple)) == triple
    return here == there and involution


def double_fibration_check(M: ModuliDescriptor) -> bool:
    """The two fibration structures on the product torus have equal base dimension.

    The second projection sees the swapped class ``k*sigma_hat + r*f_hat``.
    """
    if not M.surface.is_abelian:
        raise ValueError("the double fibration exists on the product torus only")
    first = linear_system_dims(DivisorClass(M.r, M.k), M.surface).base_dim
    second = linear_system_dims(DivisorClass(M.k, M.r), M.surface).base_dim
    return first == second
