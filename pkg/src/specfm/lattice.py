"""Exact intersection arithmetic on the rank-2 section/fibre lattice.

An elliptic surface with a section is modelled here by the sublattice of its
Neron-Severi group spanned by the section class ``sigma`` and the fibre class
``f``, with Gram matrix ``[[sigma^2, 1], [1, 0]]``.  Two flavours are
supported: an elliptic K3 with a section (``sigma^2 = -2``) and a product of
two elliptic curves (``sigma^2 = 0``).  The relative Jacobian of either
surface carries the same lattice on the basis ``(sigma_hat, f_hat)``, so the
one model serves both sides of the transform.

All operations are exact integer arithmetic on immutable values; everything
in this module is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

__all__ = [
    "SurfaceKind",
    "SurfaceModel",
    "DivisorClass",
    "LinearSystemDims",
    "WallSet",
    "K3",
    "ABELIAN",
    "SIGMA",
    "FIBRE",
    "intersect",
    "self_intersection",
    "arithmetic_genus",
    "linear_system_dims",
    "linear_system_dim",
    "is_ample_model",
    "wall_set",
    "is_suitable",
    "find_suitable",
]


class SurfaceKind(str, Enum):
    K3_WITH_SECTION = "k3"
    ABELIAN_PRODUCT = "abelian"


_SIGMA_SELF = {SurfaceKind.K3_WITH_SECTION: -2, SurfaceKind.ABELIAN_PRODUCT: 0}
_CHI_O = {SurfaceKind.K3_WITH_SECTION: 2, SurfaceKind.ABELIAN_PRODUCT: 0}


@dataclass(frozen=True)
class SurfaceModel:
    """Rank-2 lattice model of an elliptic surface with a section.

    ``sigma_self`` and ``chi_structure_sheaf`` are determined by ``kind``;
    no other values are representable.
    """

    kind: SurfaceKind
    sigma_self: int = field(init=False)
    chi_structure_sheaf: int = field(init=False)

    def __post_init__(self) -> None:
        kind = SurfaceKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "sigma_self", _SIGMA_SELF[kind])
        object.__setattr__(self, "chi_structure_sheaf", _CHI_O[kind])

    @property
    def is_k3(self) -> bool:
        return self.kind is SurfaceKind.K3_WITH_SECTION

    @property
    def is_abelian(self) -> bool:
        return self.kind is SurfaceKind.ABELIAN_PRODUCT


K3 = SurfaceModel(SurfaceKind.K3_WITH_SECTION)
ABELIAN = SurfaceModel(SurfaceKind.ABELIAN_PRODUCT)


@dataclass(frozen=True)
class DivisorClass:
    """Integral class ``a*sigma + b*f``."""

    a: int
    b: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b)

    def __rmul__(self, n: int) -> "DivisorClass":
        return DivisorClass(n * self.a, n * self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __repr__(self) -> str:
        return f"DivisorClass({self.a}, {self.b})"


SIGMA = DivisorClass(1, 0)
FIBRE = DivisorClass(0, 1)


def intersect(d1: DivisorClass, d2: DivisorClass, surface: SurfaceModel) -> int:
    """Intersection pairing of two classes: ``a1*a2*sigma^2 + a1*b2 + a2*b1``."""
    return d1.a * d2.a * surface.sigma_self + d1.a * d2.b + d2.a * d1.b


def self_intersection(d: DivisorClass, surface: SurfaceModel) -> int:
    return intersect(d, d, surface)


def arithmetic_genus(d: DivisorClass, surface: SurfaceModel) -> int:
    """Adjunction genus ``D^2/2 + 1``.

    Both surface kinds have trivial canonical class, and every class on the
    lattice has even self-intersection, so the result is an exact integer.
    """
    sq = self_intersection(d, surface)
    return sq // 2 + 1


@dataclass(frozen=True)
class LinearSystemDims:
    """Dimension bookkeeping for the family of curves in a class.

    ``h0`` is the section count ``D^2/2 + chi(O)``.  On the K3 the family is
    the linear system itself, of dimension ``h0 - 1``.  On the abelian
    product the curves are parametrised by the total space of a projective
    bundle over the dual surface: fibre dimension ``h0 - 1`` plus 2.  In both
    cases ``base_dim = D^2/2 + 1``.
    """

    h0: int
    projectivization_dim: int
    base_dim: int


def linear_system_dims(d: DivisorClass, surface: SurfaceModel) -> LinearSystemDims:
    # effective model cone: nonnegative combination of the section and fibre,
    # the two effective generators of the lattice
    if d.a < 0 or d.b < 0 or d.is_zero():
        raise ValueError(f"{d!r} is not effective in the model cone")
    half = self_intersection(d, surface) // 2
    h0 = half + surface.chi_structure_sheaf
    if surface.is_k3:
        return LinearSystemDims(h0=h0, projectivization_dim=h0 - 1, base_dim=half + 1)
    return LinearSystemDims(h0=h0, projectivization_dim=h0 - 1, base_dim=(h0 - 1) + 2)


def linear_system_dim(d: DivisorClass, surface: SurfaceModel) -> int:
    """Dimension of the parameter space of curves in the class (both kinds: ``D^2/2 + 1``)."""
    return linear_system_dims(d, surface).base_dim


def is_ample_model(L: DivisorClass, surface: SurfaceModel) -> bool:
    """Model positivity cone: ``L^2 > 0``, ``L.f > 0`` and ``L.sigma > 0``.

    This is a model-level stand-in for true ampleness; on the rank-2 lattice
    it cuts out the open chamber containing every polarisation used here.
    """
    return (
        self_intersection(L, surface) > 0
        and intersect(L, FIBRE, surface) > 0
        and intersect(L, SIGMA, surface) > 0
    )


@dataclass(frozen=True)
class WallSet:
    """The classes ``xi`` with ``-4c <= xi^2 < 0`` and both coefficients even.

    Only one representative per pair ``{xi, -xi}`` is stored, normalised to
    ``a > 0`` and sorted by ``(a, b)``.
    """

    c: int
    walls: tuple[DivisorClass, ...]

    def __iter__(self):
        return iter(self.walls)

    def __len__(self) -> int:
        return len(self.walls)


def wall_set(c: int, surface: SurfaceModel) -> WallSet:
    """Enumerate the finite wall set for charge bound ``c``.

    K3: ``xi = a*sigma + b*f`` has ``xi^2 = -2a(a-b)``, so the defining
    inequalities reduce to ``0 < a*(a-b) <= 2c`` with ``a`` and ``a-b`` even
    (after normalising ``a > 0``).  Abelian: ``xi^2 = 2ab`` reduces to
    ``a > 0 > b`` even with ``a*(-b) <= 2c``.  A class with ``a = 0`` has
    ``xi^2 >= 0`` on either lattice and never appears.
    """
    if c < 1:
        raise ValueError("c must be a positive integer")
    walls: list[DivisorClass] = []
    if surface.is_k3:
        a = 2
        while a * 2 <= 2 * c:
            m = 2
            while a * m <= 2 * c:
                walls.append(DivisorClass(a, a - m))
                m += 2
            a += 2
    else:
        a = 2
        while a * 2 <= 2 * c:
            nb = 2
            while a * nb <= 2 * c:
                walls.append(DivisorClass(a, -nb))
                nb += 2
            a += 2
    walls.sort(key=lambda d: (d.a, d.b))
    return WallSet(c=c, walls=tuple(walls))


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def is_suitable(
    L: DivisorClass, c: int, surface: SurfaceModel
) -> tuple[bool, DivisorClass | None]:
    """Check the wall/sign condition for a polarisation.

    ``L`` passes when for every wall ``xi`` the pairing ``L.xi`` is nonzero
    and has the same sign as ``f.xi``.  Zero is its own sign class: a zero
    pairing means ``L`` lies on the wall and fails.  Returns ``(True, None)``
    or ``(False, first_violating_wall)`` in sorted wall order.
    """
    if not is_ample_model(L, surface):
        raise ValueError(f"{L!r} is not ample in the model cone")
    for xi in wall_set(c, surface):
        f_xi = intersect(FIBRE, xi, surface)
        # a = 0 would force xi^2 >= 0, so walls always pair nontrivially with f
        assert f_xi != 0
        l_xi = intersect(L, xi, surface)
        if l_xi == 0 or _sign(l_xi) != _sign(f_xi):
            return False, xi
    return True, None


def find_suitable(c: int, surface: SurfaceModel) -> DivisorClass:
    """Smallest polarisation ``sigma + N*f`` that is ample and passes ``is_suitable``.

    Existence is guaranteed: once ``N`` dominates every wall coefficient the
    pairing signs all match the fibre side, so the search terminates.
    """
    if c < 1:
        raise ValueError("c must be a positive integer")
    n = 1
    while True:
        cand = DivisorClass(1, n)
        if is_ample_model(cand, surface) and is_suitable(cand, c, surface)[0]:
            return cand
        n += 1
