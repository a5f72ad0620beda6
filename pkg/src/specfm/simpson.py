"""Stability engine for pure-dimension-one torsion sheaf models.

A torsion sheaf supported on a reduced nodal curve in the relative Jacobian
is modelled by its components (a lattice class and a line-bundle degree per
component) together with the pairwise intersection numbers.  Subsheaves
along subcurves are enumerated in saturated form: the restriction to a
subcurve twisted down by its intersection with the complement.  Comparing
reduced Hilbert polynomials over these candidates decides stability in the
sense used for moduli of pure sheaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .lattice import (
    DivisorClass,
    SurfaceModel,
    arithmetic_genus,
    intersect,
    is_ample_model,
    self_intersection,
)

__all__ = [
    "TorsionSheafModel",
    "Verdict",
    "StabilityVerdict",
    "SubsheafCandidate",
    "support_class",
    "euler_characteristic",
    "hilbert_polynomial",
    "reduced_hilbert_constant",
    "subsheaf_candidates",
    "stability_verdict",
    "transform_classification",
    "irreducible_shortcut",
]


@dataclass(frozen=True)
class TorsionSheafModel:
    """Support components with degrees and validated incidence numbers.

    ``components`` is a tuple of ``(class, degree)``; ``incidence`` is the
    full symmetric matrix of lattice intersection numbers of the component
    classes (diagonal included).  Passing ``incidence=None`` computes it.
    ``reduced=False`` marks models with multiple components, which the
    stability engine reports as undecidable rather than guessing.
    """

    surface: SurfaceModel
    components: tuple[tuple[DivisorClass, int], ...]
    incidence: tuple[tuple[int, ...], ...] | None = None
    reduced: bool = True

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("model needs at least one component")
        comps = tuple((DivisorClass(c.a, c.b), int(d)) for c, d in self.components)
        object.__setattr__(self, "components", comps)
        for c, _ in comps:
            # effective model cone (nonnegative in the section/fibre generators)
            # also guarantees L.C > 0 for every model-ample L
            if c.a < 0 or c.b < 0 or c.is_zero():
                raise ValueError(f"component class {c!r} is not effective in the model cone")
        n = len(comps)
        expected = tuple(
            tuple(intersect(comps[i][0], comps[j][0], self.surface) for j in range(n))
            for i in range(n)
        )
        if self.incidence is None:
            object.__setattr__(self, "incidence", expected)
        else:
            given = tuple(tuple(int(x) for x in row) for row in self.incidence)
            if given != expected:
                raise ValueError("incidence matrix disagrees with the lattice intersections")
            object.__setattr__(self, "incidence", given)

    @property
    def n_components(self) -> int:
        return len(self.components)


def support_class(M: TorsionSheafModel) -> DivisorClass:
    total = DivisorClass(0, 0)
    for c, _ in M.components:
        total = total + c
    return total


def euler_characteristic(M: TorsionSheafModel) -> int:
    """Euler characteristic of a line bundle on the nodal support.

    Computed as ``sum(d_i - C_i^2/2) - sum_{i<j} C_i.C_j`` and cross-checked
    against ``sum(d_i) - p_a(D) + 1``; the two agree exactly whenever the
    incidence data is consistent.
    """
    per_component = sum(
        d - self_intersection(c, M.surface) // 2 for c, d in M.components
    )
    n = M.n_components
    nodes = sum(M.incidence[i][j] for i in range(n) for j in range(i + 1, n))
    chi = per_component - nodes
    total_degree = sum(d for _, d in M.components)
    chi_adjunction = total_degree - arithmetic_genus(support_class(M), M.surface) + 1
    assert chi == chi_adjunction
    return chi


def hilbert_polynomial(M: TorsionSheafModel, L: DivisorClass) -> tuple[int, int]:
    """Coefficients ``(leading, constant)`` of ``P(n) = (L.D) n + chi``."""
    if not is_ample_model(L, M.surface):
        raise ValueError(f"{L!r} is not ample in the model cone")
    lead = intersect(L, support_class(M), M.surface)
    assert lead > 0
    return lead, euler_characteristic(M)


def reduced_hilbert_constant(M: TorsionSheafModel, L: DivisorClass) -> Fraction:
    """Constant term of the reduced polynomial ``p(n) = n + chi/(L.D)``."""
    lead, chi = hilbert_polynomial(M, L)
    return Fraction(chi, lead)


@dataclass(frozen=True)
class SubsheafCandidate:
    """Saturated subsheaf along a proper subcurve.

    ``chi`` is the Euler characteristic of the restriction to the subcurve
    twisted down by its scheme intersection with the complement;
    ``support`` is the subcurve class, ready to pair with any polarisation.
    """

    indices: tuple[int, ...]
    chi: int
    support: DivisorClass


def subsheaf_candidates(M: TorsionSheafModel) -> list[SubsheafCandidate]:
    """All saturated subcurve subsheaves of a reduced model.

    For a subset ``C'`` of components the candidate has
    ``chi = sum_{i in C'}(d_i - C_i^2/2) - sum_{i<j in C'} C_i.C_j
    - C'.(D - C')``.  Subsets are enumerated by size then lexicographically.
    """
    if not M.reduced:
        raise ValueError("subsheaf enumeration needs a reduced model")
    n = M.n_components
    out: list[SubsheafCandidate] = []
    for size in range(1, n):
        for idx in combinations(range(n), size):
            inside = set(idx)
            chi = sum(
                M.components[i][1]
                - self_intersection(M.components[i][0], M.surface) // 2
                for i in idx
            )
            chi -= sum(M.incidence[i][j] for i in idx for j in idx if i < j)
            chi -= sum(
                M.incidence[i][j]
                for i in idx
                for j in range(n)
                if j not in inside
            )
            support = DivisorClass(
                sum(M.components[i][0].a for i in idx),
                sum(M.components[i][0].b for i in idx),
            )
            out.append(SubsheafCandidate(idx, chi, support))
    return out


class Verdict(str, Enum):
    STABLE = "stable"
    SEMISTABLE_FIBRE_ONLY = "semistable-fibre-only"
    SEMISTABLE_OTHER = "semistable-other"
    UNSTABLE = "unstable"
    INVALID = "invalid"


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of the subcurve comparison.

    ``witness`` and ``witness_chi`` identify the deciding subcurve whenever
    the verdict is not stable (and the model is valid).  For semistable
    verdicts ``fibre_quotient_wall`` records whether some equality wall has
    its quotient supported purely on fibre components, the configuration
    that obstructs transforming back in degree zero.
    """

    verdict: Verdict
    witness: tuple[int, ...] | None = None
    witness_chi: int | None = None
    fibre_quotient_wall: bool = False


def _is_fibre_class(c: DivisorClass) -> bool:
    return c.a == 0 and c.b > 0


def stability_verdict(M: TorsionSheafModel, L: DivisorClass) -> StabilityVerdict:
    """Stability trichotomy for a reduced nodal support model.

    A candidate destabilises when its reduced polynomial exceeds the model's,
    i.e. ``chi_sub/(L.C') > chi/(L.D)``; equality marks a semistable wall.
    For the transform-shaped models (``chi = 0``) this is the sign of
    ``chi_sub``.  A semistable model is classified fibre-only when every
    equality wall has its complement-quotient supported purely on fibre
    components, otherwise it lands in the other semistable class.
    Non-reduced models are reported invalid.
    """
    if not is_ample_model(L, M.surface):
        raise ValueError(f"{L!r} is not ample in the model cone")
    if not M.reduced:
        return StabilityVerdict(Verdict.INVALID)
    if M.n_components == 1:
        return StabilityVerdict(Verdict.STABLE)

    lead, chi = hilbert_polynomial(M, L)
    p_total = Fraction(chi, lead)

    destabilisers: list[tuple[Fraction, SubsheafCandidate]] = []
    equalities: list[SubsheafCandidate] = []
    for cand in subsheaf_candidates(M):
        pairing = intersect(L, cand.support, M.surface)
        assert pairing > 0
        p_sub = Fraction(cand.chi, pairing)
        if p_sub > p_total:
            destabilisers.append((p_sub, cand))
        elif p_sub == p_total:
            equalities.append(cand)

    if destabilisers:
        worst = max(destabilisers, key=lambda item: item[0])[0]
        witness = next(c for p, c in destabilisers if p == worst)
        return StabilityVerdict(Verdict.UNSTABLE, witness.indices, witness.chi)

    if equalities:
        all_indices = range(M.n_components)

        def complement_is_fibre(cand: SubsheafCandidate) -> bool:
            outside = [i for i in all_indices if i not in cand.indices]
            return all(_is_fibre_class(M.components[i][0]) for i in outside)

        fibre_walls = [c for c in equalities if complement_is_fibre(c)]
        if len(fibre_walls) == len(equalities):
            witness = fibre_walls[0]
            return StabilityVerdict(
                Verdict.SEMISTABLE_FIBRE_ONLY,
                witness.indices,
                witness.chi,
                fibre_quotient_wall=True,
            )
        witness = equalities[0]
        return StabilityVerdict(
            Verdict.SEMISTABLE_OTHER,
            witness.indices,
            witness.chi,
            fibre_quotient_wall=bool(fibre_walls),
        )

    return StabilityVerdict(Verdict.STABLE)


_CLASSIFICATION = {
    Verdict.STABLE: "mu-stable locally free",
    Verdict.SEMISTABLE_FIBRE_ONLY: "mu-stable, torsion-free but not locally free",
    Verdict.SEMISTABLE_OTHER: "properly mu-semistable",
    Verdict.UNSTABLE: "no semistable preimage",
    Verdict.INVALID: "not classified (invalid model)",
}


def transform_classification(v: StabilityVerdict) -> str:
    """What the verdict says about the sheaf transforming to this model."""
    return _CLASSIFICATION[v.verdict]


def irreducible_shortcut(M: TorsionSheafModel) -> StabilityVerdict | None:
    """Single-component reduced supports are stable for any polarisation; else None."""
    if M.reduced and M.n_components == 1:
        return StabilityVerdict(Verdict.STABLE)
    return None
