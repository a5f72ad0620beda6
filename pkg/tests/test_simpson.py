import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from specfm.lattice import ABELIAN, K3, DivisorClass, intersect
from specfm.oracles import brute_force_verdict
from specfm.simpson import (
    StabilityVerdict,
    TorsionSheafModel,
    Verdict,
    euler_characteristic,
    hilbert_polynomial,
    irreducible_shortcut,
    reduced_hilbert_constant,
    stability_verdict,
    subsheaf_candidates,
    support_class,
    transform_classification,
)

L = DivisorClass(1, 1)
SECTION = DivisorClass(1, 0)
FIBRE_C = DivisorClass(0, 1)
GRID_CLASSES = (SECTION, SECTION, FIBRE_C, FIBRE_C, FIBRE_C)


def grid_model(*degrees):
    return TorsionSheafModel(ABELIAN, tuple(zip(GRID_CLASSES, degrees)))


def test_model_validation():
    with pytest.raises(ValueError):
        TorsionSheafModel(ABELIAN, ())
    with pytest.raises(ValueError):
        TorsionSheafModel(ABELIAN, ((DivisorClass(-1, 2), 0),))
    with pytest.raises(ValueError, match="incidence"):
        TorsionSheafModel(
            ABELIAN,
            ((SECTION, 1), (FIBRE_C, 1)),
            incidence=((0, 2), (2, 0)),
        )
    # consistent matrix accepted
    TorsionSheafModel(
        ABELIAN,
        ((SECTION, 1), (FIBRE_C, 1)),
        incidence=((0, 1), (1, 0)),
    )


def test_euler_characteristic_and_support():
    m = grid_model(2, 1, 1, 1, 1)
    assert support_class(m) == DivisorClass(2, 3)
    assert euler_characteristic(m) == 0
    # single degree-d component on the K3 section: chi = d + 1
    single = TorsionSheafModel(K3, ((SECTION, 3),))
    assert euler_characteristic(single) == 4


def test_hilbert_polynomial_examples():
    assert hilbert_polynomial(grid_model(2, 1, 1, 1, 1), L) == (5, 0)
    fibre_only = TorsionSheafModel(ABELIAN, ((FIBRE_C, 0),))
    assert hilbert_polynomial(fibre_only, L) == (1, 0)
    assert reduced_hilbert_constant(fibre_only, L) == 0
    with pytest.raises(ValueError):
        hilbert_polynomial(fibre_only, DivisorClass(0, 1))


def test_subsheaf_candidates_examples():
    m = grid_model(2, 1, 1, 1, 1)
    chi = {c.indices: c.chi for c in subsheaf_candidates(m)}
    assert chi[(2,)] == -1  # one fibre meets the two sections
    assert chi[(0,)] == -1  # one section meets the three fibres
    assert chi[(0, 1)] == -3  # both sections lose the six crossing nodes
    assert len(chi) == 2**5 - 2
    support = {c.indices: c.support for c in subsheaf_candidates(m)}
    assert support[(0, 1)] == DivisorClass(2, 0)


def test_subsheaf_candidates_need_reduced():
    m = TorsionSheafModel(ABELIAN, ((SECTION, 1), (FIBRE_C, 1)), reduced=False)
    with pytest.raises(ValueError):
        subsheaf_candidates(m)


def test_stability_examples():
    assert stability_verdict(grid_model(2, 1, 1, 1, 1), L) == StabilityVerdict(
        Verdict.STABLE
    )
    semi = stability_verdict(grid_model(2, 2, 1, 1, 0), L)
    assert semi.verdict is Verdict.SEMISTABLE_FIBRE_ONLY
    assert semi.witness == (0, 1, 2, 3) and semi.witness_chi == 0
    assert semi.fibre_quotient_wall
    unstable = stability_verdict(grid_model(4, 2, 0, 0, 0), L)
    assert unstable.verdict is Verdict.UNSTABLE
    assert unstable.witness == (0,) and unstable.witness_chi == 1


def test_mixed_equality_wall_is_other():
    # fibre of degree 2 meeting both sections: its own saturated chi is zero,
    # and the complement mixes sections and fibres
    verdict = stability_verdict(grid_model(1, 1, 2, 1, 1), L)
    assert verdict.verdict is Verdict.SEMISTABLE_OTHER
    assert verdict.witness == (2,) and verdict.witness_chi == 0


def test_invalid_for_nonreduced():
    m = TorsionSheafModel(ABELIAN, ((SECTION, 1), (FIBRE_C, 1)), reduced=False)
    verdict = stability_verdict(m, L)
    assert verdict.verdict is Verdict.INVALID
    assert verdict.witness is None


def test_stability_needs_ample():
    with pytest.raises(ValueError):
        stability_verdict(grid_model(2, 1, 1, 1, 1), DivisorClass(0, 1))


def _all_degree_vectors(total, parts, bound):
    if parts == 1:
        if 0 <= total <= bound:
            yield (total,)
        return
    for d in range(min(total, bound) + 1):
        for rest in _all_degree_vectors(total - d, parts - 1, bound):
            yield (d,) + rest


def test_verdicts_agree_with_brute_force():
    incidence = [
        [intersect(ci, cj, ABELIAN) for cj in GRID_CLASSES] for ci in GRID_CLASSES
    ]
    for degrees in _all_degree_vectors(6, 5, 4):
        fast = stability_verdict(grid_model(*degrees), L).verdict.value
        slow = brute_force_verdict(
            list(GRID_CLASSES), list(degrees), incidence, L, ABELIAN
        )
        assert fast == slow, degrees


def test_verdicts_agree_with_brute_force_on_k3():
    # section + three fibres on the K3 (g - 1 = 2); degree sums 1 and 2
    # exercise both nonzero and zero Euler characteristic
    classes = (SECTION, FIBRE_C, FIBRE_C, FIBRE_C)
    incidence = [[intersect(ci, cj, K3) for cj in classes] for ci in classes]
    for total in (1, 2):
        for degrees in _all_degree_vectors(total, 4, 2):
            model = TorsionSheafModel(K3, tuple(zip(classes, degrees)))
            fast = stability_verdict(model, DivisorClass(1, 4)).verdict.value
            slow = brute_force_verdict(
                list(classes), list(degrees), incidence, DivisorClass(1, 4), K3
            )
            assert fast == slow, degrees


def test_metamorphic_degree_shift():
    rng = random.Random(41)
    for _ in range(60):
        degrees = [0, 0, 0, 0, 0]
        for _ in range(6):
            degrees[rng.randrange(5)] += 1
        i, j = rng.randrange(5), rng.randrange(5)
        if degrees[j] == 0:
            continue
        before = {c.indices: c.chi for c in subsheaf_candidates(grid_model(*degrees))}
        degrees[i] += 1
        degrees[j] -= 1
        after = {c.indices: c.chi for c in subsheaf_candidates(grid_model(*degrees))}
        for idx, chi in before.items():
            delta = (i in idx) - (j in idx)
            assert after[idx] == chi + delta


@settings(max_examples=60)
@given(st.permutations(list(range(5))))
def test_verdict_invariant_under_relabelling(perm):
    degrees = (2, 2, 1, 1, 0)
    base = stability_verdict(grid_model(*degrees), L)
    permuted_components = tuple(
        (GRID_CLASSES[perm[i]], degrees[perm[i]]) for i in range(5)
    )
    other = stability_verdict(TorsionSheafModel(ABELIAN, permuted_components), L)
    assert other.verdict is base.verdict
    assert other.witness_chi == base.witness_chi


def test_equality_walls_match_quotient_walls():
    # for chi = 0 models a subcurve sits on a wall exactly when the
    # complementary quotient has reduced polynomial n
    for degrees in ((2, 2, 1, 1, 0), (1, 1, 2, 1, 1), (2, 1, 1, 1, 1)):
        m = grid_model(*degrees)
        total_chi = euler_characteristic(m)
        assert total_chi == 0
        d_class = support_class(m)
        for cand in subsheaf_candidates(m):
            outside = [i for i in range(5) if i not in cand.indices]
            quot_chi = total_chi - cand.chi
            quot_class = d_class - cand.support
            quot_lead = intersect(L, quot_class, ABELIAN)
            assert quot_lead > 0
            assert (cand.chi == 0) == (Fraction(quot_chi, quot_lead) == 0)
            assert outside  # proper subcurves always leave a complement


def test_transform_classification_strings():
    assert transform_classification(StabilityVerdict(Verdict.STABLE)) == (
        "mu-stable locally free"
    )
    assert "not locally free" in transform_classification(
        StabilityVerdict(Verdict.SEMISTABLE_FIBRE_ONLY, (0,), 0)
    )
    assert "semistable" in transform_classification(
        StabilityVerdict(Verdict.SEMISTABLE_OTHER, (0,), 0)
    )
    assert "no semistable" in transform_classification(
        StabilityVerdict(Verdict.UNSTABLE, (0,), 1)
    )


def test_irreducible_shortcut():
    single = TorsionSheafModel(ABELIAN, ((DivisorClass(2, 3), 5),))
    assert irreducible_shortcut(single) == StabilityVerdict(Verdict.STABLE)
    assert stability_verdict(single, L).verdict is Verdict.STABLE
    assert irreducible_shortcut(grid_model(2, 1, 1, 1, 1)) is None
    fibre_alone = TorsionSheafModel(ABELIAN, ((FIBRE_C, 0),))
    assert irreducible_shortcut(fibre_alone) == StabilityVerdict(Verdict.STABLE)
