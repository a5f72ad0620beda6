import random
from fractions import Fraction

import pytest

from specfm.chern_fm import ChernTriple, fm_transform_ch
from specfm.elliptic_fibre import (
    INFINITY,
    CurvePoint,
    EllipticCurve,
    FibreBundleClass,
    curve_points,
    h0_h1,
    point_neg,
)
from specfm.lattice import ABELIAN, K3, DivisorClass
from specfm.simpson import euler_characteristic, reduced_hilbert_constant
from specfm.spectral import (
    ProductFamily,
    SheafDescription,
    construct_from_spectral,
    spectral_divisor,
    wit_classify,
)

C5 = EllipticCurve(5, 1, 1)
Q1 = CurvePoint(0, 1)
Q2 = CurvePoint(2, 1)


def test_spectral_divisor_examples():
    two_distinct = ProductFamily(C5, C5, FibreBundleClass(((Q1, 1), (Q2, 1))))
    sd = spectral_divisor(two_distinct)
    assert sd.horizontal == (
        (point_neg(Q1, C5), 1),
        (point_neg(Q2, C5), 1),
    )
    assert sd.vertical == ()
    assert sd.divisor_class() == DivisorClass(2, 0)

    single_block = ProductFamily(C5, C5, FibreBundleClass(((Q2, 2),)))
    sd2 = spectral_divisor(single_block)
    assert sd2.horizontal == ((point_neg(Q2, C5), 2),)
    assert sd2.divisor_class() == DivisorClass(2, 0)

    trivial = ProductFamily(C5, C5, FibreBundleClass(((INFINITY, 1),)))
    sd3 = spectral_divisor(trivial)
    assert sd3.horizontal == ((INFINITY, 1),)
    assert sd3.divisor_class() == DivisorClass(1, 0)


def test_family_validates_block_points():
    with pytest.raises(ValueError):
        ProductFamily(C5, C5, FibreBundleClass(((CurvePoint(1, 1), 1),)))


def _random_family(rng):
    p = rng.choice((5, 7, 11, 13))
    fibre = EllipticCurve(p, 1, 1)
    pts = curve_points(fibre)
    blocks = []
    remaining = rng.randint(1, 6)
    while remaining > 0:
        m = rng.randint(1, remaining)
        blocks.append((rng.choice(pts), m))
        remaining -= m
    return ProductFamily(C5, fibre, FibreBundleClass(tuple(blocks)))


def test_spectral_divisor_exhaustive_detection_and_multiplicity():
    rng = random.Random(23)
    for _ in range(40):
        family = _random_family(rng)
        sd = spectral_divisor(family)
        support = dict(sd.horizontal)
        fibre = family.fibre_curve
        for pt in curve_points(fibre):
            h0, h1 = h0_h1(family.fibre_class, pt, fibre)
            assert (h1 > 0) == (pt in support)
        assert sum(support.values()) == family.rank


def test_spectral_class_matches_transform():
    rng = random.Random(29)
    for _ in range(20):
        family = _random_family(rng)
        r, c1, ch2 = family.chern_triple_shape()
        assert (c1, ch2) == (0, 0)
        triple = ChernTriple(r, DivisorClass(0, 0), Fraction(0))
        image = fm_transform_ch(triple, ABELIAN)
        assert spectral_divisor(family).divisor_class() == image.c1


def test_wit_classify():
    assert wit_classify(SheafDescription(True, True)) == 1
    assert wit_classify(SheafDescription(False, False, zero_dimensional_support=True)) == 0
    # the structure sheaf is torsion-free and fibrewise semistable
    assert wit_classify(SheafDescription(True, True, False)) == 1
    assert wit_classify(SheafDescription(False, True)) is None
    assert wit_classify(SheafDescription(True, False)) is None


SECTIONS_AND_FIBRES = [DivisorClass(1, 0)] * 2 + [DivisorClass(0, 1)] * 3


def test_construct_example_model():
    model = construct_from_spectral(ABELIAN, list(SECTIONS_AND_FIBRES), [2, 1, 1, 1, 1])
    assert euler_characteristic(model) == 0
    assert model.reduced
    assert sum(d for _, d in model.components) == 6


def test_construct_errors():
    with pytest.raises(ValueError, match="degree sum"):
        construct_from_spectral(ABELIAN, list(SECTIONS_AND_FIBRES), [1, 1, 1, 1, 1])
    with pytest.raises(ValueError, match="extension class"):
        construct_from_spectral(
            ABELIAN, list(SECTIONS_AND_FIBRES), [2, 1, 1, 1, 1], nonzero_on_each_factor=False
        )
    with pytest.raises(ValueError, match="marked points"):
        construct_from_spectral(
            ABELIAN, list(SECTIONS_AND_FIBRES), [2, 1, 1, 1, 1], marked_points_valid=False
        )
    with pytest.raises(ValueError, match="one degree per component"):
        construct_from_spectral(ABELIAN, list(SECTIONS_AND_FIBRES), [2, 1, 1])
    with pytest.raises(ValueError, match="nonnegative"):
        construct_from_spectral(ABELIAN, list(SECTIONS_AND_FIBRES), [7, 1, 1, 1, -4])


def test_construct_k3_model():
    # section plus five fibres on the K3: D = sigma + 5f, D^2 = 8, g = 5
    classes = [DivisorClass(1, 0)] + [DivisorClass(0, 1)] * 5
    model = construct_from_spectral(K3, classes, [0, 1, 1, 1, 1, 0])
    assert euler_characteristic(model) == 0


def test_constructed_models_have_reduced_polynomial_n():
    rng = random.Random(31)
    L = DivisorClass(1, 1)
    for _ in range(25):
        n_sections = rng.randint(1, 3)
        n_fibres = rng.randint(1, 3)
        classes = [DivisorClass(1, 0)] * n_sections + [DivisorClass(0, 1)] * n_fibres
        total = DivisorClass(n_sections, n_fibres)
        g_minus_1 = (2 * n_sections * n_fibres) // 2
        degrees = [0] * len(classes)
        for _ in range(g_minus_1):
            degrees[rng.randrange(len(classes))] += 1
        model = construct_from_spectral(ABELIAN, classes, degrees)
        assert reduced_hilbert_constant(model, L) == 0
