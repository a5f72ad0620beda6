import random

import pytest

from specfm.elliptic_fibre import (
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
from specfm.oracles import oracle_h0_h1, oracle_point_add

CURVES = [EllipticCurve(p, 1, 1) for p in (5, 7, 11, 13)]


def test_curve_validation():
    with pytest.raises(ValueError):
        EllipticCurve(4, 1, 1)  # not prime
    with pytest.raises(ValueError):
        EllipticCurve(3, 1, 1)  # characteristic too small
    with pytest.raises(ValueError):
        EllipticCurve(5, 0, 0)  # singular


def test_point_validation():
    with pytest.raises(ValueError):
        CurvePoint(1, None)
    c = CURVES[0]
    with pytest.raises(ValueError):
        point_add(CurvePoint(1, 1), INFINITY, c)  # (1,1) is off the curve


def test_group_law_examples():
    c = EllipticCurve(5, 1, 1)
    P = CurvePoint(0, 1)
    assert point_add(P, INFINITY, c) == P
    assert point_add(P, P, c) == CurvePoint(4, 2)
    assert oracle_point_add(P, P, c) == CurvePoint(4, 2)
    assert point_add(P, point_neg(P, c), c) == INFINITY


def test_group_law_matches_divisor_reduction_oracle():
    c = CURVES[0]
    pts = curve_points(c)
    for P in pts:
        for Q in pts:
            assert point_add(P, Q, c) == oracle_point_add(P, Q, c)
    rng = random.Random(11)
    for curve in CURVES[1:]:
        pts = curve_points(curve)
        for _ in range(200):
            P, Q = rng.choice(pts), rng.choice(pts)
            assert point_add(P, Q, curve) == oracle_point_add(P, Q, curve)


def test_group_law_fuzz_associative_commutative():
    rng = random.Random(3)
    for curve in CURVES:
        pts = curve_points(curve)
        for _ in range(10_000):
            P, Q, R = rng.choice(pts), rng.choice(pts), rng.choice(pts)
            assert point_add(P, Q, curve) == point_add(Q, P, curve)
            assert point_add(point_add(P, Q, curve), R, curve) == point_add(
                P, point_add(Q, R, curve), curve
            )


def test_scalar_multiples_cycle_with_group_order():
    for curve in CURVES:
        order = group_order(curve)
        for P in curve_points(curve):
            assert point_mul(order, P, curve) == INFINITY
            assert point_mul(order + 5, P, curve) == point_mul(5, P, curve)


def test_point_mul_matches_repeated_addition():
    curve = CURVES[1]
    P = curve_points(curve)[1]
    acc = INFINITY
    for n in range(12):
        assert point_mul(n, P, curve) == acc
        acc = point_add(acc, P, curve)
    assert point_mul(-3, P, curve) == point_neg(point_mul(3, P, curve), curve)


def test_h0_h1_examples():
    c = EllipticCurve(5, 1, 1)
    trivial = FibreBundleClass(((INFINITY, 1),))
    assert h0_h1(trivial, INFINITY, c) == (1, 1)
    q = CurvePoint(2, 1)
    atiyah = FibreBundleClass(((q, 2),))
    assert h0_h1(atiyah, point_neg(q, c), c) == (1, 1)
    assert oracle_h0_h1(atiyah, point_neg(q, c), c) == (1, 1)
    three = FibreBundleClass(
        ((CurvePoint(0, 1), 1), (CurvePoint(2, 1), 1), (CurvePoint(3, 1), 1))
    )
    generic = CurvePoint(4, 2)
    assert all(point_add(q, generic, c) != INFINITY for q, _ in three.blocks)
    assert h0_h1(three, generic, c) == (0, 0)


def _random_bundle(rng, curve, max_rank=6):
    pts = curve_points(curve)
    blocks = []
    remaining = rng.randint(1, max_rank)
    while remaining > 0:
        m = rng.randint(1, remaining)
        blocks.append((rng.choice(pts), m))
        remaining -= m
    return FibreBundleClass(tuple(blocks))


def test_h0_equals_h1_and_detection_set():
    rng = random.Random(5)
    for curve in CURVES:
        pts = curve_points(curve)
        for _ in range(30):
            V = _random_bundle(rng, curve)
            detection = {point_neg(q, curve) for q, _ in V.blocks}
            for twist in pts:
                h0, h1 = h0_h1(V, twist, curve)
                assert h0 == h1
                assert h1 <= len(V.blocks) <= V.rank
                assert (h1 > 0) == (twist in detection)
                assert (h0, h1) == oracle_h0_h1(V, twist, curve)


def test_is_regular_examples():
    q = CurvePoint(2, 1)
    q2 = CurvePoint(0, 1)
    assert is_regular(FibreBundleClass(((q, 3),)))
    assert not is_regular(FibreBundleClass(((q, 1), (q, 1))))
    assert is_regular(FibreBundleClass(((q2, 1), (q, 2))))


def test_regular_bundles_have_small_cohomology_exhaustively():
    rng = random.Random(17)
    for curve in CURVES:
        pts = curve_points(curve)
        for _ in range(25):
            V = _random_bundle(rng, curve)
            if not is_regular(V):
                continue
            for twist in pts:
                assert h0_h1(V, twist, curve) in ((0, 0), (1, 1))


def test_jordan_holder_multiplicity():
    q = CurvePoint(2, 1)
    other = CurvePoint(0, 1)
    assert jordan_holder_multiplicity(FibreBundleClass(((q, 2),)), q) == 2
    assert jordan_holder_multiplicity(FibreBundleClass(((q, 2), (q, 1))), q) == 3
    assert jordan_holder_multiplicity(FibreBundleClass(((q, 2),)), other) == 0


def test_bundle_class_validation():
    with pytest.raises(ValueError):
        FibreBundleClass(())
    with pytest.raises(ValueError):
        FibreBundleClass(((INFINITY, 0),))
    # block order is normalised, so equal multisets compare equal
    q, r = CurvePoint(2, 1), CurvePoint(0, 1)
    assert FibreBundleClass(((q, 1), (r, 2))) == FibreBundleClass(((r, 2), (q, 1)))
