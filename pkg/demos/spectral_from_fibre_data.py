"""From fibrewise bundle data to a spectral divisor, exactly.

Work over F_13 so every cohomology jump can be checked point by point.  A
degree-0 semistable bundle on the fibre is a sum of blocks (q, m); twisting
by the flat line bundle of a point t produces a section exactly when
q + t = O.  The spectral divisor is the exhaustive scan of those jumps over
the dual fibre, and its class matches the invariant-level transform of the
family's Chern triple.
"""

from fractions import Fraction

from specfm import (
    ABELIAN,
    ChernTriple,
    DivisorClass,
    EllipticCurve,
    FibreBundleClass,
    ProductFamily,
    curve_points,
    fm_transform_ch,
    h0_h1,
    is_regular,
    point_neg,
    spectral_divisor,
)
from specfm.oracles import oracle_h0_h1

W = EllipticCurve(13, 1, 1)
pts = curve_points(W)
print(f"fibre curve: y^2 = x^3 + x + 1 over F_13, {len(pts)} rational points")

q1, q2 = pts[1], pts[4]
family = ProductFamily(EllipticCurve(5, 1, 1), W, FibreBundleClass(((q1, 2), (q2, 1))))
V = family.fibre_class
print(f"blocks: (q1={q1.x},{q1.y}) rank 2 + (q2={q2.x},{q2.y}) rank 1; regular? {is_regular(V)}")

print("\ntwist scan (only the jumps shown):")
for t in pts:
    h0, h1 = h0_h1(V, t, W)
    if h1:
        label = "O" if t.is_infinity else f"({t.x},{t.y})"
        assert (h0, h1) == oracle_h0_h1(V, t, W)  # divisor-reduction oracle agrees
        print(f"  twist {label}: h0 = h0 = {h0} (block at minus this point)")

sd = spectral_divisor(family)
print("\nspectral divisor (horizontal components on the dual fibre):")
for w_hat, mult in sd.horizontal:
    print(f"  {mult} x (V x {{({w_hat.x},{w_hat.y})}})")
print(f"predicted support: {[point_neg(q, W) for q, _ in V.blocks]}")

cls = sd.divisor_class()
image = fm_transform_ch(ChernTriple(V.rank, DivisorClass(0, 0), Fraction(0)), ABELIAN)
print(f"\nclass of the divisor: {cls.a} sigma_hat + {cls.b} f_hat")
print(f"transform of the triple (rank {V.rank}, 0, 0): c1 = {image.c1.a} sigma_hat + {image.c1.b} f_hat")
assert cls == image.c1
