"""Exact elliptic-curve arithmetic over small prime fields and fibrewise data.

Curves are short Weierstrass ``y^2 = x^3 + a x + b`` over ``F_p`` with
``p > 3`` prime.  A flat line bundle of degree 0 on the curve is identified
with a point (the bundle ``O(q - O)``), and a semistable degree-0 bundle is
modelled by its decomposition into indecomposable blocks ``(q, m)``: the
point that detects the block and the block rank.  A block twisted by the
flat bundle of a point ``t`` acquires a section exactly when ``q + t = O``
in the group law, so the jump loci used by the spectral construction reduce
to exact group arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "EllipticCurve",
    "CurvePoint",
    "INFINITY",
    "FibreBundleClass",
    "on_curve",
    "point_neg",
    "point_add",
    "point_mul",
    "curve_points",
    "group_order",
    "h0_h1",
    "is_regular",
    "jordan_holder_multiplicity",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class EllipticCurve:
    """``y^2 = x^3 + a x + b`` over ``F_p``, ``p > 3`` prime, nonsingular."""

    p: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.p <= 3 or not _is_prime(self.p):
            raise ValueError("field characteristic must be a prime > 3")
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)
        if (4 * self.a**3 + 27 * self.b**2) % self.p == 0:
            raise ValueError("singular curve: 4a^3 + 27b^2 = 0")


@dataclass(frozen=True)
class CurvePoint:
    """Affine point ``(x, y)`` or the point at infinity (both coordinates None)."""

    x: int | None = None
    y: int | None = None

    def __post_init__(self) -> None:
        if (self.x is None) != (self.y is None):
            raise ValueError("point needs both coordinates or neither")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def sort_key(self) -> tuple:
        if self.is_infinity:
            return (0, 0, 0)
        return (1, self.x, self.y)

    def __repr__(self) -> str:
        if self.is_infinity:
            return "CurvePoint(O)"
        return f"CurvePoint({self.x}, {self.y})"


INFINITY = CurvePoint()


def on_curve(P: CurvePoint, curve: EllipticCurve) -> bool:
    if P.is_infinity:
        return True
    p = curve.p
    return (P.y * P.y - (P.x**3 + curve.a * P.x + curve.b)) % p == 0


def _require_on_curve(P: CurvePoint, curve: EllipticCurve) -> None:
    if not on_curve(P, curve):
        raise ValueError(f"{P!r} does not lie on the curve")


def point_neg(P: CurvePoint, curve: EllipticCurve) -> CurvePoint:
    _require_on_curve(P, curve)
    if P.is_infinity:
        return P
    return CurvePoint(P.x, (-P.y) % curve.p)


def point_add(P: CurvePoint, Q: CurvePoint, curve: EllipticCurve) -> CurvePoint:
    """Chord-tangent group law with the point at infinity as identity."""
    _require_on_curve(P, curve)
    _require_on_curve(Q, curve)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    p = curve.p
    if P.x == Q.x and (P.y + Q.y) % p == 0:
        return INFINITY
    if P == Q:
        s = (3 * P.x * P.x + curve.a) * pow(2 * P.y, -1, p) % p
    else:
        s = (Q.y - P.y) * pow(Q.x - P.x, -1, p) % p
    x = (s * s - P.x - Q.x) % p
    y = (s * (P.x - x) - P.y) % p
    return CurvePoint(x, y)


def point_mul(n: int, P: CurvePoint, curve: EllipticCurve) -> CurvePoint:
    _require_on_curve(P, curve)
    if n < 0:
        return point_mul(-n, point_neg(P, curve), curve)
    acc = INFINITY
    add = P
    while n:
        if n & 1:
            acc = point_add(acc, add, curve)
        add = point_add(add, add, curve)
        n >>= 1
    return acc


def curve_points(curve: EllipticCurve) -> tuple[CurvePoint, ...]:
    """All rational points, infinity first, affine points by ``(x, y)``."""
    pts = [INFINITY]
    p = curve.p
    squares: dict[int, list[int]] = {}
    for y in range(p):
        squares.setdefault(y * y % p, []).append(y)
    for x in range(p):
        rhs = (x**3 + curve.a * x + curve.b) % p
        for y in sorted(squares.get(rhs, ())):
            pts.append(CurvePoint(x, y))
    return tuple(pts)


def group_order(curve: EllipticCurve) -> int:
    return len(curve_points(curve))


@dataclass(frozen=True)
class FibreBundleClass:
    """Multiset of indecomposable degree-0 blocks ``(detection point, rank)``."""

    blocks: tuple[tuple[CurvePoint, int], ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("bundle class needs at least one block")
        for _, m in self.blocks:
            if m < 1:
                raise ValueError("block rank must be positive")
        ordered = tuple(sorted(self.blocks, key=lambda bl: (bl[0].sort_key(), bl[1])))
        object.__setattr__(self, "blocks", ordered)

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.blocks)


def h0_h1(
    V: FibreBundleClass, twist: CurvePoint, curve: EllipticCurve
) -> tuple[int, int]:
    """Cohomology of the bundle twisted by the flat line bundle of ``twist``.

    Each block ``(q, m)`` contributes one section (and by degree 0 one
    ``h^1``) exactly when ``q + twist = O``, independently of the block rank,
    so ``h0 = h1 =`` number of detected blocks and the Euler characteristic
    vanishes identically.
    """
    _require_on_curve(twist, curve)
    hits = 0
    for q, _ in V.blocks:
        if point_add(q, twist, curve).is_infinity:
            hits += 1
    return hits, hits


def is_regular(V: FibreBundleClass) -> bool:
    """True when all block points are distinct, so every twist sees ``h0 <= 1``."""
    points = [q for q, _ in V.blocks]
    return len(points) == len(set(points))


def jordan_holder_multiplicity(V: FibreBundleClass, at: CurvePoint) -> int:
    """Total rank of the blocks sitting at the given point."""
    return sum(m for q, m in V.blocks if q == at)
