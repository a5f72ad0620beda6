"""Self-contained acceptance suite.

Each criterion is a function returning a :class:`CheckResult`; ``run_all``
executes all of them in a fixed order.  Randomised criteria draw from seeded
generators, so two runs of the suite produce identical reports, and nothing
here reads external data or the network.  The same checks back the package
test suite and the ``verify`` CLI command.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import dispatch
from .chern_fm import (
    ChernTriple,
    GeneratorObject,
    GeneratorTag,
    fm_transform_ch,
    mukai_nahm_ch,
    reduced_hilbert_constant_of_triple,
    slope,
    verify_diagram_generators,
)
from .elliptic_fibre import (
    EllipticCurve,
    FibreBundleClass,
    curve_points,
    h0_h1,
    jordan_holder_multiplicity,
    point_neg,
)
from .lattice import (
    ABELIAN,
    K3,
    DivisorClass,
    find_suitable,
    intersect,
    is_ample_model,
    is_suitable,
    self_intersection,
    wall_set,
)
from .moduli import (
    ModuliDescriptor,
    fibration_dimensions,
    lagrangian_check,
    nahm_bijection_check,
)
from .oracles import brute_force_verdict, brute_force_wall_set, oracle_h0_h1
from .simpson import Verdict, stability_verdict
from .spectral import ProductFamily, construct_from_spectral, spectral_divisor

__all__ = ["CheckResult", "run_all", "CRITERIA"]

_PRIMES = (5, 7, 11, 13)
_GRID = range(2, 7)
_L_K3 = DivisorClass(1, 4)
_L_AB = DivisorClass(1, 1)


@dataclass(frozen=True)
class CheckResult:
    check: str
    ok: bool
    expected: str
    got: str


def _ok(check: str, expected: str) -> CheckResult:
    return CheckResult(check, True, expected, "ok")


def _fail(check: str, expected: str, got: str) -> CheckResult:
    return CheckResult(check, False, expected, got)


def criterion_transform_character() -> CheckResult:
    name = "transform-character"
    expected = "(r,0,-k) -> (0, k f_hat + r sigma_hat, 0) with reduced polynomial n, 2<=r,k<=6"
    for r in _GRID:
        for k in _GRID:
            triple = ChernTriple(r, DivisorClass(0, 0), Fraction(-k))
            image = fm_transform_ch(triple, K3)
            want = ChernTriple(0, DivisorClass(r, k), Fraction(0))
            if image != want:
                return _fail(name, expected, f"image of (r={r},k={k}) was {image!r}")
            for L, surface in ((_L_K3, K3), (_L_AB, ABELIAN)):
                const = reduced_hilbert_constant_of_triple(image, L, surface)
                if const != 0:
                    return _fail(
                        name,
                        expected,
                        f"reduced constant {const} for (r={r},k={k}) on {surface.kind.value}",
                    )
    return _ok(name, expected)


def criterion_lagrangian_identity() -> CheckResult:
    name = "lagrangian-identity"
    expected = "base = fibre = g and total = 2g, matching 2(rk-r^2+1) on K3 and 2rk+2 on the product"
    for surface in (K3, ABELIAN):
        for r in _GRID:
            for k in _GRID:
                m = ModuliDescriptor(surface, r, k)
                dims = fibration_dimensions(m)
                closed = 2 * (r * k - r * r + 1) if surface.is_k3 else 2 * r * k + 2
                good = (
                    dims.base_dim == dims.fibre_dim == dims.genus
                    and dims.total_dim == 2 * dims.genus
                    and dims.total_dim == closed
                    and lagrangian_check(m)
                )
                if not good:
                    return _fail(
                        name,
                        expected,
                        f"{surface.kind.value} (r={r},k={k}) gave {dims!r} vs closed form {closed}",
                    )
    return _ok(name, expected)


def criterion_wall_oracle() -> CheckResult:
    name = "wall-oracle"
    expected = "closed-form walls equal windowed brute force for c<=10; sigma+4f found for c=4"
    for surface in (K3, ABELIAN):
        for c in range(1, 11):
            fast = wall_set(c, surface).walls
            slow = brute_force_wall_set(c, surface)
            if fast != slow:
                return _fail(
                    name,
                    expected,
                    f"{surface.kind.value} c={c}: {list(fast)} vs brute force {list(slow)}",
                )
    found = find_suitable(4, K3)
    if found != DivisorClass(1, 4):
        return _fail(name, expected, f"find_suitable(4, K3) = {found!r}")
    ok, wall = is_suitable(DivisorClass(1, 3), 4, K3)
    if ok or wall != DivisorClass(2, -2):
        return _fail(name, expected, f"sigma+3f check gave ({ok}, {wall!r})")
    return _ok(name, expected)


def criterion_extension_regression() -> CheckResult:
    name = "extension-regression"
    expected = (
        "c2 = 2+2d for d in 1..5; the rank-1 sub has positive slope for a "
        "non-suitable polarisation and negative slope for every (2+2d)-suitable one"
    )
    bad_L = DivisorClass(2, 5)
    for d in range(1, 6):
        sub = DivisorClass(-1, d)
        # extension of the dual pair: c1 = 0 and c2 = sub . (-sub) = -(sub)^2
        c2 = -self_intersection(sub, K3)
        if c2 != -K3.sigma_self + 2 * d or c2 != 2 + 2 * d:
            return _fail(name, expected, f"d={d}: c2 = {c2}")
        c = 2 + 2 * d
        sub_triple = ChernTriple(1, sub, Fraction(self_intersection(sub, K3), 2))
        if not is_ample_model(bad_L, K3):
            return _fail(name, expected, "2 sigma + 5 f left the ample cone")
        if is_suitable(bad_L, c, K3)[0]:
            return _fail(name, expected, f"2 sigma + 5 f unexpectedly {c}-suitable")
        if slope(sub_triple, bad_L, K3) <= 0:
            return _fail(name, expected, f"d={d}: sub slope not positive for 2 sigma + 5 f")
        suitable_found = [find_suitable(c, K3)]
        suitable_found += [
            DivisorClass(1, n)
            for n in range(3, 26)
            if is_suitable(DivisorClass(1, n), c, K3)[0]
        ]
        if not suitable_found:
            return _fail(name, expected, f"no {c}-suitable polarisation found")
        for L in suitable_found:
            if slope(sub_triple, L, K3) >= 0:
                return _fail(
                    name, expected, f"d={d}: sub slope not negative for {L!r}"
                )
    return _ok(name, expected)


def _random_bundle(rng: random.Random, curve: EllipticCurve) -> FibreBundleClass:
    pts = curve_points(curve)
    blocks = []
    remaining = rng.randint(1, 6)
    while remaining > 0:
        m = rng.randint(1, remaining)
        blocks.append((rng.choice(pts), m))
        remaining -= m
    return FibreBundleClass(tuple(blocks))


def criterion_fibre_cohomology() -> CheckResult:
    name = "fibre-cohomology"
    expected = (
        "h0 = h1 = detected-block count for 100 random bundles over p in {5,7,11,13}, "
        "all twists, agreeing with the divisor-reduction oracle"
    )
    rng = random.Random(137)
    for p in _PRIMES:
        curve = EllipticCurve(p, 1, 1)
        pts = curve_points(curve)
        for _ in range(25):
            V = _random_bundle(rng, curve)
            for twist in pts:
                h0, h1 = h0_h1(V, twist, curve)
                if h0 != h1:
                    return _fail(name, expected, f"p={p}: chi != 0 at twist {twist!r}")
                matches = sum(
                    1
                    for q, _ in V.blocks
                    if point_neg(q, curve) == twist
                )
                if h1 != matches:
                    return _fail(
                        name, expected, f"p={p}: h1={h1} but {matches} blocks match"
                    )
                if (h0, h1) != oracle_h0_h1(V, twist, curve):
                    return _fail(
                        name,
                        expected,
                        f"p={p}: oracle disagrees at twist {twist!r} for {V!r}",
                    )
    return _ok(name, expected)


def criterion_spectral_divisor() -> CheckResult:
    name = "spectral-divisor"
    expected = (
        "20 random constant families: support at the negated block points with "
        "Jordan-Holder multiplicities, class r sigma_hat"
    )
    rng = random.Random(2024)
    for i in range(20):
        p = rng.choice(_PRIMES)
        base = EllipticCurve(rng.choice(_PRIMES), 1, 1)
        fibre = EllipticCurve(p, 1, 1)
        V = _random_bundle(rng, fibre)
        family = ProductFamily(base, fibre, V)
        sd = spectral_divisor(family)
        predicted: dict = {}
        for q, _ in V.blocks:
            w = point_neg(q, fibre)
            predicted[w] = jordan_holder_multiplicity(V, q)
        if dict(sd.horizontal) != predicted or sd.vertical:
            return _fail(name, expected, f"family {i}: {sd!r} vs predicted {predicted}")
        for pt in curve_points(fibre):
            jumps = h0_h1(V, pt, fibre)[1] > 0
            if jumps != (pt in predicted):
                return _fail(name, expected, f"family {i}: jump scan mismatch at {pt!r}")
        triple = ChernTriple(V.rank, DivisorClass(0, 0), Fraction(0))
        if sd.divisor_class() != fm_transform_ch(triple, ABELIAN).c1:
            return _fail(name, expected, f"family {i}: class {sd.divisor_class()!r}")
        if sum(m for _, m in sd.horizontal) != V.rank:
            return _fail(name, expected, f"family {i}: multiplicities lost rank")
    return _ok(name, expected)


_TRICHOTOMY_CLASSES = [
    DivisorClass(1, 0),
    DivisorClass(1, 0),
    DivisorClass(0, 1),
    DivisorClass(0, 1),
    DivisorClass(0, 1),
]


def _trichotomy_model(degrees: tuple[int, ...]):
    return construct_from_spectral(
        ABELIAN, list(_TRICHOTOMY_CLASSES), list(degrees)
    )


def criterion_stability_trichotomy() -> CheckResult:
    name = "stability-trichotomy"
    expected = (
        "(2,1,1,1,1) stable, (2,2,1,1,0) semistable-fibre-only at chi_sub=0, "
        "(4,2,0,0,0) unstable at chi_sub=+1; all [0,4] degree vectors summing to 6 "
        "agree with the brute-force classifier"
    )
    pinned = [
        ((2, 1, 1, 1, 1), Verdict.STABLE, None, None),
        ((2, 2, 1, 1, 0), Verdict.SEMISTABLE_FIBRE_ONLY, (0, 1, 2, 3), 0),
        ((4, 2, 0, 0, 0), Verdict.UNSTABLE, (0,), 1),
    ]
    for degrees, want, witness, chi in pinned:
        verdict = stability_verdict(_trichotomy_model(degrees), _L_AB)
        if verdict.verdict != want:
            return _fail(name, expected, f"{degrees}: verdict {verdict.verdict.value}")
        if witness is not None and (
            verdict.witness != witness or verdict.witness_chi != chi
        ):
            return _fail(
                name,
                expected,
                f"{degrees}: witness {verdict.witness} chi {verdict.witness_chi}",
            )
    incidence = [
        [intersect(ci, cj, ABELIAN) for cj in _TRICHOTOMY_CLASSES]
        for ci in _TRICHOTOMY_CLASSES
    ]

    def vectors():
        for d0 in range(5):
            for d1 in range(5):
                for d2 in range(5):
                    for d3 in range(5):
                        d4 = 6 - d0 - d1 - d2 - d3
                        if 0 <= d4 <= 4:
                            yield (d0, d1, d2, d3, d4)

    for degrees in vectors():
        fast = stability_verdict(_trichotomy_model(degrees), _L_AB).verdict.value
        slow = brute_force_verdict(
            list(_TRICHOTOMY_CLASSES), list(degrees), incidence, _L_AB, ABELIAN
        )
        if fast != slow:
            return _fail(name, expected, f"{degrees}: {fast} vs brute force {slow}")
    return _ok(name, expected)


def criterion_duality_generators() -> CheckResult:
    name = "duality-generators"
    expected = (
        "all three generators agree along both composite routes and the direct "
        "transform; the rank/charge swap is an involution and preserves total dimension"
    )
    report = verify_diagram_generators()
    want = {
        GeneratorTag.STRUCTURE_SHEAF: GeneratorObject(GeneratorTag.SKYSCRAPER_POINT, 2),
        GeneratorTag.SKYSCRAPER_POINT: GeneratorObject(GeneratorTag.FLAT_LINE_BUNDLE, 0),
        GeneratorTag.FLAT_LINE_BUNDLE: GeneratorObject(GeneratorTag.SKYSCRAPER_POINT, 2),
    }
    for check in report.checks:
        if not check.match or check.path_b != want[check.generator]:
            return _fail(
                name, expected, f"{check.generator.value}: {check.path_a.label()} vs {check.path_b.label()}"
            )
    if not report.matrix_square_is_minus_identity:
        return _fail(name, expected, "fibre-pair matrix square is not minus the identity")
    for r in _GRID:
        for k in _GRID:
            triple = ChernTriple(r, DivisorClass(0, 0), Fraction(-k))
            if mukai_nahm_ch(mukai_nahm_ch(triple)) != triple:
                return _fail(name, expected, f"swap not involutive at (r={r},k={k})")
            if not nahm_bijection_check(ModuliDescriptor(ABELIAN, r, k)):
                return _fail(name, expected, f"bijection numerology failed at (r={r},k={k})")
    return _ok(name, expected)


GOLDEN_REQUESTS = [
    {"command": "lattice", "payload": {"kind": "k3", "op": "intersect", "d1": {"a": 2, "b": 3}, "d2": {"a": 2, "b": 3}}},
    {"command": "lattice", "payload": {"kind": "k3", "op": "walls", "c": 4}},
    {"command": "suitable", "payload": {"kind": "k3", "L": {"a": 1, "b": 3}, "c": 4}},
    {"command": "suitable", "payload": {"kind": "k3", "L": {"a": 1, "b": 4}, "c": 4}},
    {"command": "transform", "payload": {"rank": 2, "c1": {"a": 0, "b": 0}, "ch2_times_2": -6}},
    {"command": "transform", "payload": {"op": "nahm", "rank": 2, "c1": {"a": 0, "b": 0}, "ch2_times_2": -6}},
    {
        "command": "spectral",
        "payload": {
            "base_curve": {"p": 5, "a": 1, "b": 1},
            "fibre_curve": {"p": 5, "a": 1, "b": 1},
            "blocks": [{"q": {"x": 0, "y": 1}, "m": 2}],
        },
    },
    {
        "command": "stability",
        "payload": {
            "kind": "abelian",
            "L": {"a": 1, "b": 1},
            "components": [
                {"class": {"a": 1, "b": 0}, "degree": 2},
                {"class": {"a": 1, "b": 0}, "degree": 1},
                {"class": {"a": 0, "b": 1}, "degree": 1},
                {"class": {"a": 0, "b": 1}, "degree": 1},
                {"class": {"a": 0, "b": 1}, "degree": 1},
            ],
        },
    },
    {"command": "dimensions", "payload": {"kind": "abelian", "r": 2, "k": 3}},
    {"command": "duality", "payload": {}},
]

# frozen canonical report lines for GOLDEN_REQUESTS (regenerate loudly, never silently)
GOLDEN_REPORTS: list[str] = [
    '{"failures":[],"ok":true,"results":[{"intersection":4,"op":"intersect"}]}',
    '{"failures":[],"ok":true,"results":[{"c":4,"op":"walls","walls":[{"a":2,"b":-2},{"a":2,"b":0},{"a":4,"b":2}]}]}',
    '{"failures":[],"ok":true,"results":[{"suitable":false,"wall":{"a":2,"b":-2}}]}',
    '{"failures":[],"ok":true,"results":[{"suitable":true,"wall":null}]}',
    '{"failures":[],"ok":true,"results":[{"op":"fm","triple":{"c1":{"a":2,"b":3},"ch2_times_2":0,"rank":0}}]}',
    '{"failures":[],"ok":true,"results":[{"op":"nahm","triple":{"c1":{"a":0,"b":0},"ch2_times_2":-4,"rank":3}}]}',
    '{"failures":[],"ok":true,"results":[{"class":{"a":2,"b":0},"horizontal":[{"mult":2,"w_hat":{"x":0,"y":4}}],"vertical":[]}]}',
    '{"failures":[],"ok":true,"results":[{"chi_sub":null,"classification":"mu-stable locally free","verdict":"stable","witness":null}]}',
    '{"failures":[],"ok":true,"results":[{"base_dim":7,"double_fibration":true,"fibre_dim":7,"genus":7,"k":3,"lagrangian":true,"nahm":true,"r":2,"surface":"abelian","total_dim":14}]}',
    '{"failures":[],"ok":true,"results":[{"all_match":true,"checks":[{"generator":"StructureSheaf","match":true,"path_a":"SkyscraperPoint(wit 2)","path_b":"SkyscraperPoint(wit 2)"},{"generator":"SkyscraperPoint","match":true,"path_a":"FlatLineBundle(wit 0)","path_b":"FlatLineBundle(wit 0)"},{"generator":"FlatLineBundle","match":true,"path_a":"SkyscraperPoint(wit 2)","path_b":"SkyscraperPoint(wit 2)"},{"generator":"fibre_pair_matrix","match":true,"path_a":"forward twice","path_b":"minus identity"}]}]}',
]


def golden_request_lines() -> list[str]:
    return [dispatch.canonical_dumps(req) for req in GOLDEN_REQUESTS]


def criterion_cli_determinism() -> CheckResult:
    name = "cli-determinism"
    expected = "the 10-request golden batch renders byte-identically, twice, matching the frozen reports"
    lines = golden_request_lines()
    first = dispatch.batch_lines(lines)
    second = dispatch.batch_lines(lines)
    if first != second:
        return _fail(name, expected, "two in-process runs differed")
    if len(first) != len(GOLDEN_REPORTS):
        return _fail(
            name, expected, f"{len(first)} reports vs {len(GOLDEN_REPORTS)} frozen"
        )
    for i, (got, want) in enumerate(zip(first, GOLDEN_REPORTS)):
        if got != want:
            return _fail(name, expected, f"report {i} differs from frozen golden")
    return _ok(name, expected)


CRITERIA = (
    criterion_transform_character,
    criterion_lagrangian_identity,
    criterion_wall_oracle,
    criterion_extension_regression,
    criterion_fibre_cohomology,
    criterion_spectral_divisor,
    criterion_stability_trichotomy,
    criterion_duality_generators,
    criterion_cli_determinism,
)


def run_all() -> list[CheckResult]:
    """Run every acceptance criterion in order."""
    return [criterion() for criterion in CRITERIA]
