"""Canonical JSON encoding and strict decoding for every wire type.

Serialisation is deterministic by construction: keys are sorted, separators
are fixed, and no floats ever appear (rational values travel as two-integer
``[numerator, denominator]`` pairs, half-integers as doubled integers).
Decoders validate shape and types and raise ``SchemaError`` with a stable
message, so malformed requests produce reproducible failure reports.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .chern_fm import ChernTriple
from .elliptic_fibre import INFINITY, CurvePoint, EllipticCurve, FibreBundleClass
from .lattice import ABELIAN, K3, DivisorClass, SurfaceModel, WallSet
from .simpson import StabilityVerdict, TorsionSheafModel
from .spectral import ProductFamily, SpectralDivisor

__all__ = [
    "SchemaError",
    "canonical_dumps",
    "encode_fraction",
    "encode_divisor",
    "decode_divisor",
    "decode_surface",
    "encode_surface",
    "encode_wall_set",
    "encode_chern",
    "decode_chern",
    "encode_point",
    "decode_point",
    "encode_curve",
    "decode_curve",
    "encode_blocks",
    "decode_blocks",
    "decode_family",
    "encode_spectral_divisor",
    "decode_model",
    "encode_verdict",
]


class SchemaError(ValueError):
    """A request or payload does not match its documented schema."""


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def encode_fraction(fr: Fraction) -> list[int]:
    return [fr.numerator, fr.denominator]


def _require(obj: Any, keys: set[str], what: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(f"{what} must be an object")
    missing = keys - set(obj)
    if missing:
        raise SchemaError(f"{what} is missing {sorted(missing)}")
    return obj


def _int_field(obj: dict, key: str, what: str) -> int:
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(f"{what}.{key} must be an integer")
    return value


def encode_divisor(d: DivisorClass) -> dict:
    return {"a": d.a, "b": d.b}


def decode_divisor(obj: Any, what: str = "divisor") -> DivisorClass:
    _require(obj, {"a", "b"}, what)
    return DivisorClass(_int_field(obj, "a", what), _int_field(obj, "b", what))


def decode_surface(value: Any) -> SurfaceModel:
    if value == "k3":
        return K3
    if value == "abelian":
        return ABELIAN
    raise SchemaError('surface kind must be "k3" or "abelian"')


def encode_surface(s: SurfaceModel) -> str:
    return s.kind.value


def encode_wall_set(ws: WallSet) -> list[dict]:
    return [encode_divisor(w) for w in ws.walls]


def encode_chern(t: ChernTriple) -> dict:
    return {
        "rank": t.rank,
        "c1": encode_divisor(t.c1),
        "ch2_times_2": t.ch2_times_2,
    }


def decode_chern(obj: Any, what: str = "triple") -> ChernTriple:
    _require(obj, {"rank", "c1", "ch2_times_2"}, what)
    try:
        return ChernTriple(
            _int_field(obj, "rank", what),
            decode_divisor(obj["c1"], f"{what}.c1"),
            Fraction(_int_field(obj, "ch2_times_2", what), 2),
        )
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def encode_point(pt: CurvePoint) -> Any:
    if pt.is_infinity:
        return "O"
    return {"x": pt.x, "y": pt.y}


def decode_point(obj: Any, what: str = "point") -> CurvePoint:
    if obj == "O":
        return INFINITY
    _require(obj, {"x", "y"}, what)
    return CurvePoint(_int_field(obj, "x", what), _int_field(obj, "y", what))


def encode_curve(c: EllipticCurve) -> dict:
    return {"p": c.p, "a": c.a, "b": c.b}


def decode_curve(obj: Any, what: str = "curve") -> EllipticCurve:
    _require(obj, {"p", "a", "b"}, what)
    try:
        return EllipticCurve(
            _int_field(obj, "p", what),
            _int_field(obj, "a", what),
            _int_field(obj, "b", what),
        )
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def encode_blocks(V: FibreBundleClass) -> list[dict]:
    return [{"q": encode_point(q), "m": m} for q, m in V.blocks]


def decode_blocks(obj: Any, what: str = "blocks") -> FibreBundleClass:
    if not isinstance(obj, list) or not obj:
        raise SchemaError(f"{what} must be a nonempty array")
    blocks = []
    for i, entry in enumerate(obj):
        _require(entry, {"q", "m"}, f"{what}[{i}]")
        blocks.append(
            (decode_point(entry["q"], f"{what}[{i}].q"), _int_field(entry, "m", f"{what}[{i}]"))
        )
    try:
        return FibreBundleClass(tuple(blocks))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def decode_family(obj: Any) -> ProductFamily:
    _require(obj, {"base_curve", "fibre_curve", "blocks"}, "family")
    try:
        return ProductFamily(
            base_curve=decode_curve(obj["base_curve"], "family.base_curve"),
            fibre_curve=decode_curve(obj["fibre_curve"], "family.fibre_curve"),
            fibre_class=decode_blocks(obj["blocks"], "family.blocks"),
        )
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def encode_spectral_divisor(sd: SpectralDivisor) -> dict:
    return {
        "horizontal": [
            {"w_hat": encode_point(pt), "mult": m} for pt, m in sd.horizontal
        ],
        "vertical": [{"v": encode_point(pt), "mult": m} for pt, m in sd.vertical],
        "class": encode_divisor(sd.divisor_class()),
    }


def decode_model(obj: Any, default_surface: SurfaceModel | None = None) -> TorsionSheafModel:
    _require(obj, {"components"}, "model")
    if "kind" in obj:
        surface = decode_surface(obj["kind"])
    elif default_surface is not None:
        surface = default_surface
    else:
        raise SchemaError("model needs a surface kind")
    comps = obj["components"]
    if not isinstance(comps, list) or not comps:
        raise SchemaError("model.components must be a nonempty array")
    components = []
    for i, entry in enumerate(comps):
        _require(entry, {"class", "degree"}, f"model.components[{i}]")
        components.append(
            (
                decode_divisor(entry["class"], f"model.components[{i}].class"),
                _int_field(entry, "degree", f"model.components[{i}]"),
            )
        )
    incidence = obj.get("incidence")
    if incidence is not None:
        if not isinstance(incidence, list) or not all(
            isinstance(row, list) for row in incidence
        ):
            raise SchemaError("model.incidence must be a matrix")
        incidence = tuple(tuple(int(x) for x in row) for row in incidence)
    reduced = obj.get("reduced", True)
    if not isinstance(reduced, bool):
        raise SchemaError("model.reduced must be a boolean")
    try:
        return TorsionSheafModel(
            surface=surface,
            components=tuple(components),
            incidence=incidence,
            reduced=reduced,
        )
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def encode_verdict(v: StabilityVerdict) -> dict:
    return {
        "verdict": v.verdict.value,
        "witness": list(v.witness) if v.witness is not None else None,
        "chi_sub": v.witness_chi,
    }
