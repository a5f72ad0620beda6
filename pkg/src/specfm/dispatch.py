"""Request dispatch: one JSON request in, one JSON report out.

Requests are ``{"command": ..., "payload": {...}}``.  Reports are
``{"ok": bool, "results": [...], "failures": [...]}`` with ``ok`` true
exactly when there are no failures.  All handlers are pure and
deterministic, so identical request streams render byte-identical report
streams.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from typing import Any

from . import chern_fm, jsonio, lattice, moduli, simpson, spectral
from .jsonio import SchemaError, canonical_dumps
from .lattice import SurfaceModel

__all__ = ["COMMANDS", "execute_request", "run_command", "render_report", "batch_lines"]

COMMANDS = (
    "lattice",
    "suitable",
    "transform",
    "spectral",
    "stability",
    "dimensions",
    "duality",
    "verify",
)

_FALLBACK_KIND = "k3"


def _surface_of(payload: dict, default_kind: str | None) -> SurfaceModel:
    kind = payload.get("kind", default_kind or _FALLBACK_KIND)
    return jsonio.decode_surface(kind)


def _cmd_lattice(payload: dict, surface: SurfaceModel) -> dict:
    op = payload.get("op", "intersect")
    if op == "intersect":
        d1 = jsonio.decode_divisor(payload.get("d1"), "d1")
        d2 = jsonio.decode_divisor(payload.get("d2"), "d2")
        return {"op": op, "intersection": lattice.intersect(d1, d2, surface)}
    if op == "genus":
        d1 = jsonio.decode_divisor(payload.get("d1"), "d1")
        return {"op": op, "genus": lattice.arithmetic_genus(d1, surface)}
    if op == "linear_system":
        d1 = jsonio.decode_divisor(payload.get("d1"), "d1")
        dims = lattice.linear_system_dims(d1, surface)
        return {
            "op": op,
            "h0": dims.h0,
            "projectivization_dim": dims.projectivization_dim,
            "base_dim": dims.base_dim,
        }
    if op == "ample":
        d1 = jsonio.decode_divisor(payload.get("d1"), "d1")
        return {"op": op, "ample": lattice.is_ample_model(d1, surface)}
    if op == "walls":
        c = payload.get("c")
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise SchemaError("walls op needs a positive integer c")
        ws = lattice.wall_set(c, surface)
        return {"op": op, "c": c, "walls": jsonio.encode_wall_set(ws)}
    if op == "find_suitable":
        c = payload.get("c")
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise SchemaError("find_suitable op needs a positive integer c")
        found = lattice.find_suitable(c, surface)
        return {"op": op, "c": c, "polarization": jsonio.encode_divisor(found)}
    raise SchemaError(f"unknown lattice op {op!r}")


def _cmd_suitable(payload: dict, surface: SurfaceModel) -> dict:
    L = jsonio.decode_divisor(payload.get("L"), "L")
    c = payload.get("c")
    if not isinstance(c, int) or isinstance(c, bool) or c < 1:
        raise SchemaError("suitable needs a positive integer c")
    ok, wall = lattice.is_suitable(L, c, surface)
    return {
        "suitable": ok,
        "wall": jsonio.encode_divisor(wall) if wall is not None else None,
    }


def _cmd_transform(payload: dict, surface: SurfaceModel) -> dict:
    op = payload.get("op", "fm")
    if op == "fm":
        triple = jsonio.decode_chern(payload)
        return {"op": op, "triple": jsonio.encode_chern(chern_fm.fm_transform_ch(triple, surface))}
    if op == "nahm":
        triple = jsonio.decode_chern(payload)
        return {"op": op, "triple": jsonio.encode_chern(chern_fm.mukai_nahm_ch(triple))}
    if op == "fibre_pair":
        rank = payload.get("rank")
        degree = payload.get("fibre_degree")
        direction = payload.get("direction", "forward")
        if not isinstance(rank, int) or not isinstance(degree, int):
            raise SchemaError("fibre_pair needs integer rank and fibre_degree")
        if direction not in ("forward", "inverse"):
            raise SchemaError('direction must be "forward" or "inverse"')
        out = chern_fm.fibre_pair_transform(
            chern_fm.FibrePair(rank, degree), direction
        )
        return {"op": op, "rank": out.rank, "fibre_degree": out.fibre_degree}
    raise SchemaError(f"unknown transform op {op!r}")


def _cmd_spectral(payload: dict, surface: SurfaceModel) -> dict:
    family = jsonio.decode_family(payload)
    sd = spectral.spectral_divisor(family)
    return jsonio.encode_spectral_divisor(sd)


def _cmd_stability(payload: dict, surface: SurfaceModel) -> dict:
    model = jsonio.decode_model(payload, default_surface=surface)
    L = jsonio.decode_divisor(payload.get("L"), "L")
    verdict = simpson.stability_verdict(model, L)
    out = jsonio.encode_verdict(verdict)
    out["classification"] = simpson.transform_classification(verdict)
    return out


def _cmd_dimensions(payload: dict, surface: SurfaceModel) -> dict:
    r = payload.get("r")
    k = payload.get("k")
    if not isinstance(r, int) or not isinstance(k, int):
        raise SchemaError("dimensions needs integer r and k")
    descriptor = moduli.ModuliDescriptor(surface, r, k)
    dims = moduli.fibration_dimensions(descriptor)
    report = {
        "surface": jsonio.encode_surface(surface),
        "r": r,
        "k": k,
        "base_dim": dims.base_dim,
        "fibre_dim": dims.fibre_dim,
        "genus": dims.genus,
        "total_dim": dims.total_dim,
        "lagrangian": moduli.lagrangian_check(descriptor),
        "nahm": None,
        "double_fibration": None,
    }
    if surface.is_abelian:
        report["nahm"] = moduli.nahm_bijection_check(descriptor)
        report["double_fibration"] = moduli.double_fibration_check(descriptor)
    return report


def _cmd_duality(payload: dict, surface: SurfaceModel) -> dict:
    report = chern_fm.verify_diagram_generators()
    checks = [
        {
            "generator": check.generator.value,
            "path_a": check.path_a.label(),
            "path_b": check.path_b.label(),
            "match": check.match,
        }
        for check in report.checks
    ]
    checks.append(
        {
            "generator": "fibre_pair_matrix",
            "path_a": "forward twice",
            "path_b": "minus identity",
            "match": report.matrix_square_is_minus_identity,
        }
    )
    return {"checks": checks, "all_match": report.all_match}


_HANDLERS = {
    "lattice": _cmd_lattice,
    "suitable": _cmd_suitable,
    "transform": _cmd_transform,
    "spectral": _cmd_spectral,
    "stability": _cmd_stability,
    "dimensions": _cmd_dimensions,
    "duality": _cmd_duality,
}


def _report(results: list, failures: list) -> dict:
    return {"ok": not failures, "results": results, "failures": failures}


def _failure(check: str, expected: str, got: str) -> dict:
    return {"check": check, "expected": expected, "got": got}


def run_command(command: Any, payload: Any, default_kind: str | None = None) -> dict:
    """Execute one command and build its report."""
    if command == "verify":
        from . import verify  # deferred: verify drives this module for its CLI check

        checks = verify.run_all()
        results = [{"check": c.check, "ok": c.ok} for c in checks]
        failures = [
            _failure(c.check, c.expected, c.got) for c in checks if not c.ok
        ]
        return _report(results, failures)
    if command not in _HANDLERS:
        return _report(
            [],
            [
                _failure(
                    "schema",
                    "command in " + "/".join(COMMANDS),
                    canonical_dumps(command),
                )
            ],
        )
    if payload is None:
        payload = {}
    if not isinstance(payload, dict):
        return _report(
            [], [_failure("schema", "payload must be an object", canonical_dumps(payload))]
        )
    try:
        surface = _surface_of(payload, default_kind)
        result = _HANDLERS[command](payload, surface)
    except (SchemaError, ValueError) as exc:
        return _report(
            [], [_failure("schema", "payload satisfying the documented preconditions", str(exc))]
        )
    return _report([result], [])


def execute_request(obj: Any, default_kind: str | None = None) -> dict:
    if not isinstance(obj, dict) or "command" not in obj:
        return _report(
            [],
            [
                _failure(
                    "schema",
                    'request object with a "command" field',
                    canonical_dumps(obj),
                )
            ],
        )
    return run_command(obj["command"], obj.get("payload"), default_kind)


def render_report(report: dict) -> str:
    return canonical_dumps(report)


def _process_line(line: str, default_kind: str | None) -> str:
    stripped = line.strip()
    if not stripped:
        return ""
    try:
        obj = json.loads(stripped)
    except json.JSONDecodeError:
        return render_report(
            _report([], [_failure("schema", "one JSON request per line", "invalid JSON")])
        )
    return render_report(execute_request(obj, default_kind))


def batch_lines(
    lines: list[str], jobs: int = 1, default_kind: str | None = None
) -> list[str]:
    """Evaluate newline-delimited requests, preserving input order.

    Requests are independent; with ``jobs > 1`` they are evaluated
    concurrently but emitted in input order.  Blank lines are skipped.
    Malformed lines yield failure reports instead of aborting the batch.
    """
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rendered = list(pool.map(lambda ln: _process_line(ln, default_kind), lines))
    else:
        rendered = [_process_line(ln, default_kind) for ln in lines]
    return [r for r in rendered if r]
