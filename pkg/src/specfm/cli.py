"""Batch front-end: newline-delimited JSON requests in, JSON reports out.

Usage::

    specfm --in requests.ndjson --out reports.ndjson
    echo '{"command":"verify"}' | specfm
    specfm verify
    specfm transform --payload '{"rank":2,"c1":{"a":0,"b":0},"ch2_times_2":-6}'

Exit codes: 0 on success, 1 when a ``verify`` check fails, 2 on usage or
schema errors.  Reports are canonical JSON (sorted keys, no floats, no
timestamps), so identical inputs produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dispatch import COMMANDS, batch_lines, render_report, run_command

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specfm",
        description="exact spectral-data computations, batch JSON in/out",
    )
    parser.add_argument(
        "command",
        nargs="?",
        choices=COMMANDS,
        help="run a single command instead of reading a request batch",
    )
    parser.add_argument(
        "--payload",
        default="{}",
        help="JSON payload for the single-command form (default: {})",
    )
    parser.add_argument(
        "--surface",
        choices=("k3", "abelian"),
        default=None,
        help="surface kind used when a payload does not carry one",
    )
    parser.add_argument("--in", dest="infile", default=None, help="request file (default stdin)")
    parser.add_argument("--out", dest="outfile", default=None, help="report file (default stdout)")
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="evaluate batch requests concurrently; output stays in input order",
    )
    return parser


def _severity(report: dict) -> int:
    if report["ok"]:
        return 0
    if any(f["check"] == "schema" for f in report["failures"]):
        return 2
    return 1


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.jobs < 1:
        print("--jobs must be at least 1", file=sys.stderr)
        return 2

    out = open(args.outfile, "w", encoding="utf-8") if args.outfile else sys.stdout
    try:
        if args.command is not None:
            try:
                payload = json.loads(args.payload)
            except json.JSONDecodeError:
                print("--payload must be valid JSON", file=sys.stderr)
                return 2
            report = run_command(args.command, payload, default_kind=args.surface)
            out.write(render_report(report) + "\n")
            return _severity(report)

        if args.infile:
            with open(args.infile, "r", encoding="utf-8") as fh:
                lines = fh.readlines()
        else:
            lines = sys.stdin.readlines()
        rendered = batch_lines(lines, jobs=args.jobs, default_kind=args.surface)
        code = 0
        for line in rendered:
            out.write(line + "\n")
            code = max(code, _severity(json.loads(line)))
        return code
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
