"""End-to-end acceptance checks, one test per criterion.

Every check prints its own pass/fail line so the suite reads as a checklist
under ``pytest -v -s``; the same checks back the ``verify`` CLI command.
"""

import pytest

from specfm import verify


@pytest.mark.parametrize(
    "criterion",
    verify.CRITERIA,
    ids=[c.__name__.removeprefix("criterion_") for c in verify.CRITERIA],
)
def test_acceptance(criterion):
    result = criterion()
    print(f"ACCEPTANCE {result.check}: {'PASS' if result.ok else 'FAIL'}")
    assert result.ok, f"{result.check}: expected {result.expected}; got {result.got}"


def test_suite_is_deterministic():
    first = [(r.check, r.ok, r.expected, r.got) for r in verify.run_all()]
    second = [(r.check, r.ok, r.expected, r.got) for r in verify.run_all()]
    assert first == second
