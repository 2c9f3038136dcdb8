"""Acceptance gate: the eight criteria, each in exact arithmetic.

The suite runs once through ``orbindex verify --suite catalog`` (the same
entry point as the command line); each test then prints one line
``criterion N: PASS|FAIL ...``.  Run with ``pytest tests/test_acceptance.py -s``
to see the lines.
"""
import io
import json

import pytest

from conftest import ACCEPTANCE_LINES
from orbindex.cli import run
from orbindex.verify import CRITERIA, run_criterion


@pytest.fixture(scope="module")
def suite():
    out, err = io.StringIO(), io.StringIO()
    code = run(["verify", "--suite", "catalog", "--format", "json"], out=out, err=err)
    doc = json.loads(out.getvalue())
    return code, {c["criterion"]: c for c in doc["criteria"]}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(suite, number):
    _code, results = suite
    r = results[number]
    status = "PASS" if r["passed"] else "FAIL"
    line = f"criterion {number}: {status}  {r['title']}  ({r['cases']} cases)"
    ACCEPTANCE_LINES.append(line)
    print("\n" + line)
    for f in r["failures"][:20]:
        print(f"    failing: {f}")
    assert r["cases"] > 0
    assert r["passed"]


def test_verify_exit_code(suite):
    code, results = suite
    assert sorted(results) == sorted(CRITERIA)
    assert code == (0 if all(r["passed"] for r in results.values()) else 2)


def test_criterion_result_line():
    line = run_criterion(8).line()
    assert line.startswith("criterion 8: PASS")
