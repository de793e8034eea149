"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line with the measured quantities
(run with ``pytest -s tests/test_acceptance.py`` to see them).
"""
import pytest

from kerr_tavis import verification as v

RESULTS: list[str] = []

CHECKS = [
    ("1", v.oracle_equivalence),
    ("2", v.conservation),
    ("3", v.entropy_consistency),
    ("4", v.initial_identities),
    ("5", v.squeezing_floor),
    ("6", v.collapse_revival),
    ("7", v.husimi_normalization),
    ("8", v.cat_structure),
    ("9a", v.closed_form_roots),
    ("9b", v.literal_polynomial_residual),
    ("S", v.oracle_spot_check_m50),
]


@pytest.mark.parametrize("key,check", CHECKS, ids=[k for k, _ in CHECKS])
def test_criterion(key, check):
    res = check()
    print(res.line())
    RESULTS.append(res.line())
    assert res.key == key
    assert res.passed, res.line()


def test_small_verify_runtime():
    res = v.run_verify("small")
    print(res[0].line())
    assert all(r.passed for r in res)
    assert sum(r.seconds for r in res) < 60
