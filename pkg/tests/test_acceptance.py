"""Acceptance battery: one pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` or directly with
``python3 tests/test_acceptance.py``.  All comparisons are exact.
"""
import sys

import pytest

from kronpoly.suites import CHECKS, run_check

# exact values each criterion must report, on top of its own pass/fail verdict
EXPECTED = {
    1: {"syt": 42, "additive": 36, "relaxations": 17, "compatible": 8, "compatible_all_additive": True},
    2: {"violations": 0},
    3: {"facets": 17, "not_tight": 0},
    4: {"n_max": 12, "failures": 0},
    5: {"oracle_mismatches": 0, "quasipoly_mismatches": 0, "quasi_n_max": 60},
    6: {"named_triples": 4, "failures": 0},
    7: {"mismatches": 0, "not_reached": 0},
    8: {"orthogonality_failures": 0, "symmetry_failures": 0, "monotonicity_failures": 0,
        "semigroup_failures": 0, "determinant_twist_failures": 0, "equivalence_failures": 0},
}


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(CHECKS))
def test_criterion(number, capsys):
    result = run_check(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.as_json()
    for key, value in EXPECTED[number].items():
        assert result.details[key] == value, (key, result.details[key])
    if number == 3:
        assert result.details["checked"] == result.details["valid"] > 0
    if number == 7:
        assert result.details["cases"] > 0


def main() -> int:
    failed = 0
    for number in sorted(CHECKS):
        result = run_check(number)
        result.passed = result.passed and all(
            result.details.get(k) == v for k, v in EXPECTED[number].items())
        print(result.line())
        failed += not result.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
