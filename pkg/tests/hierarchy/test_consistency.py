from fractions import Fraction

import pytest

from rspin.hierarchy import (
    ConsistencyCase,
    check_flow_grid,
    check_presentation_consistency,
    flow_standard,
    flow_tilde,
)


@pytest.mark.parametrize("r", [2, 3])
def test_given_flow_grid_when_checked_then_every_case_passes(r):
    report = check_flow_grid(r, 2)

    assert report.passed
    assert len(report.cases) == 3 * r
    assert report.lines()[0] == f"r={r} a=0 m=0 : PASS"


def test_given_single_case_when_checked_then_uses_change_of_variables_coefficient():
    report = check_presentation_consistency(3, 1, 0)

    assert report.passed
    assert report.cases[0].coefficient == Fraction(-3)
    assert str(report) == "r=3 a=1 m=0 : PASS"


def test_given_failing_case_when_rendered_then_lists_both_flows(kdv_lax):
    case = ConsistencyCase(
        2, 1, 0, Fraction(-2), False, flow_standard(kdv_lax, 1, 0), flow_tilde(kdv_lax, 0)
    )

    lines = case.lines()

    assert lines[0] == "r=2 a=1 m=0 : FAIL"
    assert lines[1].startswith("  standard: du0/dt = ")
    assert lines[2] == "  tilde (times -2): du0/dt = u0_1"


def test_given_report_when_to_dict_called_then_nests_cases():
    data = check_flow_grid(2, 0).to_dict()

    assert data["passed"] is True
    assert [case["m"] for case in data["cases"]] == [0, 1]
    assert data["cases"][0]["coefficient"] == "1"


def test_given_negative_max_a_when_grid_checked_then_raises_value_error():
    with pytest.raises(ValueError, match="max_a"):
        check_flow_grid(2, -1)
