import pytest

from rspin.diffalg import DiffPolynomial
from rspin.errors import LaxFormError
from rspin.hierarchy import DEFAULT_DEPTH_OFFSET, LaxOperator, build_lax, default_depth
from rspin.psido import PseudoDiffOp


def test_given_r_two_when_build_lax_called_then_returns_kdv_operator(kdv_lax):
    assert kdv_lax.r == 2
    assert str(kdv_lax) == "(1)*D^2 + (-u0)*D^0"


def test_given_r_four_when_build_lax_called_then_has_one_field_per_lower_order():
    lax = build_lax(4)

    assert lax.op.orders() == [4, 2, 1, 0]
    for m in range(3):
        assert lax.op.coefficient(m) == -lax.field(m)
    assert lax.op.coefficient(3).is_zero


def test_given_r_below_two_when_build_lax_called_then_raises_value_error():
    with pytest.raises(ValueError, match="Root index"):
        build_lax(1)


def test_given_wrong_field_sign_when_lax_operator_built_then_raises_lax_form_error():
    op = PseudoDiffOp(
        2, {2: DiffPolynomial.constant(1, 2), 0: DiffPolynomial.variable(0, 0, 2)}
    )

    with pytest.raises(LaxFormError, match="must be -u0"):
        LaxOperator(2, op)


def test_given_operator_for_other_r_when_lax_operator_built_then_raises_lax_form_error(boussinesq_lax):
    with pytest.raises(LaxFormError, match="expected r=2"):
        LaxOperator(2, boussinesq_lax.op)


def test_given_flow_indices_when_default_depth_called_then_covers_plus_part():
    assert default_depth(2, 0, 0) == 2 + DEFAULT_DEPTH_OFFSET
    assert default_depth(2, 4, 1, depth_offset=0) == 10
    assert default_depth(3, 1, 1, depth_offset=2) == 5
