from unittest.mock import patch

import pytest
import sympy

from rspin.diffalg import DiffPolynomial
from rspin.errors import FlowOrderError, TruncationError
from rspin.hierarchy import flows
from rspin.hierarchy import (
    FlowIndex,
    build_lax,
    flow_commutator,
    flow_derivative,
    flow_standard,
    flow_tilde,
    flows_commute,
    standard_prefactor,
    tilde_prefactor,
)
from rspin.hierarchy.flows import STANDARD, TILDE
from rspin.psido import PseudoDiffOp


def test_given_kdv_when_tilde_flow_two_computed_then_returns_kdv_equation(kdv_lax):
    result = flow_tilde(kdv_lax, 2)

    assert result.presentation == TILDE
    assert result.equations() == ["du0/dt = -1/24*u0_3 - 1/2*u0*u0_1"]


def test_given_tilde_index_zero_when_flow_computed_then_returns_translation(kdv_lax, boussinesq_lax):
    assert flow_tilde(kdv_lax, 0).equations() == ["du0/dt = u0_1"]
    assert flow_tilde(boussinesq_lax, 0).equations() == ["du0/dt = u0_1", "du1/dt = u1_1"]


@pytest.mark.parametrize("a", [1, 2])
def test_given_kdv_flow_when_compared_with_raw_derivative_oracle_then_agrees(kdv_lax, kdv_oracle, as_sympy, a):
    result = flow_tilde(kdv_lax, 2 * a)

    assert sympy.expand(as_sympy(result.evolution[0]) - kdv_oracle(a)) == 0


def test_given_m_equal_r_minus_one_when_flow_computed_then_commutator_vanishes(kdv_lax):
    result = flow_tilde(kdv_lax, 3)

    assert result.commutator.is_zero
    assert result.commutator.is_exact
    assert result.equations() == ["du0/dt = 0"]


@pytest.mark.parametrize("r", [2, 3])
def test_given_lax_operator_when_flow_commutator_taken_then_orders_stay_below_r_minus_one(r):
    lax = build_lax(r)

    for a in range(3):
        for m in range(r):
            depth = max(r + 6, a * r + m + 1)
            bracket = flow_commutator(lax, a, m, depth)

            assert bracket.is_exact
            assert all(0 <= order <= r - 2 for order in bracket.orders())


def test_given_kdv_flows_when_computed_then_coefficients_are_rational(kdv_lax):
    for mtilde in range(7):
        result = flow_tilde(kdv_lax, mtilde)

        for poly in result.evolution.values():
            assert all(coefficient.is_rational for _, coefficient in poly.terms())


def test_given_shallow_depth_when_flow_computed_then_raises_truncation_error(kdv_lax):
    with pytest.raises(TruncationError, match="need depth >= 3"):
        flow_tilde(kdv_lax, 2, depth=2)


def test_given_kdv_when_standard_flow_computed_then_scales_tilde_flow(kdv_lax):
    standard = flow_standard(kdv_lax, 1, 0)
    tilde = flow_tilde(kdv_lax, 2)

    assert standard.presentation == STANDARD
    assert standard.evolution[0] == tilde.evolution[0].scale(-2)


def test_given_lowest_index_when_prefactors_computed_then_presentations_coincide():
    for r in (2, 3, 5):
        index = FlowIndex(0, 0, r)

        assert standard_prefactor(index) == tilde_prefactor(index)


def test_given_kdv_flows_when_cross_differentiated_then_commute(kdv_lax):
    assert flows_commute(kdv_lax, 0, 2)
    assert flows_commute(kdv_lax, 2, 4)


def test_given_boussinesq_flows_when_cross_differentiated_then_commute(boussinesq_lax):
    assert flows_commute(boussinesq_lax, 1, 3)


def test_given_evolution_when_flow_derivative_taken_then_uses_chain_rule():
    u = DiffPolynomial.variable(0, 0, 2)
    u1 = DiffPolynomial.variable(0, 1, 2)

    assert flow_derivative(u * u, {0: u1}) == (u * u1).scale(2)
    assert flow_derivative(u1, {0: u * u}) == (u * u1).scale(2)


def test_given_tilde_index_when_flow_index_built_then_decomposes():
    index = FlowIndex.from_tilde(7, 3)

    assert (index.a, index.m, index.mtilde) == (2, 1, 7)
    with pytest.raises(ValueError, match="m must lie in 0..2"):
        FlowIndex(0, 3, 3)


def test_given_flow_result_when_to_dict_called_then_serializes_equations(kdv_lax):
    data = flow_tilde(kdv_lax, 0).to_dict()

    assert data["presentation"] == "tilde"
    assert (data["a"], data["m"], data["mtilde"]) == (0, 0, 0)
    assert data["evolution"] == {"u0": "u0_1"}
    assert data["prefactor"] == "(-I*S)"


@pytest.mark.parametrize("r", [2, 3])
def test_given_m_equal_r_minus_one_when_flows_computed_then_vanish_for_every_a(r):
    lax = build_lax(r)

    for a in range(3):
        result = flow_tilde(lax, a * r + r - 1)

        assert all(poly.is_zero for poly in result.evolution.values())


def test_given_m_equal_r_minus_one_when_commutator_taken_then_power_is_computed():
    lax = build_lax(3)

    with patch.object(flows, "fractional_power", wraps=flows.fractional_power) as spy:
        bracket = flow_commutator(lax, 2, 2, 10)

    spy.assert_called_once_with(lax.op, 2, 2, 10)
    assert bracket.is_zero


def test_given_m_equal_r_minus_one_when_commutator_breaks_bound_then_raises_flow_order_error():
    lax = build_lax(3)

    with patch.object(flows, "commutator", return_value=PseudoDiffOp.symbol(3, 2)):
        with pytest.raises(FlowOrderError, match=r"nonzero orders \[2\] outside 0..1"):
            flow_commutator(lax, 1, 2, 8)
