from fractions import Fraction

import pytest

from rspin.diffalg import (
    DiffPolynomial,
    JetVariable,
    Scalar,
    euler_operator,
    evaluate_at,
    is_total_derivative,
    poly_arith,
    total_derivative,
)
from rspin.errors import MissingVariableError, RingMismatchError


def _u(m, k=0, r=3):
    return DiffPolynomial.variable(m, k, r)


def _random_polynomial(rng, r=3, terms=3):
    result = DiffPolynomial.zero(r)
    for _ in range(terms):
        term = DiffPolynomial.constant(Fraction(rng.randint(-5, 5), rng.randint(1, 3)), r)
        for _ in range(rng.randint(0, 2)):
            term = term * _u(rng.randint(0, r - 2), rng.randint(0, 2), r)
        result = result + term
    return result


def test_given_square_when_differentiated_then_applies_leibniz():
    u = _u(0, r=2)

    assert total_derivative(u * u) == (u * _u(0, 1, r=2)).scale(2)


def test_given_random_polynomials_when_differentiated_then_derivation_rule_holds(rng):
    for _ in range(30):
        p = _random_polynomial(rng)
        q = _random_polynomial(rng)

        assert (p * q).total_derivative() == p.total_derivative() * q + p * q.total_derivative()


def test_given_polynomial_when_rendered_then_terms_are_sorted_by_degree():
    p = _u(0, 3, r=2).scale(Fraction(-1, 24)) + (_u(0, r=2) * _u(0, 1, r=2)).scale(Fraction(-1, 2))

    assert str(p) == "-1/24*u0_3 - 1/2*u0*u0_1"


def test_given_zero_polynomial_when_rendered_then_prints_zero():
    assert str(DiffPolynomial.zero(2)) == "0"
    assert DiffPolynomial.zero(2).is_zero


def test_given_assignment_when_evaluated_then_returns_scalar():
    p = _u(0) * _u(0) + _u(0, 1).scale(3)
    assignment = {JetVariable(0, 0): 2, JetVariable(0, 1): Fraction(1, 3)}

    assert evaluate_at(p, assignment) == 5


def test_given_unassigned_variable_when_evaluated_then_raises_missing_variable():
    p = _u(0) * _u(1)

    with pytest.raises(MissingVariableError, match="u1"):
        p.evaluate_at({JetVariable(0, 0): 1})


def test_given_field_index_out_of_range_when_variable_built_then_raises_value_error():
    with pytest.raises(ValueError, match="out of range"):
        DiffPolynomial.variable(1, 0, 2)


def test_given_polynomials_for_different_r_when_multiplied_then_raises_ring_mismatch():
    with pytest.raises(RingMismatchError):
        _u(0, r=2) * _u(0, r=3)


def test_given_monomial_when_partial_called_then_lowers_exponent():
    p = _u(0) * _u(0) * _u(1, 2)

    assert p.partial(JetVariable(0, 0)) == (_u(0) * _u(1, 2)).scale(2)
    assert p.partial(JetVariable(1, 1)).is_zero


def test_given_total_derivative_when_euler_operator_applied_then_vanishes(rng):
    for _ in range(20):
        p = _random_polynomial(rng).total_derivative()

        assert euler_operator(p, 0).is_zero
        assert euler_operator(p, 1).is_zero


def test_given_polynomials_when_is_total_derivative_called_then_detects_exactness():
    u, u1 = _u(0, r=2), _u(0, 1, r=2)

    assert is_total_derivative(u * u1)
    assert not is_total_derivative(u * u1 * u1)
    assert not is_total_derivative(DiffPolynomial.constant(1, 2))


def test_given_scalar_coefficient_when_scaled_then_keeps_ring_elements():
    p = _u(0, r=2).scale(Scalar.imaginary_unit(2))

    assert not p.coefficient(((JetVariable(0, 0), 1),)).is_rational
    assert str(p) == "(I)*u0"


def test_given_modes_when_poly_arith_called_then_adds_or_multiplies():
    p, q = _u(0), _u(1)

    assert poly_arith(p, q, "add") == p + q
    assert poly_arith(p, q, "multiply") == p * q
    with pytest.raises(ValueError, match="Unknown polynomial mode"):
        poly_arith(p, q, "divide")


def _random_assignment(rng, r=3, max_k=3):
    return {
        JetVariable(m, k): Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        for m in range(r - 1)
        for k in range(max_k + 1)
    }


def test_given_random_polynomials_when_evaluated_then_respects_ring_operations(rng):
    for _ in range(30):
        p, q = _random_polynomial(rng), _random_polynomial(rng)
        assignment = _random_assignment(rng)

        assert evaluate_at(p * q, assignment) == evaluate_at(p, assignment) * evaluate_at(q, assignment)
        assert evaluate_at(p + q, assignment) == evaluate_at(p, assignment) + evaluate_at(q, assignment)


def test_given_random_polynomial_when_derivative_evaluated_then_follows_chain_rule(rng):
    for _ in range(30):
        p = _random_polynomial(rng)
        assignment = _random_assignment(rng)

        expected = Scalar.zero(3)
        for var in p.variables():
            expected = expected + evaluate_at(p.partial(var), assignment).scale(assignment[var.derivative()])

        assert evaluate_at(total_derivative(p), assignment) == expected


def test_given_canonical_polynomial_when_renormalized_then_is_unchanged(rng):
    for _ in range(20):
        p = _random_polynomial(rng)
        rebuilt = DiffPolynomial(p.r, dict(p.terms()))

        assert rebuilt == p
        assert str(rebuilt) == str(p)
        assert p + DiffPolynomial.zero(3) == p
        assert p * DiffPolynomial.constant(1, 3) == p


def test_given_rational_constant_term_when_rendered_then_stays_bare():
    assert str(DiffPolynomial.constant(-2, 3) - _u(0)) == "-2 - u0"
