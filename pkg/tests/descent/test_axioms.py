from fractions import Fraction

import pytest

from rspin.descent import (
    DescentFactor,
    TypeTuple,
    descent_closed_form,
    descent_scalar,
    descent_step,
    iterate_descent,
    r_factorial,
    vanishing_from_descent,
    variable_map_coefficient,
    virtual_degree,
)
from rspin.errors import TypeTupleError


def test_given_single_entry_when_closed_form_computed_then_returns_psi_power_factor():
    closed = descent_closed_form(TypeTuple((7,), 3))
    entry = closed.factors[0]

    assert (entry.position, entry.a, entry.m) == (1, 2, 1)
    assert entry.factor == DescentFactor(Fraction(10, 9), 2)
    assert str(entry.factor) == "10/9*psi^2"
    assert closed.base.entries == (1,)


def test_given_entry_congruent_to_minus_one_when_closed_form_computed_then_factor_vanishes():
    closed = descent_closed_form(TypeTuple((5, 1), 3))

    assert closed.factors[0].vanishing
    assert str(closed.factors[0].factor) == "0"
    assert closed.total.is_zero
    assert closed.base.entries == (2, 1)


def test_given_negative_entry_when_closed_form_computed_then_raises_type_tuple_error():
    with pytest.raises(TypeTupleError, match="nonnegative"):
        descent_closed_form(TypeTuple((-1, 2), 3))


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_given_single_entries_when_descent_iterated_then_matches_closed_form(r):
    for mtilde in range(31):
        t = TypeTuple((mtilde,), r)

        assert iterate_descent(t).factors == descent_closed_form(t).factors


def test_given_random_tuples_when_descent_iterated_then_matches_closed_form(rng):
    for _ in range(100):
        r = rng.randint(2, 5)
        t = TypeTuple(tuple(rng.randint(0, 30) for _ in range(rng.randint(1, 4))), r, rng.randint(0, 2))

        iterated = iterate_descent(t)
        closed = descent_closed_form(t)

        assert iterated.factors == closed.factors
        assert iterated.total == closed.total


def test_given_index_pairs_when_descent_and_change_of_variables_multiplied_then_cancel():
    for r in range(2, 6):
        for a in range(11):
            for m in range(r):
                assert descent_scalar(a, m, r) * variable_map_coefficient(a, m, r) == 1


def test_given_index_pairs_when_r_factorial_extended_then_satisfies_recursion():
    for r in range(2, 6):
        for m in range(r):
            assert r_factorial(0, m, r) == 1
            for a in range(6):
                assert r_factorial(a + 1, m, r) == (a * r + m + 1) * r_factorial(a, m, r)


def test_given_random_tuples_when_shifted_then_virtual_degree_grows_by_one(rng):
    for _ in range(1000):
        r = rng.randint(2, 7)
        t = TypeTuple(tuple(rng.randint(0, 3 * r) for _ in range(rng.randint(1, 6))), r, rng.randint(0, 3))
        position = rng.randint(1, len(t))

        assert virtual_degree(t.shifted(position)) == virtual_degree(t) + 1


def test_given_type_tuples_when_virtual_degree_computed_then_returns_exact_rational():
    assert virtual_degree(TypeTuple((0, 0, 0), 2)) == 0
    assert virtual_degree(TypeTuple((1, 2), 3)) == Fraction(2, 3)
    assert virtual_degree(TypeTuple((1, 1, 2), 3)) == 1
    assert virtual_degree(TypeTuple((0,), 3, genus=2)) == Fraction(1, 3)


def test_given_position_when_descent_step_taken_then_returns_factor_and_successor():
    factor, successor = descent_step(TypeTuple((1, 0), 3), 1)

    assert factor == DescentFactor(Fraction(-2, 3), 1)
    assert successor.entries == (4, 0)


def test_given_entry_r_minus_one_when_vanishing_from_descent_called_then_returns_zero():
    factor = vanishing_from_descent(TypeTuple((2, 0), 3), 1)

    assert factor.is_zero
    assert factor.psi_power == 0


def test_given_other_entry_when_vanishing_from_descent_called_then_raises_type_tuple_error():
    with pytest.raises(TypeTupleError, match="expected r-1=2"):
        vanishing_from_descent(TypeTuple((1, 0), 3), 1)


def test_given_factors_when_rendered_then_uses_compact_psi_notation():
    assert str(DescentFactor(Fraction(-1), 1)) == "-psi"
    assert str(DescentFactor(Fraction(1), 0)) == "1"
    assert str(DescentFactor(Fraction(0), 3)) == "0"
    assert DescentFactor(Fraction(1, 2), 1).compose(DescentFactor(Fraction(4), 2)) == DescentFactor(Fraction(2), 3)


def test_given_closed_form_when_to_dict_called_then_lists_factors_and_base():
    data = descent_closed_form(TypeTuple((7,), 3)).to_dict()

    assert data["base"] == [1]
    assert data["factors"] == [
        {"position": 1, "mtilde": 7, "a": 2, "m": 1, "scalar": "10/9", "psi_power": 2}
    ]


def test_given_m_out_of_range_when_variable_map_coefficient_called_then_raises_value_error():
    with pytest.raises(ValueError, match="m must lie in 0..1"):
        variable_map_coefficient(0, 2, 2)
