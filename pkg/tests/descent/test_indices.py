import pytest

from rspin.descent import IndexPair, TypeTuple, decompose_index, same_component
from rspin.errors import TypeTupleError


def test_given_tilde_index_when_decomposed_then_returns_quotient_and_remainder():
    pair = decompose_index(7, 3)

    assert pair == IndexPair(2, 1, 3)
    assert pair.mtilde == 7
    assert not pair.vanishing
    assert decompose_index(5, 3).vanishing


def test_given_negative_index_when_decomposed_then_raises_value_error():
    with pytest.raises(ValueError, match="nonnegative"):
        decompose_index(-1, 2)


def test_given_out_of_range_m_when_index_pair_built_then_raises_value_error():
    with pytest.raises(ValueError, match="m must lie in -1..1"):
        IndexPair(0, 2, 2)


def test_given_two_minus_one_entries_when_type_tuple_built_then_raises_type_tuple_error():
    with pytest.raises(TypeTupleError, match="At most one"):
        TypeTuple((-1, 0, -1), 3)


def test_given_entry_below_minus_one_when_type_tuple_built_then_raises_type_tuple_error():
    with pytest.raises(TypeTupleError, match=">= -1"):
        TypeTuple((-2, 1), 3)


def test_given_position_when_shifted_then_adds_r_at_that_position():
    t = TypeTuple.of([1, 0], 3)

    assert t.entry(1) == 1
    assert t.shifted(1).entries == (4, 0)
    assert t.shifted(2).entries == (1, 3)
    assert str(t) == "(1, 0)"


def test_given_position_out_of_range_when_entry_read_then_raises_value_error():
    t = TypeTuple.of([1, 0], 3)

    with pytest.raises(ValueError, match="out of range 1..2"):
        t.entry(0)
    with pytest.raises(ValueError, match="out of range 1..2"):
        t.shifted(3)


def test_given_congruent_tuples_when_compared_then_share_component():
    assert same_component(TypeTuple((4, 0), 3), TypeTuple((1, 3), 3))
    assert not same_component(TypeTuple((4, 0), 3), TypeTuple((4, 1), 3))
    assert not same_component(TypeTuple((0,), 3, genus=1), TypeTuple((3,), 3))
