"""Descent calculus: index decomposition, r-factorials and virtual degrees."""
from .axioms import (
    ClosedForm,
    DescentFactor,
    PositionFactor,
    descent_closed_form,
    descent_scalar,
    descent_step,
    iterate_descent,
    r_factorial,
    vanishing_from_descent,
    variable_map_coefficient,
    virtual_degree,
)
from .indices import IndexPair, TypeTuple, decompose_index, same_component

__all__ = [
    "ClosedForm",
    "DescentFactor",
    "IndexPair",
    "PositionFactor",
    "TypeTuple",
    "decompose_index",
    "descent_closed_form",
    "descent_scalar",
    "descent_step",
    "iterate_descent",
    "r_factorial",
    "same_component",
    "vanishing_from_descent",
    "variable_map_coefficient",
    "virtual_degree",
]
