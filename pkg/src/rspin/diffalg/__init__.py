"""Exact scalar and differential-polynomial arithmetic."""
from .polynomial import (
    DiffPolynomial,
    JetVariable,
    Monomial,
    euler_operator,
    evaluate_at,
    is_total_derivative,
    poly_arith,
    total_derivative,
)
from .scalar import Scalar, kappa, scalar_mul_div

__all__ = [
    "DiffPolynomial",
    "JetVariable",
    "Monomial",
    "Scalar",
    "euler_operator",
    "evaluate_at",
    "is_total_derivative",
    "kappa",
    "poly_arith",
    "scalar_mul_div",
    "total_derivative",
]
