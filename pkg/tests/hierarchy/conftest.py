"""Independent KdV oracle in the raw x-derivative.

Works with L = d^2 + w and d = d/dx directly in sympy, then converts to the
D = (i / sqrt(2)) d normalization through Q = -L/2 with w = 2 u0.
"""
from typing import Callable, Dict

import pytest
import sympy

X = sympy.Symbol("x")
W = sympy.Function("w")(X)

Operator = Dict[int, sympy.Expr]


def _binomial(k: int, j: int) -> sympy.Rational:
    return sympy.ff(k, j) / sympy.factorial(j)


def _compose(a: Operator, b: Operator, floor: int) -> Operator:
    result: Operator = {}
    for k, f in a.items():
        for l, g in b.items():
            j = 0
            while k + l - j >= floor and not (k >= 0 and j > k):
                term = _binomial(k, j) * f * sympy.diff(g, X, j)
                result[k + l - j] = sympy.expand(result.get(k + l - j, 0) + term)
                j += 1
    return {order: expr for order, expr in result.items() if expr != 0}


def _sqrt(lax: Operator, depth: int) -> Operator:
    root: Operator = {1: sympy.Integer(1)}
    for n in range(1, depth + 1):
        square = _compose(root, root, 2 - n)
        root[1 - n] = sympy.expand((lax.get(2 - n, 0) - square.get(2 - n, 0)) / 2)
    return root


def _kdv_bracket(a: int) -> sympy.Expr:
    """[L_+^(a + 1/2), L] for L = d^2 + w."""
    lax: Operator = {2: sympy.Integer(1), 0: W}
    power: Operator = {0: sympy.Integer(1)}
    for _ in range(a):
        power = _compose(power, lax, 0)
    full = _compose(power, _sqrt(lax, 2 * a + 2), 0)
    plus = {k: v for k, v in full.items() if k >= 0}
    left = _compose(plus, lax, 0)
    right = _compose(lax, plus, 0)
    bracket = {k: sympy.expand(left.get(k, 0) - right.get(k, 0)) for k in set(left) | set(right)}
    assert all(expr == 0 for k, expr in bracket.items() if k != 0)
    return bracket.get(0, sympy.Integer(0))


@pytest.fixture
def kdv_oracle() -> Callable[[int], sympy.Expr]:
    """du0/dt for the tilde flow of index 2a, as a sympy expression in u0(x)."""
    u0 = sympy.Function("u0")(X)

    def oracle(a: int) -> sympy.Expr:
        scale = sympy.I / sympy.sqrt(2)
        bracket = _kdv_bracket(a).subs(W, 2 * u0).doit()
        # Q^(a+1/2) = (-1/2)^a * scale * L^(a+1/2) and Q = -L/2
        commutator = sympy.Rational(-1, 2) ** (a + 1) * scale * bracket
        prefactor = sympy.I * sympy.sqrt(2) * sympy.Rational(2 * a + 1, 2)
        return sympy.expand(-commutator / prefactor)

    return oracle


@pytest.fixture
def as_sympy() -> Callable:
    """Convert a DiffPolynomial with rational coefficients to a sympy expression in x."""

    def convert(poly) -> sympy.Expr:
        total = sympy.Integer(0)
        for monomial, coefficient in poly.terms():
            assert coefficient.is_rational
            term = sympy.Rational(coefficient.q0.numerator, coefficient.q0.denominator)
            for var, exponent in monomial:
                field = sympy.Function(f"u{var.m}")(X)
                term *= sympy.diff(field, X, var.k) ** exponent
            total += term
        return sympy.expand(total)

    return convert
