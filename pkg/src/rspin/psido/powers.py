"""r-th roots and fractional powers of Lax-form operators."""
import logging
from fractions import Fraction
from typing import Dict

from rspin.diffalg import DiffPolynomial
from rspin.errors import LaxFormError
from rspin.psido.operator import PseudoDiffOp, _compose, compose, power

logger = logging.getLogger(__name__)


def check_lax_form(q: PseudoDiffOp) -> None:
    """Validate that q = D^r + (terms of order <= r - 2), exactly known.

    Raises:
        LaxFormError: If q is not differential, not monic in D^r, or has a
            nonzero D^(r-1) coefficient.
    """
    r = q.r
    if not q.is_differential:
        raise LaxFormError("Lax operator must be an exactly known differential operator")
    if q.top != r or q.coefficient(r) != DiffPolynomial.constant(1, r):
        raise LaxFormError(f"Lax operator must be monic of order r={r}, got top order {q.top}")
    if not q.coefficient(r - 1).is_zero:
        raise LaxFormError(f"Lax operator must have zero D^{r - 1} coefficient")


def rth_root(q: PseudoDiffOp, depth: int) -> PseudoDiffOp:
    """Q^(1/r) = D + sum_{k <= -1} a_k D^k, certified down to order 1 - depth.

    Each coefficient enters the order r - n coefficient of R^r linearly with
    factor r, so it is solved for order by order.
    """
    check_lax_form(q)
    if depth < 1:
        raise ValueError(f"depth must be positive, got {depth}")
    r = q.r
    if q == PseudoDiffOp.symbol(r, r):
        return PseudoDiffOp.symbol(r, 1)

    logger.debug("Computing Q^(1/%d) to depth %d", r, depth)
    terms: Dict[int, DiffPolynomial] = {1: DiffPolynomial.constant(1, r)}
    for n in range(1, depth + 1):
        target = r - n
        known = PseudoDiffOp(r, terms)
        accumulated = known
        for j in range(1, r):
            accumulated = _compose(accumulated, known, floor=target - (r - j - 1))
        residual = q.coefficient(target) - accumulated.coefficient(target)
        terms[1 - n] = residual.scale(Fraction(1, r))
    return PseudoDiffOp(r, terms, 1 - depth)


def fractional_power(q: PseudoDiffOp, a: int, m: int, depth: int) -> PseudoDiffOp:
    """Q^(a + (m+1)/r) as Q^a o (Q^(1/r))^(m+1).

    For m = r - 1 the result is Q^(a+1), computed exactly.
    """
    check_lax_form(q)
    r = q.r
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    if not 0 <= m <= r - 1:
        raise ValueError(f"m must lie in 0..{r - 1}, got {m}")
    if m == r - 1:
        return power(q, a + 1)
    root = rth_root(q, depth)
    return compose(power(q, a), power(root, m + 1))
