"""The generic Lax operator Q = D^r - sum_{m=0}^{r-2} u_m D^m."""
from dataclasses import dataclass

from rspin.diffalg import DiffPolynomial
from rspin.errors import LaxFormError
from rspin.psido import PseudoDiffOp, check_lax_form

DEFAULT_DEPTH_OFFSET = 6


@dataclass(frozen=True)
class LaxOperator:
    r: int
    op: PseudoDiffOp

    def __post_init__(self):
        if self.op.r != self.r:
            raise LaxFormError(f"Operator is built for r={self.op.r}, expected r={self.r}")
        check_lax_form(self.op)
        for m in range(self.r - 1):
            if self.op.coefficient(m) != -DiffPolynomial.variable(m, 0, self.r):
                raise LaxFormError(f"Coefficient of D^{m} must be -u{m}")

    def field(self, m: int) -> DiffPolynomial:
        """u_m as a differential polynomial."""
        return DiffPolynomial.variable(m, 0, self.r)

    def __str__(self) -> str:
        return str(self.op)


def build_lax(r: int) -> LaxOperator:
    """Q = D^r - sum u_m D^m with symbolic u_0..u_{r-2}.

    Raises:
        ValueError: If r < 2.
    """
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"Root index must be an integer >= 2, got {r!r}")
    coefficients = {r: DiffPolynomial.constant(1, r)}
    for m in range(r - 1):
        coefficients[m] = -DiffPolynomial.variable(m, 0, r)
    return LaxOperator(r, PseudoDiffOp.differential(r, coefficients))


def default_depth(r: int, a: int, m: int, depth_offset: int = DEFAULT_DEPTH_OFFSET) -> int:
    """Retained orders for Q^(a + (m+1)/r): r + depth_offset, at least enough for an exact plus part."""
    return max(r + depth_offset, a * r + m + 1)
