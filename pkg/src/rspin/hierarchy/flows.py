"""KdV_r flows in the tilde and the standard presentation.

Both presentations share the commutator C = [Q_+^(a + (m+1)/r), Q] and differ
only in the scalar that multiplies it:

    tilde:     i*s*(a + (m+1)/r) * dQ/dt~^(ar+m) = C
    standard:  i*[ar+m+1]_r * dQ/dt_a^m = (-1)^a r^a s * C

With Q = D^r - sum u_m D^m, dQ/dt = -sum (du_m/dt) D^m, so each evolution
polynomial is the negated, rescaled coefficient of C.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional

from rspin.descent import decompose_index, r_factorial
from rspin.diffalg import DiffPolynomial, Scalar
from rspin.errors import FlowOrderError, TruncationError
from rspin.hierarchy.lax import DEFAULT_DEPTH_OFFSET, LaxOperator, default_depth
from rspin.psido import PseudoDiffOp, commutator, fractional_power, split_parts

logger = logging.getLogger(__name__)

TILDE = "tilde"
STANDARD = "standard"


@dataclass(frozen=True)
class FlowIndex:
    """Flow label (a, m) with mtilde = a*r + m and 0 <= m <= r - 1."""

    a: int
    m: int
    r: int

    def __post_init__(self):
        if self.a < 0:
            raise ValueError(f"a must be nonnegative, got {self.a}")
        if not 0 <= self.m <= self.r - 1:
            raise ValueError(f"m must lie in 0..{self.r - 1}, got {self.m}")

    @classmethod
    def from_tilde(cls, mtilde: int, r: int) -> "FlowIndex":
        pair = decompose_index(mtilde, r)
        return cls(pair.a, pair.m, r)

    @classmethod
    def from_pair(cls, a: int, m: int, r: int) -> "FlowIndex":
        return cls(a, m, r)

    @property
    def mtilde(self) -> int:
        return self.a * self.r + self.m


@dataclass(frozen=True)
class FlowResult:
    index: FlowIndex
    presentation: str
    evolution: Dict[int, DiffPolynomial]
    commutator: PseudoDiffOp
    prefactor: Scalar
    depth: int = field(default=0, compare=False)

    @property
    def r(self) -> int:
        return self.index.r

    def equations(self) -> List[str]:
        return evolution_equations(self)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "presentation": self.presentation,
            "a": self.index.a,
            "m": self.index.m,
            "mtilde": self.index.mtilde,
            "prefactor": str(self.prefactor),
            "evolution": {f"u{m}": str(poly) for m, poly in sorted(self.evolution.items())},
        }


def flow_commutator(lax: LaxOperator, a: int, m: int, depth: int) -> PseudoDiffOp:
    """[Q_+^(a + (m+1)/r), Q], checked to be differential of order <= r - 2.

    Raises:
        TruncationError: If depth is too shallow for an exact plus part.
        FlowOrderError: If the commutator has a nonzero coefficient outside 0..r-2.
    """
    r = lax.r
    full = fractional_power(lax.op, a, m, depth)
    plus, _ = split_parts(full)
    if not plus.is_exact:
        raise TruncationError(
            f"depth {depth} cannot certify Q_+^({a} + {m + 1}/{r}); "
            f"need depth >= {a * r + m + 1}"
        )
    result = commutator(plus, lax.op)
    outside = [order for order in result.orders() if order < 0 or order > r - 2]
    if outside:
        raise FlowOrderError(
            f"Commutator for a={a}, m={m} has nonzero orders {outside} outside 0..{r - 2}"
        )
    return result


def tilde_prefactor(index: FlowIndex) -> Scalar:
    """(i*s*(a*r + m + 1)/r)^(-1)."""
    r = index.r
    unit = Scalar.imaginary_unit(r) * Scalar.sqrt_r(r)
    return unit.scale(Fraction(index.mtilde + 1, r)).inverse()


def standard_prefactor(index: FlowIndex) -> Scalar:
    """(-1)^a r^a s / (i [ar+m+1]_r)."""
    r = index.r
    numerator = Scalar.sqrt_r(r).scale((-1) ** index.a * r ** index.a)
    denominator = Scalar.imaginary_unit(r).scale(r_factorial(index.a + 1, index.m, r))
    return numerator / denominator


def _evolution(lax: LaxOperator, bracket: PseudoDiffOp, prefactor: Scalar) -> Dict[int, DiffPolynomial]:
    return {m: -(bracket.coefficient(m).scale(prefactor)) for m in range(lax.r - 1)}


def _flow(lax: LaxOperator, index: FlowIndex, presentation: str, depth: Optional[int], depth_offset: int) -> FlowResult:
    if depth is None:
        depth = default_depth(lax.r, index.a, index.m, depth_offset)
    logger.debug(
        "Flow %s r=%d a=%d m=%d at depth %d", presentation, lax.r, index.a, index.m, depth
    )
    bracket = flow_commutator(lax, index.a, index.m, depth)
    prefactor = tilde_prefactor(index) if presentation == TILDE else standard_prefactor(index)
    return FlowResult(index, presentation, _evolution(lax, bracket, prefactor), bracket, prefactor, depth)


def flow_tilde(
    lax: LaxOperator,
    mtilde: int,
    depth: Optional[int] = None,
    depth_offset: int = DEFAULT_DEPTH_OFFSET,
) -> FlowResult:
    """Evolution along t~^mtilde."""
    return _flow(lax, FlowIndex.from_tilde(mtilde, lax.r), TILDE, depth, depth_offset)


def flow_standard(
    lax: LaxOperator,
    a: int,
    m: int,
    depth: Optional[int] = None,
    depth_offset: int = DEFAULT_DEPTH_OFFSET,
) -> FlowResult:
    """Evolution along t_a^m."""
    return _flow(lax, FlowIndex.from_pair(a, m, lax.r), STANDARD, depth, depth_offset)


def evolution_equations(result: FlowResult) -> List[str]:
    return [f"du{m}/dt = {poly}" for m, poly in sorted(result.evolution.items())]


def flow_derivative(p: DiffPolynomial, evolution: Mapping[int, DiffPolynomial]) -> DiffPolynomial:
    """d/dt of p when du_m/dt = evolution[m]: sum dp/du_m^(k) * d^k/dx^k (du_m/dt)."""
    total = DiffPolynomial.zero(p.r)
    for var in p.variables():
        rate = evolution.get(var.m)
        if rate is None or rate.is_zero:
            continue
        total = total + p.partial(var) * rate.nth_derivative(var.k)
    return total


def flows_commute(
    lax: LaxOperator,
    first: int,
    second: int,
    depth: Optional[int] = None,
    depth_offset: int = DEFAULT_DEPTH_OFFSET,
) -> bool:
    """Whether the tilde flows first and second commute on every field."""
    one = flow_tilde(lax, first, depth, depth_offset).evolution
    two = flow_tilde(lax, second, depth, depth_offset).evolution
    for m in range(lax.r - 1):
        if flow_derivative(two[m], one) != flow_derivative(one[m], two):
            logger.info("Flows %d and %d do not commute on u%d", first, second, m)
            return False
    return True
