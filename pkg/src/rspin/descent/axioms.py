"""Descent relations between r-spin virtual classes.

A single descent step c(t + r*delta_i) = -psit_i(t) c(t) together with
psit_i = ((t_i + 1) / r) psi_i gives the factor -((t_i + 1) / r) psi_i. Psi
classes are carried as formal powers; only the exponent and the rational
prefactor matter once the class sits under an integral.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from rspin.descent.indices import IndexPair, TypeTuple, decompose_index
from rspin.diffalg.scalar import format_rational
from rspin.errors import TypeTupleError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DescentFactor:
    """scalar * psi^psi_power; a zero scalar is stored with psi_power 0."""

    scalar: Fraction
    psi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        if self.psi_power < 0:
            raise ValueError(f"psi_power must be nonnegative, got {self.psi_power}")
        if self.scalar == 0:
            object.__setattr__(self, "psi_power", 0)

    @classmethod
    def identity(cls) -> "DescentFactor":
        return cls(Fraction(1), 0)

    @property
    def is_zero(self) -> bool:
        return self.scalar == 0

    def compose(self, other: "DescentFactor") -> "DescentFactor":
        return DescentFactor(self.scalar * other.scalar, self.psi_power + other.psi_power)

    def __str__(self) -> str:
        scalar = format_rational(self.scalar)
        if self.is_zero or self.psi_power == 0:
            return scalar
        psi = "psi" if self.psi_power == 1 else f"psi^{self.psi_power}"
        if self.scalar == 1:
            return psi
        if self.scalar == -1:
            return f"-{psi}"
        return f"{scalar}*{psi}"


@dataclass(frozen=True)
class PositionFactor:
    """Closed-form descent data at one marked point."""

    position: int
    mtilde: int
    a: int
    m: int
    factor: DescentFactor

    @property
    def vanishing(self) -> bool:
        return self.factor.is_zero

    def to_dict(self) -> Dict[str, Any]:
        return {
            "position": self.position,
            "mtilde": self.mtilde,
            "a": self.a,
            "m": self.m,
            "scalar": format_rational(self.factor.scalar),
            "psi_power": self.factor.psi_power,
        }


@dataclass(frozen=True)
class ClosedForm:
    """c(mtilde) = c(base) * prod of the position factors."""

    factors: Tuple[PositionFactor, ...]
    base: TypeTuple

    @property
    def total(self) -> DescentFactor:
        result = DescentFactor.identity()
        for entry in self.factors:
            result = result.compose(entry.factor)
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "factors": [entry.to_dict() for entry in self.factors],
            "base": list(self.base.entries),
            "r": self.base.r,
            "genus": self.base.genus,
        }


def r_factorial(a: int, m: int, r: int) -> int:
    """[r(a-1)+m+1]_r = prod_{i=1}^{a} (r(a-i) + m + 1); 1 when a = 0."""
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    result = 1
    for i in range(1, a + 1):
        result *= r * (a - i) + m + 1
    return result


def descent_scalar(a: int, m: int, r: int) -> Fraction:
    """(-1)^a r^(-a) [r(a-1)+m+1]_r, the scalar of a descents from m."""
    return Fraction((-1) ** a * r_factorial(a, m, r), r ** a)


def descent_step(t: TypeTuple, position: int) -> Tuple[DescentFactor, TypeTuple]:
    """One application of the descent relation at a 1-based position."""
    entry = t.entry(position)
    factor = DescentFactor(Fraction(-(entry + 1), t.r), 1)
    return factor, t.shifted(position)


def descent_closed_form(mtilde: TypeTuple) -> ClosedForm:
    """Factor c(mtilde) through the base tuple with entries in 0..r-1.

    Positions with mtilde = -1 mod r descend from -1 and carry a zero factor.
    """
    r = mtilde.r
    if any(entry < 0 for entry in mtilde.entries):
        raise TypeTupleError(f"Closed form needs nonnegative entries, got {mtilde.entries}")
    factors: List[PositionFactor] = []
    base: List[int] = []
    for position, value in enumerate(mtilde.entries, start=1):
        pair = decompose_index(value, r)
        if pair.vanishing:
            factor = DescentFactor(Fraction(0))
        else:
            factor = DescentFactor(descent_scalar(pair.a, pair.m, r), pair.a)
        factors.append(PositionFactor(position, value, pair.a, pair.m, factor))
        base.append(pair.m)
    return ClosedForm(tuple(factors), TypeTuple(tuple(base), r, mtilde.genus))


def iterate_descent(mtilde: TypeTuple) -> ClosedForm:
    """The same factorization obtained by chaining single descent steps."""
    r = mtilde.r
    closed = descent_closed_form(mtilde)
    state = closed.base
    factors: List[PositionFactor] = []
    for entry in closed.factors:
        pair = IndexPair(entry.a, entry.m, r)
        steps = pair.a
        if pair.vanishing:
            state = state.with_entry(entry.position, -1)
            steps += 1
        accumulated = DescentFactor.identity()
        for _ in range(steps):
            step_factor, state = descent_step(state, entry.position)
            accumulated = accumulated.compose(step_factor)
        factors.append(PositionFactor(entry.position, entry.mtilde, entry.a, entry.m, accumulated))
    if state.entries != mtilde.entries:
        raise AssertionError(f"Descent chain ended at {state}, expected {mtilde}")
    return ClosedForm(tuple(factors), closed.base)


def vanishing_from_descent(t: TypeTuple, position: int) -> DescentFactor:
    """Descend into t from t - r*delta_position, whose entry there is -1.

    Applies to t with all entries in 0..r-1 and t_position = r - 1; the
    returned factor is zero, which is the vanishing of c(t).
    """
    if t.entry(position) != t.r - 1:
        raise TypeTupleError(
            f"Entry at position {position} is {t.entry(position)}, expected r-1={t.r - 1}"
        )
    factor, successor = descent_step(t.with_entry(position, -1), position)
    if successor != t:
        raise AssertionError(f"Descent from -1 reached {successor}, expected {t}")
    return factor


def variable_map_coefficient(a: int, m: int, r: int) -> Fraction:
    """c with ttilde^(a r + m) = c * t_a^m, i.e. (-1)^a r^a / [r(a-1)+m+1]_r."""
    if not 0 <= m <= r - 1:
        raise ValueError(f"m must lie in 0..{r - 1}, got {m}")
    return Fraction((-1) ** a * r ** a, r_factorial(a, m, r))


def virtual_degree(t: TypeTuple) -> Fraction:
    """D = ((r-2)(g-1) + sum m_i) / r; non-integral D means a vanishing class."""
    return Fraction((t.r - 2) * (t.genus - 1) + sum(t.entries), t.r)
