"""Correlator keys, selection rules and the correlator table.

A table holds genus-g correlators <tau_{a1,m1} ... tau_{an,mn}>_g. Numeric
tables store exact rationals; formal tables stand in an opaque sympy symbol
for every correlator they were not told about.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

import sympy

from rspin.descent import IndexPair, TypeTuple, descent_closed_form, virtual_degree
from rspin.errors import FrozenTableError, RingMismatchError, SelectionRuleError
from rspin.infrastructure.seeds.resolver import SeedResolver

logger = logging.getLogger(__name__)


def _register_providers() -> None:
    """Import seed providers so their decorators register them."""
    import rspin.infrastructure.seeds.providers.string_equation  # noqa: F401


_register_providers()

NUMERIC = "numeric"
FORMAL = "formal"
MODES = (NUMERIC, FORMAL)

CorrelatorValue = Union[Fraction, sympy.Expr]


@dataclass(frozen=True)
class CorrelatorKey:
    """Genus and insertion multiset, stored in sorted order."""

    g: int
    insertions: Tuple[IndexPair, ...]
    r: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"Genus must be nonnegative, got {self.g}")
        for pair in self.insertions:
            if pair.r != self.r:
                raise RingMismatchError(f"Insertion for r={pair.r} in key for r={self.r}")
            if pair.m < 0:
                raise ValueError(f"Insertion m must lie in 0..{self.r - 1}, got {pair.m}")
        object.__setattr__(self, "insertions", tuple(sorted(self.insertions)))

    @classmethod
    def of(cls, g: int, pairs: Iterable[Tuple[int, int]], r: int) -> "CorrelatorKey":
        return cls(g, tuple(IndexPair(a, m, r) for a, m in pairs), r)

    @property
    def n(self) -> int:
        return len(self.insertions)

    @property
    def a_values(self) -> Tuple[int, ...]:
        return tuple(pair.a for pair in self.insertions)

    @property
    def m_values(self) -> Tuple[int, ...]:
        return tuple(pair.m for pair in self.insertions)

    @property
    def vanishing(self) -> bool:
        """Some m_i = r - 1."""
        return any(pair.vanishing for pair in self.insertions)

    def type_tuple(self) -> TypeTuple:
        return TypeTuple(self.m_values, self.r, self.g)

    def atom_name(self) -> str:
        body = "__".join(f"{pair.a}_{pair.m}" for pair in self.insertions)
        return f"c_g{self.g}_{body}"

    def __str__(self) -> str:
        body = " ".join(f"tau_{{{pair.a},{pair.m}}}" for pair in self.insertions)
        return f"<{body}>_{self.g}"


@dataclass(frozen=True)
class SelectionResult:
    passed: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.passed


def selection_rule(key: CorrelatorKey) -> SelectionResult:
    """D must be a nonnegative integer with D + sum a_i = 3g - 3 + n."""
    if 2 * key.g - 2 + key.n <= 0:
        return SelectionResult(False, f"unstable: 2g-2+n = {2 * key.g - 2 + key.n} <= 0")
    degree = virtual_degree(key.type_tuple())
    if degree.denominator != 1:
        return SelectionResult(False, f"virtual degree D = {degree} is not an integer")
    if degree < 0:
        return SelectionResult(False, f"virtual degree D = {degree} is negative")
    dimension = 3 * key.g - 3 + key.n
    if degree + sum(key.a_values) != dimension:
        return SelectionResult(
            False,
            f"dimension mismatch: D + sum a = {degree + sum(key.a_values)}, "
            f"expected 3g-3+n = {dimension}",
        )
    return SelectionResult(True)


def is_zero_value(value: CorrelatorValue) -> bool:
    if isinstance(value, sympy.Basic):
        return sympy.expand(value) == 0
    return value == 0


def scale_value(factor: Fraction, value: CorrelatorValue) -> CorrelatorValue:
    if isinstance(value, sympy.Basic):
        return sympy.Rational(factor.numerator, factor.denominator) * value
    return factor * value


def _coerce_value(value, mode: str) -> CorrelatorValue:
    if mode == FORMAL:
        if isinstance(value, sympy.Basic):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            value = Fraction(value)
            return sympy.Rational(value.numerator, value.denominator)
        raise ValueError(f"Formal values must be sympy expressions or rationals, got {value!r}")
    if isinstance(value, sympy.Basic):
        if not value.is_Rational:
            raise ValueError(f"Numeric tables hold rationals only, got {value}")
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


class CorrelatorTable:
    """Correlator values for one root index r.

    Args:
        r: Root index.
        mode: "numeric" (absent keys are zero) or "formal" (absent keys are atoms).
    """

    def __init__(self, r: int, mode: str = NUMERIC, entries: Optional[Mapping[CorrelatorKey, CorrelatorValue]] = None):
        if not isinstance(r, int) or r < 2:
            raise ValueError(f"Root index must be an integer >= 2, got {r!r}")
        if mode not in MODES:
            raise ValueError(f"Unknown table mode: {mode}")
        self.r = r
        self.mode = mode
        self._entries: Dict[CorrelatorKey, CorrelatorValue] = {}
        self._frozen = False
        for key, value in (entries or {}).items():
            self.insert(key, value)

    @property
    def frozen(self) -> bool:
        return self._frozen

    def insert(self, key: CorrelatorKey, value) -> None:
        """Store a value after checking the vanishing and selection rules.

        Raises:
            FrozenTableError: If the table is frozen.
            RingMismatchError: If the key was built for another r.
            SelectionRuleError: If the key fails the selection rule, or has
                some m_i = r - 1 and a nonzero value.
        """
        if self._frozen:
            raise FrozenTableError(f"Cannot insert {key} into a frozen table")
        if key.r != self.r:
            raise RingMismatchError(f"Key for r={key.r} in table for r={self.r}")
        value = _coerce_value(value, self.mode)
        if key.vanishing:
            if not is_zero_value(value):
                raise SelectionRuleError(f"{key} has an insertion with m = r-1 and must vanish")
            return
        verdict = selection_rule(key)
        if not verdict:
            raise SelectionRuleError(f"{key} fails the selection rule: {verdict.reason}")
        self._entries[key] = value

    def freeze(self) -> "CorrelatorTable":
        """An immutable copy that can be shared between readers."""
        frozen = CorrelatorTable(self.r, self.mode)
        frozen._entries = MappingProxyType(dict(self._entries))
        frozen._frozen = True
        return frozen

    def get(self, key: CorrelatorKey) -> Optional[CorrelatorValue]:
        return self._entries.get(key)

    def atom(self, key: CorrelatorKey) -> sympy.Symbol:
        return sympy.Symbol(key.atom_name())

    def zero(self) -> CorrelatorValue:
        return sympy.Integer(0) if self.mode == FORMAL else Fraction(0)

    def items(self) -> Iterator[Tuple[CorrelatorKey, CorrelatorValue]]:
        for key in sorted(self._entries, key=_key_order):
            yield key, self._entries[key]

    def __contains__(self, key: CorrelatorKey) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)


def _key_order(key: CorrelatorKey):
    return (key.g, key.n, tuple((pair.a, pair.m) for pair in key.insertions))


def lookup_or_zero(table: CorrelatorTable, key: CorrelatorKey) -> CorrelatorValue:
    """Stored value, zero for vanishing or excluded keys, an atom for unknown formal keys."""
    if key.vanishing or not selection_rule(key):
        return table.zero()
    value = table.get(key)
    if value is not None:
        return value
    if table.mode == FORMAL:
        return table.atom(key)
    return table.zero()


def tilde_correlator(table: CorrelatorTable, g: int, mtilde: Sequence[int]) -> CorrelatorValue:
    """<tau~_{mt1} ... tau~_{mtn}>_g through the closed-form descent product."""
    closed = descent_closed_form(TypeTuple(tuple(mtilde), table.r, g))
    total = closed.total
    if total.is_zero:
        return table.zero()
    key = CorrelatorKey.of(g, [(entry.a, entry.m) for entry in closed.factors], table.r)
    return scale_value(total.scalar, lookup_or_zero(table, key))


def seed_genus0_wk(table: CorrelatorTable, max_points: int) -> CorrelatorTable:
    """Fill every genus-zero key with at most max_points insertions from the seed oracle.

    Raises:
        SeedUnavailableError: If no numeric oracle exists for table.r.
        ValueError: If the table is not numeric.
    """
    if table.mode != NUMERIC:
        raise ValueError("Seeding needs a numeric table")
    entries = SeedResolver.resolve({"r": table.r, "max_points": max_points})
    count = 0
    for g, pairs, value in entries:
        table.insert(CorrelatorKey.of(g, pairs, table.r), value)
        count += 1
    logger.info("Seeded %d genus-zero correlators for r=%d", count, table.r)
    return table
