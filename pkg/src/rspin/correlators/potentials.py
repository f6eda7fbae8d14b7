"""Truncated descendant potentials and the change-of-variables check.

Phi(t) = sum_g lambda^(2g-2) <exp(t . tau)>_g collects the correlators of a
table; chi~(t~) collects the tilde correlators, and chi(x) is Phi on the small
phase space t_0^m = x^m. A monomial prod v^k carries the correlator divided by
prod k!.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import sympy

from rspin.correlators.table import (
    NUMERIC,
    CorrelatorKey,
    CorrelatorTable,
    CorrelatorValue,
    is_zero_value,
    lookup_or_zero,
    scale_value,
    selection_rule,
    tilde_correlator,
)
from rspin.descent import decompose_index, variable_map_coefficient
from rspin.diffalg.scalar import format_rational

logger = logging.getLogger(__name__)

LARGE = "t"
TILDE = "ttilde"
SMALL = "x"
KINDS = (LARGE, TILDE, SMALL)

Variable = Tuple[int, ...]
SeriesMonomial = Tuple[Tuple[Variable, int], ...]
TermKey = Tuple[int, SeriesMonomial]


def format_variable(kind: str, variable: Variable) -> str:
    if kind == LARGE:
        return f"t[{variable[0]},{variable[1]}]"
    if kind == TILDE:
        return f"tt[{variable[0]}]"
    return f"x[{variable[0]}]"


def _format_value(value: CorrelatorValue) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(sympy.expand(value))


def _as_sympy(value: CorrelatorValue) -> sympy.Expr:
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return value


def _add(left: CorrelatorValue, right: CorrelatorValue) -> CorrelatorValue:
    if isinstance(left, sympy.Basic) or isinstance(right, sympy.Basic):
        return _as_sympy(left) + _as_sympy(right)
    return left + right


def _monomial(variables: Sequence[Variable]) -> SeriesMonomial:
    return tuple(sorted(Counter(variables).items()))


def _symmetry_factor(monomial: SeriesMonomial) -> Fraction:
    denominator = 1
    for _, exponent in monomial:
        denominator *= factorial(exponent)
    return Fraction(1, denominator)


class PotentialSeries:
    """Polynomial in one family of variables with a lambda-exponent grading."""

    def __init__(self, r: int, kind: str, truncation_order: int, genus_limited: bool = False):
        if kind not in KINDS:
            raise ValueError(f"Unknown series kind: {kind}")
        self.r = r
        self.kind = kind
        self.truncation_order = truncation_order
        self.genus_limited = genus_limited
        self._terms: Dict[TermKey, CorrelatorValue] = {}

    def _accumulate(self, lambda_exponent: int, monomial: SeriesMonomial, value: CorrelatorValue) -> None:
        degree = sum(exponent for _, exponent in monomial)
        if degree > self.truncation_order:
            return
        key = (lambda_exponent, monomial)
        if key in self._terms:
            value = _add(self._terms[key], value)
        if is_zero_value(value):
            self._terms.pop(key, None)
        else:
            self._terms[key] = value

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, lambda_exponent: int, variables: Sequence[Variable]) -> CorrelatorValue:
        return self._terms.get((lambda_exponent, _monomial(variables)), Fraction(0))

    def items(self) -> Iterator[Tuple[TermKey, CorrelatorValue]]:
        for key in sorted(self._terms, key=lambda item: (item[0], sum(e for _, e in item[1]), item[1])):
            yield key, self._terms[key]

    def __len__(self) -> int:
        return len(self._terms)

    def map_variables(
        self,
        kind: str,
        mapping: Callable[[Variable], Optional[Tuple[Fraction, Variable]]],
    ) -> "PotentialSeries":
        """Linear substitution v -> c * w, or v -> 0 where mapping returns None."""
        result = PotentialSeries(self.r, kind, self.truncation_order, self.genus_limited)
        for (lambda_exponent, monomial), value in self._terms.items():
            factor = Fraction(1)
            variables: List[Variable] = []
            for variable, exponent in monomial:
                image = mapping(variable)
                if image is None:
                    break
                coefficient, target = image
                factor *= coefficient ** exponent
                variables.extend([target] * exponent)
            else:
                result._accumulate(lambda_exponent, _monomial(variables), scale_value(factor, value))
        return result

    def format_monomial(self, monomial: SeriesMonomial) -> str:
        parts = []
        for variable, exponent in monomial:
            name = format_variable(self.kind, variable)
            parts.append(name if exponent == 1 else f"{name}^{exponent}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        rendered = [
            f"lambda^{lam} ({_format_value(value)})*{self.format_monomial(monomial)}"
            for (lam, monomial), value in self.items()
        ]
        return " + ".join(rendered)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "kind": self.kind,
            "truncation_order": self.truncation_order,
            "genus_limited": self.genus_limited,
            "terms": [
                {
                    "lambda": lam,
                    "monomial": self.format_monomial(monomial),
                    "coefficient": _format_value(value),
                }
                for (lam, monomial), value in self.items()
            ],
        }


class Potentials(NamedTuple):
    phi: PotentialSeries
    chi: PotentialSeries
    chi_tilde: PotentialSeries


@dataclass(frozen=True)
class Mismatch:
    lambda_exponent: int
    monomial: str
    left: str
    right: str

    def __str__(self) -> str:
        return f"lambda^{self.lambda_exponent} {self.monomial}: {self.left} != {self.right}"


@dataclass(frozen=True)
class VerificationReport:
    name: str
    checked: int
    mismatches: List[Mismatch] = field(default_factory=list)
    genus_limited: bool = False

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def lines(self) -> List[str]:
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.checked} terms)"]
        if self.mismatches:
            lines.append(f"first mismatch: {self.mismatches[0]}")
        if self.genus_limited:
            lines.append("note: numeric table, genus-zero (lambda^-2) stratum only")
        return lines

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "genus_limited": self.genus_limited,
            "mismatches": [
                {
                    "lambda": item.lambda_exponent,
                    "monomial": item.monomial,
                    "left": item.left,
                    "right": item.right,
                }
                for item in self.mismatches
            ],
        }


def _compare(name: str, left: PotentialSeries, right: PotentialSeries) -> VerificationReport:
    left_terms = dict(left.items())
    right_terms = dict(right.items())
    keys = sorted(set(left_terms) | set(right_terms), key=lambda item: (item[0], sum(e for _, e in item[1]), item[1]))
    mismatches = []
    for key in keys:
        a = left_terms.get(key, Fraction(0))
        b = right_terms.get(key, Fraction(0))
        if not is_zero_value(_as_sympy(a) - _as_sympy(b)):
            mismatches.append(
                Mismatch(key[0], left.format_monomial(key[1]), _format_value(a), _format_value(b))
            )
    return VerificationReport(name, len(keys), mismatches, left.genus_limited or right.genus_limited)


def _insertion_multisets(
    candidates: List[Tuple[int, int]], size: int, budget: int
) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """Multisets of candidate (a, m) pairs of the given size with sum a <= budget."""
    prefix: List[Tuple[int, int]] = []

    def extend(start: int, remaining: int, left: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for index in range(start, len(candidates)):
            a = candidates[index][0]
            if a > left:
                continue
            prefix.append(candidates[index])
            yield from extend(index, remaining - 1, left - a)
            prefix.pop()

    yield from extend(0, size, budget)


def enumerate_keys(r: int, truncation_order: int, max_genus: int = 0) -> List[CorrelatorKey]:
    """Every key with no m_i = r - 1 that passes the selection rule, up to the order."""
    keys: List[CorrelatorKey] = []
    for g in range(max_genus + 1):
        for n in range(1, truncation_order + 1):
            dimension = 3 * g - 3 + n
            if dimension < 0 or 2 * g - 2 + n <= 0:
                continue
            candidates = [(a, m) for a in range(dimension + 1) for m in range(r - 1)]
            for pairs in _insertion_multisets(candidates, n, dimension):
                key = CorrelatorKey.of(g, pairs, r)
                if selection_rule(key):
                    keys.append(key)
    logger.debug("Enumerated %d correlator keys for r=%d order %d", len(keys), r, truncation_order)
    return keys


def enumerate_tilde_tuples(r: int, truncation_order: int, max_genus: int = 0) -> List[Tuple[int, Tuple[int, ...]]]:
    """Every (g, mtilde multiset) up to the order whose a-values fit 3g-3+n.

    Indices with mtilde = -1 mod r are included; tilde_correlator decides
    which tuples vanish.
    """
    tuples: List[Tuple[int, Tuple[int, ...]]] = []
    for g in range(max_genus + 1):
        for n in range(1, truncation_order + 1):
            dimension = 3 * g - 3 + n
            if dimension < 0:
                continue
            candidates = [(a, m) for a in range(dimension + 1) for m in range(r)]
            for pairs in _insertion_multisets(candidates, n, dimension):
                tuples.append((g, tuple(a * r + m for a, m in pairs)))
    logger.debug("Enumerated %d tilde tuples for r=%d order %d", len(tuples), r, truncation_order)
    return tuples


def build_potentials(table: CorrelatorTable, truncation_order: int, max_genus: int = 0) -> Potentials:
    """Phi, chi and chi~ truncated at total degree truncation_order.

    Numeric tables only contribute the genus-zero stratum.
    """
    r = table.r
    genus_limited = table.mode == NUMERIC
    if genus_limited:
        if max_genus > 0:
            logger.warning("Numeric table: only the lambda^-2 stratum is present")
        max_genus = 0
    phi = PotentialSeries(r, LARGE, truncation_order, genus_limited)
    chi_tilde = PotentialSeries(r, TILDE, truncation_order, genus_limited)
    for key in enumerate_keys(r, truncation_order, max_genus):
        lambda_exponent = 2 * key.g - 2
        value = lookup_or_zero(table, key)
        if not is_zero_value(value):
            monomial = _monomial([(pair.a, pair.m) for pair in key.insertions])
            phi._accumulate(lambda_exponent, monomial, scale_value(_symmetry_factor(monomial), value))
    for g, mtilde in enumerate_tilde_tuples(r, truncation_order, max_genus):
        tilde_value = tilde_correlator(table, g, mtilde)
        if not is_zero_value(tilde_value):
            monomial = _monomial([(index,) for index in mtilde])
            chi_tilde._accumulate(
                2 * g - 2, monomial, scale_value(_symmetry_factor(monomial), tilde_value)
            )
    chi = phi.map_variables(SMALL, lambda variable: (Fraction(1), (variable[1],)) if variable[0] == 0 else None)
    return Potentials(phi, chi, chi_tilde)


def _tilde_to_large(r: int) -> Callable[[Variable], Tuple[Fraction, Variable]]:
    def mapping(variable: Variable) -> Tuple[Fraction, Variable]:
        pair = decompose_index(variable[0], r)
        return variable_map_coefficient(pair.a, pair.m, r), (pair.a, pair.m)

    return mapping


def restrict_tilde_to_small(chi_tilde: PotentialSeries) -> PotentialSeries:
    """Set tt[m] = x[m] for m <= r - 1 and every other tt to zero."""
    r = chi_tilde.r
    return chi_tilde.map_variables(
        SMALL, lambda variable: (Fraction(1), variable) if variable[0] <= r - 1 else None
    )


def verify_change_of_variables(
    table: CorrelatorTable, truncation_order: int, max_genus: int = 0
) -> VerificationReport:
    """chi~ with tt[ar+m] = c * t[a,m] substituted must equal Phi coefficientwise."""
    potentials = build_potentials(table, truncation_order, max_genus)
    substituted = potentials.chi_tilde.map_variables(LARGE, _tilde_to_large(table.r))
    report = _compare("change-of-variables", substituted, potentials.phi)
    logger.info("Change of variables r=%d order %d: %s", table.r, truncation_order, report.passed)
    return report


def verify_small_phase_space(
    table: CorrelatorTable, truncation_order: int, max_genus: int = 0
) -> VerificationReport:
    """chi~ restricted to tt[m] = x[m], m <= r - 1, must equal chi."""
    potentials = build_potentials(table, truncation_order, max_genus)
    return _compare("small-phase-space", restrict_tilde_to_small(potentials.chi_tilde), potentials.chi)
