"""Agreement of the two flow presentations under t~^(ar+m) = c * t_a^m.

By the chain rule d/dt_a^m = c * d/dt~^(ar+m), with c the change-of-variables
coefficient from the descent module.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from rspin.descent import variable_map_coefficient
from rspin.diffalg.scalar import format_rational
from rspin.hierarchy.flows import FlowResult, flow_standard, flow_tilde
from rspin.hierarchy.lax import DEFAULT_DEPTH_OFFSET, LaxOperator, build_lax

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConsistencyCase:
    r: int
    a: int
    m: int
    coefficient: Fraction
    passed: bool
    standard: FlowResult = field(compare=False)
    tilde: FlowResult = field(compare=False)

    def line(self) -> str:
        return f"r={self.r} a={self.a} m={self.m} : {'PASS' if self.passed else 'FAIL'}"

    def lines(self) -> List[str]:
        lines = [self.line()]
        if not self.passed:
            lines.append("  standard: " + "; ".join(self.standard.equations()))
            lines.append(
                f"  tilde (times {format_rational(self.coefficient)}): "
                + "; ".join(self.tilde.equations())
            )
        return lines

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "a": self.a,
            "m": self.m,
            "coefficient": format_rational(self.coefficient),
            "passed": self.passed,
            "standard": self.standard.to_dict(),
            "tilde": self.tilde.to_dict(),
        }


@dataclass(frozen=True)
class ConsistencyReport:
    cases: List[ConsistencyCase]

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    def lines(self) -> List[str]:
        lines: List[str] = []
        for case in self.cases:
            lines.extend(case.lines())
        return lines

    def __str__(self) -> str:
        return "\n".join(self.lines())

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "cases": [case.to_dict() for case in self.cases]}


def _check_case(
    lax: LaxOperator, a: int, m: int, depth: Optional[int], depth_offset: int
) -> ConsistencyCase:
    r = lax.r
    coefficient = variable_map_coefficient(a, m, r)
    standard = flow_standard(lax, a, m, depth, depth_offset)
    tilde = flow_tilde(lax, a * r + m, depth, depth_offset)
    passed = all(
        standard.evolution[field_index] == tilde.evolution[field_index].scale(coefficient)
        for field_index in range(r - 1)
    )
    if not passed:
        logger.warning("Presentations disagree for r=%d a=%d m=%d", r, a, m)
    return ConsistencyCase(r, a, m, coefficient, passed, standard, tilde)


def check_presentation_consistency(
    r: int,
    a: int,
    m: int,
    depth: Optional[int] = None,
    depth_offset: int = DEFAULT_DEPTH_OFFSET,
) -> ConsistencyReport:
    """Compare flow_standard(a, m) with c * flow_tilde(a*r + m) exactly."""
    return ConsistencyReport([_check_case(build_lax(r), a, m, depth, depth_offset)])


def check_flow_grid(
    r: int,
    max_a: int,
    depth: Optional[int] = None,
    depth_offset: int = DEFAULT_DEPTH_OFFSET,
) -> ConsistencyReport:
    """The consistency check over every a <= max_a and 0 <= m <= r - 1."""
    if max_a < 0:
        raise ValueError(f"max_a must be nonnegative, got {max_a}")
    lax = build_lax(r)
    cases = [
        _check_case(lax, a, m, depth, depth_offset)
        for a in range(max_a + 1)
        for m in range(r)
    ]
    return ConsistencyReport(cases)
