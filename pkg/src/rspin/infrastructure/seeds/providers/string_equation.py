"""Genus-zero r=2 correlators from the string equation.

<tau_0 tau_{a1} ... tau_{an}>_0 = sum_j <tau_{a1} ... tau_{aj - 1} ... tau_{an}>_0
with base <tau_0^3>_0 = 1. The solution is (n-3)! / prod a_i! whenever
sum a_i = n - 3.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Tuple

from ..resolver import SeedResolver
from ..specs import SeedEntries, SeedSpec

DEFAULT_MAX_POINTS = 6


@lru_cache(maxsize=None)
def _string_equation(descendants: Tuple[int, ...]) -> int:
    n = len(descendants)
    if n < 3 or sum(descendants) != n - 3:
        return 0
    if n == 3:
        return 1
    # sum a_i = n - 3 < n forces at least one tau_0
    rest = list(descendants)
    rest.remove(0)
    total = 0
    for index, a in enumerate(rest):
        if a == 0:
            continue
        lowered = rest[:index] + [a - 1] + rest[index + 1:]
        total += _string_equation(tuple(sorted(lowered)))
    return total


def string_equation_value(descendants: Tuple[int, ...]) -> int:
    """<tau_{a1} ... tau_{an}>_0 for pure gravity."""
    return _string_equation(tuple(sorted(descendants)))


@SeedResolver.register(2)
def _build_string_equation_seed(config: SeedSpec) -> SeedEntries:
    """All nonzero genus-zero keys with 3 <= n <= max_points."""
    max_points = config.get("max_points", DEFAULT_MAX_POINTS)
    if max_points < 0:
        raise ValueError(f"max_points must be nonnegative, got {max_points}")
    entries: SeedEntries = []
    for n in range(3, max_points + 1):
        for descendants in combinations_with_replacement(range(n - 2), n):
            if sum(descendants) != n - 3:
                continue
            value = string_equation_value(descendants)
            entries.append((0, tuple((a, 0) for a in descendants), Fraction(value)))
    return entries
