"""Seed oracle specs.

Declarative shapes for seed resolver inputs and outputs.
"""
from fractions import Fraction
from typing import List, Tuple, TypedDict


class SeedSpec(TypedDict, total=False):
    """Specification for a seed request."""

    r: int
    max_points: int


# (genus, ((a, m), ...), value)
SeedEntry = Tuple[int, Tuple[Tuple[int, int], ...], Fraction]
SeedEntries = List[SeedEntry]
