"""Truncated pseudodifferential operator algebra in D = (i / sqrt(r)) d/dx."""
from .operator import (
    PseudoDiffOp,
    certified_equal,
    commutator,
    compose,
    generalized_binomial,
    power,
    residue,
    split_parts,
)
from .powers import check_lax_form, fractional_power, rth_root

__all__ = [
    "PseudoDiffOp",
    "certified_equal",
    "check_lax_form",
    "commutator",
    "compose",
    "fractional_power",
    "generalized_binomial",
    "power",
    "residue",
    "rth_root",
    "split_parts",
]
