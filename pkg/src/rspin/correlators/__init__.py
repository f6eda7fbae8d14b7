"""Correlator tables, descendant potentials and the change-of-variables check."""
from .potentials import (
    Mismatch,
    PotentialSeries,
    Potentials,
    VerificationReport,
    build_potentials,
    enumerate_keys,
    enumerate_tilde_tuples,
    restrict_tilde_to_small,
    verify_change_of_variables,
    verify_small_phase_space,
)
from .sources import FilesystemTableSource, TableSource
from .table import (
    FORMAL,
    NUMERIC,
    CorrelatorKey,
    CorrelatorTable,
    SelectionResult,
    lookup_or_zero,
    seed_genus0_wk,
    selection_rule,
    tilde_correlator,
)

__all__ = [
    "FORMAL",
    "NUMERIC",
    "CorrelatorKey",
    "CorrelatorTable",
    "FilesystemTableSource",
    "Mismatch",
    "PotentialSeries",
    "Potentials",
    "SelectionResult",
    "TableSource",
    "VerificationReport",
    "build_potentials",
    "enumerate_keys",
    "enumerate_tilde_tuples",
    "lookup_or_zero",
    "restrict_tilde_to_small",
    "seed_genus0_wk",
    "selection_rule",
    "tilde_correlator",
    "verify_change_of_variables",
    "verify_small_phase_space",
]
