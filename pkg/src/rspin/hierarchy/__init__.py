"""Lax operator and the two presentations of the KdV_r flows."""
from .consistency import (
    ConsistencyCase,
    ConsistencyReport,
    check_flow_grid,
    check_presentation_consistency,
)
from .flows import (
    FlowIndex,
    FlowResult,
    evolution_equations,
    flow_commutator,
    flow_derivative,
    flow_standard,
    flow_tilde,
    flows_commute,
    standard_prefactor,
    tilde_prefactor,
)
from .lax import DEFAULT_DEPTH_OFFSET, LaxOperator, build_lax, default_depth

__all__ = [
    "ConsistencyCase",
    "ConsistencyReport",
    "DEFAULT_DEPTH_OFFSET",
    "FlowIndex",
    "FlowResult",
    "LaxOperator",
    "build_lax",
    "check_flow_grid",
    "check_presentation_consistency",
    "default_depth",
    "evolution_equations",
    "flow_commutator",
    "flow_derivative",
    "flow_standard",
    "flow_tilde",
    "flows_commute",
    "standard_prefactor",
    "tilde_prefactor",
]
