"""Exception hierarchy for the rspin engine.

Every domain error is a ValueError so callers can treat bad input uniformly.
"""
from typing import Optional


class RSpinError(ValueError):
    """Base class for all rspin errors."""


class RingMismatchError(RSpinError):
    """Raised when values built for different root indices r are combined."""


class NotInvertibleError(RSpinError):
    """Raised on division by zero or by a zero divisor of the scalar ring."""


class MissingVariableError(RSpinError):
    """Raised when an evaluation assignment does not cover a jet variable."""


class TruncationError(RSpinError):
    """Raised when a result would depend on coefficients below a watermark."""


class LaxFormError(RSpinError):
    """Raised when an operator is not monic with vanishing subleading term."""


class FlowOrderError(RSpinError):
    """Raised when a flow commutator violates the order bound r - 2."""


class TypeTupleError(RSpinError):
    """Raised for type tuples outside the domain of the descent relations."""


class SelectionRuleError(RSpinError):
    """Raised when a correlator entry contradicts the selection or vanishing rules."""


class FrozenTableError(RSpinError):
    """Raised on writes to a frozen correlator table."""


class SeedUnavailableError(RSpinError):
    """Raised when no numeric seed oracle is registered for r."""


class TableFormatError(RSpinError):
    """Raised by the table loader; carries the offending line when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
