"""Protocol defining the correlator table source interface."""
from typing import Protocol

from rspin.correlators.table import CorrelatorTable


class TableSource(Protocol):
    """Source and sink of persisted correlator tables.

    Examples:
        - Filesystem (JSON documents)
        - In-memory (testing)
    """

    def load(self) -> CorrelatorTable:
        """Load and re-validate a table.

        Raises:
            FileNotFoundError: If the table does not exist
            TableFormatError: If the document or an entry is invalid
        """
        ...

    def dump(self, table: CorrelatorTable) -> None:
        """Persist a table."""
        ...
