"""Protocol defining the configuration source interface.

Any class implementing this protocol can provide configuration data.
"""
from typing import Any, Dict, Protocol


class ConfigSource(Protocol):
    """Source of engine configuration data.

    Examples:
        - Filesystem (JSON files)
        - In-memory (testing)
    """

    def load(self) -> Dict[str, Any]:
        """Load the engine configuration dictionary.

        Raises:
            FileNotFoundError: If required configuration is not found
        """
        ...
