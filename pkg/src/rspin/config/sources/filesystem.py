"""Filesystem-based configuration source.

Loads configuration from a directory:
    config/
        engine.json         (required)
"""
import json
from pathlib import Path
from typing import Any, Dict


class FilesystemSource:
    """Load configuration from engine.json in a directory.

    Args:
        base_path: Directory containing engine.json

    Example:
        >>> source = FilesystemSource(Path("./config"))
        >>> config = EngineConfig.from_dict(source.load())
    """

    def __init__(self, base_path: Path):
        self.base_path = base_path

    def load(self) -> Dict[str, Any]:
        """Load the engine configuration.

        Raises:
            FileNotFoundError: If base_path or engine.json doesn't exist
            json.JSONDecodeError: If the file is malformed
        """
        if not self.base_path.exists():
            raise FileNotFoundError(f"Config directory does not exist: {self.base_path}")

        engine_file = self.base_path / "engine.json"
        if not engine_file.exists():
            raise FileNotFoundError(f"Required engine config not found: {engine_file}")

        with open(engine_file) as f:
            return json.load(f)
