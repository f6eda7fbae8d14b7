"""Configuration management for the rspin engine.

Architecture:
    - EngineConfig: Core configuration model with factory methods
    - ConfigSource: Protocol for implementing configuration sources
    - FilesystemSource: Default filesystem-based implementation

Example:
    >>> from pathlib import Path
    >>> from rspin.config import EngineConfig, FilesystemSource
    >>>
    >>> source = FilesystemSource(Path("./config"))
    >>> config = EngineConfig.from_dict(source.load())
    >>> print(config.depth_offset, config.truncation_order)
"""
from .engine_config import EngineConfig
from .sources import ConfigSource, FilesystemSource

__all__ = ["ConfigSource", "EngineConfig", "FilesystemSource"]
