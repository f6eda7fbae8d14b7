"""Engine bootstrap.

Builds the engine configuration from parsed CLI arguments and sets up
diagnostics.
"""
import argparse
from dataclasses import replace
from pathlib import Path

from rspin.config import EngineConfig, FilesystemSource
from rspin.observability import configure_logging


def create_config_from_args(args: argparse.Namespace) -> EngineConfig:
    """Create an engine configuration from parsed CLI arguments.

    Values from --config DIR are loaded first; flags given on the command
    line override them.

    Args:
        args: Parsed command-line arguments

    Returns:
        Configured EngineConfig

    Raises:
        FileNotFoundError: If --config points at a missing directory or file
        ValueError: If a configured value is invalid
    """
    config_base_path = getattr(args, "config_base_path", None)
    if config_base_path:
        config = EngineConfig.from_dict(FilesystemSource(Path(config_base_path)).load())
    else:
        config = EngineConfig()

    output_format = getattr(args, "format", None)
    if output_format:
        config = replace(config, output_format=output_format)

    configure_logging(getattr(args, "verbose", False))

    return config
