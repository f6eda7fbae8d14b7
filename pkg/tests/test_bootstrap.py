import argparse
import json
import logging

import pytest

from rspin.bootstrap import create_config_from_args
from rspin.config import EngineConfig
from rspin.observability import configure_logging


def _args(**overrides) -> argparse.Namespace:
    values = {"config_base_path": None, "format": None, "verbose": False}
    values.update(overrides)
    return argparse.Namespace(**values)


def test_given_no_config_when_create_config_called_then_returns_defaults():
    assert create_config_from_args(_args()) == EngineConfig()


def test_given_config_directory_when_create_config_called_then_loads_engine_file(tmp_path, valid_engine_config_dict):
    (tmp_path / "engine.json").write_text(json.dumps(valid_engine_config_dict))

    config = create_config_from_args(_args(config_base_path=str(tmp_path)))

    assert config.depth_offset == 4
    assert config.output_format == "structured"


def test_given_format_flag_when_create_config_called_then_overrides_file(tmp_path, valid_engine_config_dict):
    (tmp_path / "engine.json").write_text(json.dumps(valid_engine_config_dict))

    config = create_config_from_args(_args(config_base_path=str(tmp_path), format="text"))

    assert config.output_format == "text"
    assert config.truncation_order == 5


def test_given_invalid_configured_value_when_create_config_called_then_raises_value_error(tmp_path):
    (tmp_path / "engine.json").write_text(json.dumps({"potentials": {"truncation_order": "six"}}))

    with pytest.raises(ValueError, match="truncation_order"):
        create_config_from_args(_args(config_base_path=str(tmp_path)))


def test_given_verbose_when_configure_logging_called_then_sets_info_level():
    configure_logging(verbose=True)
    logger = logging.getLogger("rspin")

    assert logger.level == logging.INFO
    assert len(logger.handlers) == 1
    assert logger.propagate is False

    configure_logging(verbose=False)

    assert logger.level == logging.WARNING
    assert len(logger.handlers) == 1
