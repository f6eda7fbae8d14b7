import random
from typing import Any, Dict

import pytest

from rspin.config import EngineConfig
from rspin.correlators import NUMERIC, CorrelatorTable, seed_genus0_wk
from rspin.hierarchy import build_lax


@pytest.fixture
def valid_engine_config_dict() -> Dict[str, Any]:
    return {
        "depth": {
            "offset": 4
        },
        "potentials": {
            "truncation_order": 5,
            "max_genus": 1,
            "seed_max_points": 5
        },
        "output": {
            "format": "structured"
        }
    }


@pytest.fixture
def valid_engine_config(valid_engine_config_dict) -> EngineConfig:
    return EngineConfig.from_dict(valid_engine_config_dict)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def kdv_lax():
    return build_lax(2)


@pytest.fixture
def boussinesq_lax():
    return build_lax(3)


@pytest.fixture
def wk_table() -> CorrelatorTable:
    return seed_genus0_wk(CorrelatorTable(2, NUMERIC), 6)
