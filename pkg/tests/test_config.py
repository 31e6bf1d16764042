import pytest

from hopfcyclic.config import EngineConfig
from hopfcyclic.exceptions import DimensionGuard

pytestmark = pytest.mark.unit


def test_defaults():
    config = EngineConfig()
    assert config.dimension_guard == 5000
    assert config.max_degree == 3
    assert config.power_window == 2
    assert config.to_dict()["output_format"] == "json"


def test_from_env(monkeypatch):
    monkeypatch.setenv("HOPFCYC_DIMENSION_GUARD", "64")
    monkeypatch.setenv("HOPFCYC_MAX_DEGREE", "1")
    monkeypatch.setenv("HOPFCYC_OUTPUT_FORMAT", "yaml")
    monkeypatch.setenv("HOPFCYC_DEBUG", "True")
    config = EngineConfig.from_env()
    assert config.dimension_guard == 64
    assert config.max_degree == 1
    assert config.output_format == "yaml"
    assert config.debug is True


@pytest.mark.parametrize("changes", [
    {"dimension_guard": 0},
    {"max_degree": -1},
    {"order_cap": 0},
    {"power_window": 0},
    {"output_format": "xml"},
])
def test_validate_limits_rejects(changes):
    with pytest.raises(ValueError):
        EngineConfig(**changes).validate_limits()


def test_guard():
    config = EngineConfig(dimension_guard=10)
    config.guard(10)
    with pytest.raises(DimensionGuard) as info:
        config.guard(11, "degree 2")
    assert info.value.dimension == 11
    assert info.value.limit == 10
