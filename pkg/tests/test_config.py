import pytest

from model import ConfigError
from module.config import RunConfig
from module.verify import ReducibilityConfig



@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text(
        "sweep:\n"
        "    ell_min: 13\n"
        "    ell_max: 31\n"
        "    parallelism: 2\n"
        "weil:\n"
        "    weil_p: 2\n"
        "    weil_dmax: 1\n"
    )
    return path



def test_default_file_matches_dataclass_defaults():
    assert RunConfig.from_yaml() == RunConfig()


def test_groups_are_flattened(config_file):
    config = RunConfig.from_yaml(config_file)
    assert (config.ell_min, config.ell_max, config.parallelism) == (13, 31, 2)
    assert (config.weil_p, config.weil_dmax) == (2, 1)
    assert config.output_format == 'json-lines'


def test_overrides_win_unless_none(config_file):
    config = RunConfig.from_yaml(config_file, ell_max=97, parallelism=None)
    assert config.ell_max == 97
    assert config.parallelism == 2


def test_unknown_key_is_rejected(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text("sweep:\n    ell_minimum: 11\n")
    with pytest.raises(ConfigError):
        RunConfig.from_yaml(path)


@pytest.mark.parametrize('overrides', [
    {'ell_min': 7},
    {'ell_min': 41, 'ell_max': 31},
    {'weil_dmax': 5},
    {'weil_p': 9},
    {'parallelism': 0},
    {'output_format': 'csv'},
    {'log_level': 'LOUD'},
    {'max_character_order': 2},
    {'aux_prime': 2},
])
def test_invalid_values_raise_config_error(overrides):
    with pytest.raises(ConfigError):
        RunConfig(**overrides)


def test_reducibility_constants():
    assert RunConfig(aux_prime=7).reducibility() == ReducibilityConfig(auxiliary_prime=7)
