import sys
from dataclasses import dataclass, fields
from pathlib import Path

import yaml
from sympy import isprime

from model import ConfigError, PreconditionError
from .verify import ReducibilityConfig


DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[1] / 'config.yaml'
OUTPUT_FORMATS = ('json-lines', 'markdown')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')



@dataclass
class RunConfig:
    ell_min: int = 11
    ell_max: int = 499
    aux_prime: int = 5
    weil_p: int = 3
    weil_dmax: int = 2
    parallelism: int = 1
    output_format: str = 'json-lines'
    max_degree: int = 4
    totally_real: bool = True
    trial_division_bound: int = 1000
    max_curve_conductor_2part: int = 256
    max_character_conductor: int = 16
    max_character_order: int = 4
    log_level: str = 'WARNING'

    def __post_init__(self):
        if self.ell_min <= 7:
            raise ConfigError(f"ell_min must exceed 7, got {self.ell_min}")
        if self.ell_min > self.ell_max:
            raise ConfigError(f"empty window: ell_min {self.ell_min} > ell_max {self.ell_max}")
        if not 1 <= self.weil_dmax <= self.max_degree:
            raise ConfigError(f"weil_dmax must lie in [1, {self.max_degree}], got {self.weil_dmax}")
        if not isprime(self.weil_p):
            raise ConfigError(f"weil_p must be prime, got {self.weil_p}")
        if self.parallelism < 1:
            raise ConfigError(f"parallelism must be at least 1, got {self.parallelism}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigError(f"log_level must be one of {LOG_LEVELS}, got {self.log_level!r}")
        self.reducibility()


    @classmethod
    def from_yaml(cls, path=DEFAULT_CONFIG_PATH, **overrides):
        """Flatten the grouped YAML file, then apply the non-None overrides."""
        with open(path, 'r') as f:
            params = yaml.load(f, Loader=yaml.FullLoader) or {}

        values = {}
        for group in params.keys():
            for key, val in params[group].items():
                values[key] = val
        values.update({key: val for key, val in overrides.items() if val is not None})

        unknown = set(values) - {f.name for f in fields(cls)}
        if unknown:
            raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")
        return cls(**values)


    def reducibility(self):
        try:
            return ReducibilityConfig(
                max_curve_conductor_2part=self.max_curve_conductor_2part,
                max_character_conductor=self.max_character_conductor,
                max_character_order=self.max_character_order,
                auxiliary_prime=self.aux_prime,
            )
        except PreconditionError as e:
            raise ConfigError(str(e)) from e


    def print_attr(self, stream=sys.stderr):
        for attribute, value in self.__dict__.items():
            print(f"* {attribute}: {value}", file=stream)
