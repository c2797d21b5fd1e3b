# core/config.py

"""
Per-run configuration. Defaults come from settings.ALGEBRA; a `--config FILE`
holding KEY=value lines overrides them. The file is parsed with django-environ
into a private mapping, so a run never writes to os.environ.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import environ
from django.conf import settings

from .exceptions import ConfigError

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json")


@dataclass(frozen=True)
class Config:
    max_level: int
    series_order: int
    output_format: str
    weight_cap: int
    rewrite_budget: int
    growth_window: tuple[int, int]

    def __post_init__(self):
        for name in ("max_level", "series_order", "weight_cap", "rewrite_budget"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"output format must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}"
            )
        start, end = self.growth_window
        if not 1 <= start <= end:
            raise ConfigError(f"growth window [{start}, {end}] must satisfy 1 <= start <= end")


def _private_env() -> environ.Env:
    """An Env whose reads and writes go to a fresh dict instead of os.environ."""
    reader = type("ConfigFileEnv", (environ.Env,), {"ENVIRON": {}})
    return reader()


def load_config(path: str | None = None) -> Config:
    defaults = settings.ALGEBRA
    env = _private_env()
    if path is not None:
        if not Path(path).is_file():
            raise ConfigError(f"config file {path} does not exist")
        type(env).read_env(path, overwrite=True)
        logger.info(f"configuration overrides read from {path}")
    try:
        return Config(
            max_level=env.int("ALGEBRA_MAX_LEVEL", default=defaults["MAX_LEVEL"]),
            series_order=env.int("ALGEBRA_SERIES_ORDER", default=defaults["SERIES_ORDER"]),
            output_format=env.str("ALGEBRA_OUTPUT_FORMAT", default=defaults["OUTPUT_FORMAT"]),
            weight_cap=env.int("ALGEBRA_WEIGHT_CAP", default=defaults["WEIGHT_CAP"]),
            rewrite_budget=env.int("ALGEBRA_REWRITE_BUDGET", default=defaults["REWRITE_BUDGET"]),
            growth_window=(
                env.int("ALGEBRA_GROWTH_WINDOW_START", default=defaults["GROWTH_WINDOW"][0]),
                env.int("ALGEBRA_GROWTH_WINDOW_END", default=defaults["GROWTH_WINDOW"][1]),
            ),
        )
    except ValueError as exc:
        raise ConfigError(f"invalid configuration value: {exc}") from exc
