#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Run configuration.

A run is declared in one YAML (or JSON) file::

    command: energy
    input:
      kind: kronecker
    n_schedule: [64, 256, 1024]
    t_schedule:
      rule: log
    output: out
    tolerances:
      energy: 1.0e-12

Command-line flags override ``output``, ``threads`` and ``seed``.
"""

# Standard imports
import logging
import math
import os
from typing import Dict, Optional, Tuple, Union

# Third party imports
import attr
import psutil
import yaml

# Application imports
from ..exception import ConfigError, DomainError
from ..sequences.generator import GeneratorSpec
from .schedule import TSchedule

logger = logging.getLogger(__name__)

COMMANDS = ("energy", "profile", "discrepancy", "paircorr", "bound", "report")

METHODS = ("auto", "direct", "fast", "spectral", "gaussian")

DEFAULT_TOLERANCES = {"energy": 1e-12, "heat": 1e-12}

DEFAULT_VERDICTS = {
    "poissonian_tol": 0.2,
    "weak_alpha": 0.5,
    "energy_tol": 1e-3,
    "gaussian_tol": 0.15,
}


def default_threads() -> int:
    """ Physical cores, or 1 when unknown """
    return psutil.cpu_count(logical=False) or 1


# end default_threads()


def _merge(defaults: dict, overrides, name: str) -> Dict[str, float]:
    """ Overlays numeric overrides on defaults, rejecting unknown keys """

    overrides = overrides or {}
    if not isinstance(overrides, dict):
        raise ConfigError(f"{name} must be a mapping")
    unknown = set(overrides) - set(defaults)
    if unknown:
        raise ConfigError(f"Unknown {name} entries {sorted(unknown)}")
    merged = dict(defaults)
    for key, value in overrides.items():
        try:
            merged[key] = float(value)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{name}.{key} must be a number") from exc
    return merged


# end _merge()


@attr.s(frozen=True)
class RunConfig:
    """ Validated run settings """

    command = attr.ib(type=str)
    input = attr.ib(type=Union[GeneratorSpec, str])
    n_schedule = attr.ib(type=Tuple[int, ...])
    t_schedule = attr.ib(type=Optional[TSchedule], default=None)
    output = attr.ib(type=str, default="out")
    threads = attr.ib(type=int, factory=default_threads)
    seed = attr.ib(type=Optional[int], default=None)
    method = attr.ib(type=str, default="auto")
    tolerances = attr.ib(type=Dict[str, float],
                         factory=lambda: dict(DEFAULT_TOLERANCES))
    verdicts = attr.ib(type=Dict[str, float], factory=lambda: dict(DEFAULT_VERDICTS))

    # Bound and pair-correlation settings
    c = attr.ib(type=Union[float, str], default="calibrate")
    s_grid = attr.ib(type=Tuple[float, ...], default=tuple(float(s) for s in range(1, 9)))
    alpha = attr.ib(type=float, default=1.0)
    include_diagonal = attr.ib(type=bool, default=False)

    # Fixed heat time of the fixed-time energy criterion
    fixed_t = attr.ib(type=float, default=1.0)
    record_wall_time = attr.ib(type=bool, default=True)

    def __attrs_post_init__(self):
        """ Cross-field validation """

        if self.command not in COMMANDS:
            raise ConfigError(f"Unknown command {self.command!r}, expected one of {COMMANDS}")
        if not self.n_schedule or any(n < 1 for n in self.n_schedule):
            raise ConfigError(f"n_schedule must list positive sizes: {self.n_schedule}")
        if self.command in ("energy", "profile") and self.t_schedule is None:
            raise ConfigError(f"Command {self.command} needs a t_schedule")
        if self.command == "profile":
            if self.t_schedule.times is None or not self.t_schedule.is_ascending:
                raise ConfigError("Invalid schedule: profile needs strictly ascending times")
        if self.method not in METHODS:
            raise ConfigError(f"Unknown method {self.method!r}, expected one of {METHODS}")
        if self.threads < 1:
            raise ConfigError(f"threads must be at least 1, got {self.threads}")
        if self.c != "calibrate" and not (isinstance(self.c, float) and self.c > 0):
            raise ConfigError(f"c must be positive or 'calibrate', got {self.c!r}")
        if not 0 < self.alpha <= 1:
            raise ConfigError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not 0 < self.verdicts["weak_alpha"] < 1:
            raise ConfigError("verdicts.weak_alpha must lie in (0, 1)")
        if not (math.isfinite(self.fixed_t) and self.fixed_t > 0):
            raise ConfigError(f"fixed_t must be positive, got {self.fixed_t}")
        if not self.s_grid or any(s < 0 for s in self.s_grid) or \
                any(b <= a for a, b in zip(self.s_grid, self.s_grid[1:])):
            raise ConfigError("s_grid must be nonnegative and strictly ascending")

    # end __attrs_post_init__()

    @property
    def label(self) -> str:
        """ Name of the input for reports """

        if isinstance(self.input, GeneratorSpec):
            return self.input.label or self.input.kind
        return os.path.basename(self.input)

    # end label()

    @classmethod
    def from_settings(cls, settings: dict) -> "RunConfig":
        """ Builds a config from a mapping.

        Raises:
            ``ConfigError`` for missing, unknown or invalid entries.
        """

        if not isinstance(settings, dict):
            raise ConfigError("Configuration must be a mapping")
        known = {field.name for field in attr.fields(cls)}
        unknown = set(settings) - known
        if unknown:
            raise ConfigError(f"Unknown configuration entries {sorted(unknown)}")
        for key in ("command", "input", "n_schedule"):
            if key not in settings:
                raise ConfigError(f"Configuration misses {key!r}")

        kwargs = dict(settings)
        source = settings["input"]
        if isinstance(source, dict) and settings.get("seed") is not None:
            source = dict(source, seed=settings["seed"])
        try:
            if isinstance(source, dict):
                kwargs["input"] = GeneratorSpec.from_settings(source)
            elif isinstance(source, str):
                kwargs["input"] = source
            else:
                raise ConfigError("input must be a generator mapping or a file path")
            kwargs["n_schedule"] = tuple(int(n) for n in settings["n_schedule"])
            if settings.get("t_schedule") is not None:
                kwargs["t_schedule"] = TSchedule.from_settings(settings["t_schedule"])
            if "s_grid" in settings:
                kwargs["s_grid"] = tuple(float(s) for s in settings["s_grid"])
            for key in ("alpha", "fixed_t"):
                if key in settings:
                    kwargs[key] = float(settings[key])
            if "c" in settings and settings["c"] != "calibrate":
                kwargs["c"] = float(settings["c"])
            if "threads" in settings:
                kwargs["threads"] = int(settings["threads"])
            if settings.get("seed") is not None:
                kwargs["seed"] = int(settings["seed"])
        except DomainError as exc:
            raise ConfigError(f"Invalid input generator: {exc}") from exc
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"Invalid configuration value: {exc}") from exc

        kwargs["tolerances"] = _merge(DEFAULT_TOLERANCES, settings.get("tolerances"),
                                      "tolerances")
        kwargs["verdicts"] = _merge(DEFAULT_VERDICTS, settings.get("verdicts"), "verdicts")
        return cls(**kwargs)

    # end from_settings()

# end class RunConfig


def read_settings(path: str) -> dict:
    """ Reads a YAML or JSON configuration file into a mapping.

    Raises:
        ``ConfigError`` when the file cannot be read or parsed.
    """

    try:
        with open(path, "r", encoding="utf-8") as stream:
            settings = yaml.safe_load(stream)
    except OSError as exc:
        raise ConfigError(f"Cannot read configuration {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"Cannot parse configuration {path}: {exc}") from exc
    if not isinstance(settings, dict):
        raise ConfigError(f"Configuration {path} is not a mapping")
    logger.debug("Loaded configuration from %s", path)
    return settings


# end read_settings()


def load_config(path: str, overrides: dict = None) -> RunConfig:
    """ Loads a configuration file, applying overrides such as command-line
    flags whose value is not ``None``.
    """

    settings = read_settings(path)
    settings.update({key: value for key, value in (overrides or {}).items()
                     if value is not None})
    return RunConfig.from_settings(settings)


# end load_config()
