"""
Experiment Configuration
Merges defaults, an optional key=value file and command-line flags into a
validated ExperimentConfig
"""

import logging
import os
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from utils.errors import ConfigError
from utils.formatting import parse_int_like

logger = logging.getLogger(__name__)

ZEROS_ENV = "WG_ZEROS_PATH"

SUBCOMMANDS = (
    "exponents", "table1", "solve-phi", "sieve-experiment", "main-term-check",
    "lattice-count", "psi-interval", "explicit-formula", "s-rho-audit", "osc-audit", "plot-data",
)

PLOT_KINDS = ("phi", "ratio-vs-x", "explicit-error", "singular-series")


class ExperimentConfig(BaseModel):
    """Every parameter a subcommand can take; unknown keys are rejected"""

    model_config = ConfigDict(extra="forbid")

    subcommand: Literal[SUBCOMMANDS]

    k: Optional[float] = None
    l: Optional[float] = None
    x: Optional[int] = None
    h: Optional[str] = None
    eps: float = 0.05
    weight: Literal["logp", "lambda"] = "logp"

    k_max: int = 10
    l_max: int = 20

    zeros: Optional[str] = None
    skip_header: bool = False
    t: Optional[float] = None
    grid: Optional[str] = None
    count: int = 50
    lower_order: bool = False
    tol: float = 1e-8

    kind: Optional[Literal[PLOT_KINDS]] = None
    points: Optional[int] = None
    html: bool = False
    P: int = 10_000

    out: Optional[str] = None
    ledger: str = "ledger.csv"
    results_dir: str = "results"
    threads: int = 1
    quiet: bool = False
    verbose: bool = False

    @field_validator("x", mode="before")
    @classmethod
    def _parse_x(cls, value):
        if value is None:
            return None
        return parse_int_like(value)

    @field_validator("threads", "count", "k_max", "l_max", "P")
    @classmethod
    def _positive(cls, value):
        if value < 1:
            raise ValueError("must be at least 1")
        return value

    def require(self, *names):
        """Raise ConfigError naming every missing parameter"""
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            flags = ", ".join(f"--{name.replace('_', '-')}" for name in missing)
            raise ConfigError(f"{self.subcommand} needs {flags}")

    def int_param(self, name):
        """An integer-valued parameter given as a float"""
        self.require(name)
        value = getattr(self, name)
        if value != int(value):
            raise ConfigError(f"--{name} must be an integer for {self.subcommand}, got {value}")
        return int(value)


def read_config_file(path):
    """
    Read a key=value configuration file

    Blank lines and lines starting with # are ignored; keys may use - or _.

    Args:
        path (str or Path): Configuration file

    Returns:
        dict: Raw string values keyed by parameter name
    """
    values = {}
    with open(Path(path), "r", encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep or not key.strip():
                raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
            values[key.strip().replace("-", "_")] = value.strip()
    logger.debug("read %d settings from %s", len(values), path)
    return values


def build_config(subcommand, flags, config_path=None, environ=None):
    """
    Merge defaults < config file < flags and validate

    Args:
        subcommand (str): Subcommand name
        flags (dict): Explicitly given flags; None values are ignored
        config_path (str): Optional key=value file
        environ (dict): Environment, os.environ when omitted

    Returns:
        ExperimentConfig: Validated configuration
    """
    environ = os.environ if environ is None else environ
    merged = {}
    if environ.get(ZEROS_ENV):
        merged["zeros"] = environ[ZEROS_ENV]
    if config_path:
        merged.update(read_config_file(config_path))
    merged.update({key: value for key, value in flags.items() if value is not None})
    merged["subcommand"] = subcommand
    try:
        return ExperimentConfig(**merged)
    except ValidationError as e:
        raise ConfigError(f"invalid configuration for {subcommand}: {e}") from e
