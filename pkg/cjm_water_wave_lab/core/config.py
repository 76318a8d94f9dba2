"""Experiment configuration: schema, loading, validation and the smoke preset."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/config.ipynb.

# %% auto #0
__all__ = ['EXPERIMENT_KINDS', 'LIFESPAN_EXPERIMENTS', 'CHECK_NAMES', 'ExperimentConfig', 'config_schema',
           'check_constraints', 'config_from_mapping', 'load_config', 'smoke_config', 'config_echo']

# %% ../../nbs/core/config.ipynb #0b5e1a73
import copy
import math
import logging
from dataclasses import dataclass, field, fields, replace
from functools import lru_cache
from pathlib import Path
from typing import Dict, Any, List, Literal, Optional, Union

from jsonschema import Draft202012Validator

from .dataclass import (SCHEMA_TITLE, SCHEMA_DESC, SCHEMA_MIN, SCHEMA_MAX, SCHEMA_EXCL_MIN, SCHEMA_ENUM,
                        SCHEMA_MIN_ITEMS, dataclass_to_jsonschema)
from .errors import ConfigError
from .parser import SchemaParser

# %% ../../nbs/core/config.ipynb #7c21de04
logger = logging.getLogger(__name__)

EXPERIMENT_KINDS = ["simulate", "sweep-epsilon", "sweep-period", "strichartz", "validate"]
LIFESPAN_EXPERIMENTS = {"simulate", "sweep-epsilon", "sweep-period"}
CHECK_NAMES = [
    "transform_roundtrip", "lp_partition", "parseval", "paraproduct_bound", "split_identity",
    "cross_formulation", "dtn_oracle", "amplitude_scaling", "normal_form_reconstruction", "ibp_convergence",
    "energy_conservation", "time_reversal", "dispersive_decay", "strichartz_frequency", "periodic_loss",
    "wrap_time", "quartic_drift", "inequality_bench",
]

# %% ../../nbs/core/config.ipynb #c4d8e2a9
@dataclass
class ExperimentConfig:
    """Settings for one lab experiment."""
    __schema_name__ = "experiment_config"
    __schema_title__ = "Water wave lab experiment"
    __schema_description__ = "Grid, exponents, physics, integrator and experiment selection"

    experiment: Literal["simulate", "sweep-epsilon", "sweep-period", "strichartz", "validate"] = field(
        default="simulate", metadata={SCHEMA_DESC: "Experiment kind"})
    # Grid
    modes: int = field(default=256, metadata={SCHEMA_TITLE: "N", SCHEMA_MIN: 8, SCHEMA_DESC: "Fourier modes (even)"})
    circumference: float = field(default=200.0, metadata={SCHEMA_TITLE: "R", SCHEMA_EXCL_MIN: 0})
    # Exponents
    s: float = field(default=18.0, metadata={SCHEMA_DESC: "Sobolev exponent of the energy"})
    rho: float = field(default=3.5, metadata={SCHEMA_DESC: "Besov exponent of the spacetime norm"})
    gamma: float = field(default=4.25, metadata={SCHEMA_DESC: "Besov exponent of the DtN estimates"})
    # Physics
    epsilon: float = field(default=0.01, metadata={SCHEMA_MIN: 0, SCHEMA_DESC: "Initial size E_s(0)"})
    epsilon_grid: List[float] = field(default_factory=list, metadata={SCHEMA_DESC: "Sizes for sweep-epsilon"})
    period_grid: List[float] = field(default_factory=list, metadata={SCHEMA_DESC: "Circumferences for sweep-period"})
    seeds: List[int] = field(default_factory=lambda: [0], metadata={SCHEMA_MIN_ITEMS: 1})
    horizon: Optional[float] = field(default=None, metadata={SCHEMA_MIN: 0, SCHEMA_DESC: "Final time; none/auto = 10/eps^2"})
    envelope_center: float = field(default=0.5, metadata={SCHEMA_EXCL_MIN: 0, SCHEMA_DESC: "Envelope centre wavenumber"})
    envelope_width: float = field(default=0.4, metadata={SCHEMA_EXCL_MIN: 0, SCHEMA_DESC: "Envelope full width"})
    # Integrator
    dt: Optional[float] = field(default=None, metadata={SCHEMA_EXCL_MIN: 0, SCHEMA_DESC: "Time step; none/auto = 0.1*min(1, 2pi/Lambda(xi_max))"})
    snapshots: int = field(default=50, metadata={SCHEMA_MIN: 1})
    dtn_order: int = field(default=3, metadata={SCHEMA_MIN: 0, SCHEMA_MAX: 6})
    nonlinear: bool = True
    steepness_limit: float = field(default=0.5, metadata={SCHEMA_EXCL_MIN: 0})
    growth_threshold: float = field(default=2.0, metadata={SCHEMA_EXCL_MIN: 1, SCHEMA_DESC: "Lifespan proxy E_s/E_s(0)"})
    blowup_factor: float = field(default=10.0, metadata={SCHEMA_EXCL_MIN: 1, SCHEMA_DESC: "Halt when E_s/E_s(0) exceeds this"})
    # Harmonic analysis
    k_low: int = field(default=0, metadata={SCHEMA_DESC: "Low Littlewood-Paley block index"})
    cutoff_inner: float = field(default=0.05, metadata={SCHEMA_EXCL_MIN: 0, SCHEMA_DESC: "Paraproduct chi = 1 below this ratio"})
    cutoff_outer: float = field(default=0.1, metadata={SCHEMA_EXCL_MIN: 0, SCHEMA_DESC: "Paraproduct chi = 0 above this ratio"})
    oversample: int = field(default=1, metadata={SCHEMA_ENUM: [1, 2], SCHEMA_DESC: "Sup-norm oversampling"})
    # Strichartz lab
    strichartz_blocks: List[int] = field(default_factory=lambda: [0, 1, 2, 3, 4, 5, 6])
    strichartz_horizon: float = field(default=50.0, metadata={SCHEMA_EXCL_MIN: 0})
    strichartz_period: float = field(default=4000.0, metadata={SCHEMA_EXCL_MIN: 0})
    loss_block: int = field(default=2, metadata={SCHEMA_MIN: 0, SCHEMA_DESC: "Block of the periodic loss check"})
    loss_period: float = field(default=16.0, metadata={SCHEMA_EXCL_MIN: 0, SCHEMA_DESC: "Period of the periodic loss check"})
    # Validation / orchestration
    checks: Optional[List[str]] = field(default=None, metadata={SCHEMA_DESC: "Checks to run; none = all"})
    ensemble_size: int = field(default=50, metadata={SCHEMA_MIN: 2})
    master_seed: int = 0
    jobs: int = field(default=1, metadata={SCHEMA_MIN: 1})

    @property
    def is_lifespan(
        self
    ) -> bool:  # True for experiments bound by the lifespan constraint chain
        """Whether the lifespan constraint chain applies."""
        return self.experiment in LIFESPAN_EXPERIMENTS

    def resolved_horizon(
        self,
        epsilon: Optional[float] = None  # Size to resolve `auto` against (default: self.epsilon)
    ) -> float:  # Final time
        """Horizon with `auto` replaced by 10/eps^2."""
        if self.horizon is not None: return self.horizon
        eps = self.epsilon if epsilon is None else epsilon
        return 0.0 if eps == 0 else 10.0 / eps**2

    def resolved_dt(
        self,
        modes: Optional[int] = None,  # Grid size (default: self.modes)
        circumference: Optional[float] = None  # Grid period (default: self.circumference)
    ) -> float:  # Time step
        """Time step with `auto` replaced by 0.1*min(1, 2pi/Lambda(xi_max))."""
        if self.dt is not None: return self.dt
        n = self.modes if modes is None else modes
        r = self.circumference if circumference is None else circumference
        xi_max = math.pi * n / r
        return 0.1 * min(1.0, 2 * math.pi / math.sqrt(xi_max))

# %% ../../nbs/core/config.ipynb #5a90c3e1
@lru_cache(maxsize=1)
def config_schema(
) -> Dict[str, Any]:  # JSON Schema of ExperimentConfig
    """JSON Schema generated from the ExperimentConfig field metadata."""
    schema = dataclass_to_jsonschema(ExperimentConfig)
    schema["properties"]["checks"]["items"]["enum"] = list(CHECK_NAMES)
    schema["properties"]["modes"]["multipleOf"] = 2
    return schema

# %% ../../nbs/core/config.ipynb #9e3f7b26
def _is_half_integer_multiple(
    x: float  # Value to test
) -> bool:  # True when 2x is an integer
    return math.isclose(2 * x, round(2 * x), rel_tol=0, abs_tol=1e-12)

def check_constraints(
    config: ExperimentConfig  # Schema-valid configuration
) -> None:
    """Check the exponent chain and cross-key constraints; raise ConfigError naming the one violated."""
    if _is_half_integer_multiple(config.gamma):
        raise ConfigError(f"2*gamma = {2 * config.gamma:g} is an integer", key="gamma", constraint="2*gamma not in Z")
    if config.is_lifespan:
        if not config.s > 17.5:
            raise ConfigError(f"s = {config.s:g} must exceed 17.5", key="s", constraint="s > 17.5")
        if not config.s > config.rho + 3.5:
            raise ConfigError(f"s = {config.s:g} must exceed rho + 3.5 = {config.rho + 3.5:g}", key="s",
                              constraint="s > rho + 3.5")
    if config.cutoff_inner >= config.cutoff_outer:
        raise ConfigError("cutoff_inner must be below cutoff_outer", key="cutoff_inner",
                          constraint="cutoff_inner < cutoff_outer")
    if config.experiment == "sweep-epsilon" and (len(config.epsilon_grid) < 3 or len(config.seeds) < 2):
        raise ConfigError("sweep-epsilon needs at least 3 epsilon values and 2 seeds", key="epsilon_grid",
                          constraint="len(epsilon_grid) >= 3 and len(seeds) >= 2")
    if config.experiment == "sweep-period" and not config.period_grid:
        raise ConfigError("sweep-period needs a non-empty period_grid", key="period_grid",
                          constraint="len(period_grid) >= 1")

# %% ../../nbs/core/config.ipynb #2d6b84f0
def config_from_mapping(
    values: Dict[str, Any]  # Typed key values (missing keys take defaults)
) -> ExperimentConfig:  # Validated configuration
    """Validate a mapping with jsonschema and the constraint chain, then build the config."""
    parser = SchemaParser(config_schema())
    merged = {**copy.deepcopy(parser.defaults()), **values}
    validator = Draft202012Validator(config_schema())
    errors = sorted(validator.iter_errors(merged), key=lambda e: list(e.path))
    if errors:
        first = errors[0]
        key = str(first.path[0]) if first.path else None
        raise ConfigError(f"{key or 'config'}: {first.message}", key=key, constraint=first.validator)
    config = ExperimentConfig(**merged)
    check_constraints(config)
    return config

def load_config(
    path: Union[str, Path, None] = None,  # Config file; None gives the defaults
    **overrides: Any  # Keys replacing file values after parsing
) -> ExperimentConfig:  # Validated configuration
    """Read a flat `key = value` config file."""
    values: Dict[str, Any] = {}
    if path is not None:
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"config file not found: {path}")
        values = SchemaParser(config_schema()).parse_text(path.read_text())
        logger.debug("config loaded path=%s keys=%s", path, sorted(values))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return config_from_mapping(values)

# %% ../../nbs/core/config.ipynb #f81c0a4d
def smoke_config(
    config: ExperimentConfig  # Configuration to shrink
) -> ExperimentConfig:  # N=64 preset with short horizons and small ensembles
    """Smoke preset used by `--smoke`."""
    return replace(
        config,
        modes=64,
        circumference=min(config.circumference, 40.0),
        horizon=config.horizon if config.horizon is not None and config.horizon <= 10 else 10.0,
        snapshots=min(config.snapshots, 20),
        ensemble_size=min(config.ensemble_size, 5),
        seeds=config.seeds[:2] if len(config.seeds) >= 2 else config.seeds,
        strichartz_blocks=[k for k in config.strichartz_blocks if k <= 2] or [0],
        strichartz_period=min(config.strichartz_period, 400.0),
        strichartz_horizon=min(config.strichartz_horizon, 20.0),
        loss_period=min(config.loss_period, 16.0),
        envelope_center=1.0,
        envelope_width=1.0,
    )

def config_echo(
    config: ExperimentConfig  # Configuration to echo
) -> str:  # Flat `key = value` text that reloads to the same config
    """Render a config back into the flat key-value format."""
    lines = []
    for f in fields(config):
        value = getattr(config, f.name)
        if value is None: text = "none"
        elif isinstance(value, bool): text = "true" if value else "false"
        elif isinstance(value, list): text = ", ".join(repr(v) if isinstance(v, float) else str(v) for v in value)
        elif isinstance(value, float): text = repr(value)
        else: text = str(value)
        lines.append(f"{f.name} = {text}")
    return "\n".join(lines) + "\n"
