"""Command-line front end of the lab."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/experiments/cli.ipynb.

# %% auto #0
__all__ = ['EXIT_OK', 'EXIT_CHECK_FAILURE', 'EXIT_CONFIG_ERROR', 'configure_logging', 'run_command', 'main']

# %% ../../nbs/experiments/cli.ipynb #6e0b2f47
import logging
import math
from pathlib import Path
from typing import Optional, Union

from fastcore.script import Param, call_parse, store_true

from ..core.config import EXPERIMENT_KINDS, load_config, smoke_config
from ..core.errors import ConfigError
from .sweeps import run_simulate, run_strichartz, run_sweep_epsilon, run_sweep_period
from .validate import run_validate

# %% ../../nbs/experiments/cli.ipynb #b8d31c95
logger = logging.getLogger(__name__)

EXIT_OK, EXIT_CHECK_FAILURE, EXIT_CONFIG_ERROR = 0, 1, 2

_RUNNERS = {
    "simulate": run_simulate,
    "sweep-epsilon": run_sweep_epsilon,
    "sweep-period": run_sweep_period,
    "strichartz": run_strichartz,
}

def configure_logging(
    verbose: bool = False  # DEBUG instead of INFO
) -> None:
    """Root handler for command-line runs."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO,
                        format="%(asctime)s %(levelname)s %(name)s %(message)s", force=True)

def run_command(
    experiment: str,  # One of EXPERIMENT_KINDS
    config: Union[str, Path, None] = None,  # Config file; None uses the defaults
    out: Union[str, Path] = "out",  # Output root
    seed: Optional[int] = None,  # Master seed override
    jobs: Optional[int] = None,  # Worker processes override
    smoke: bool = False,  # Use the N=64 preset
    stamp: Optional[str] = None  # Timestamp folder (default: now)
) -> int:  # Exit code: 0 ok, 1 check failure, 2 config error
    """Load the config, run one experiment and write its outputs."""
    try:
        cfg = load_config(config, experiment=experiment, master_seed=seed, jobs=jobs)
        if smoke:
            cfg = smoke_config(cfg)
    except ConfigError as err:
        logger.error("config error key=%s constraint=%s message=%s", err.key, err.constraint, err)
        return EXIT_CONFIG_ERROR
    logger.info("experiment start kind=%s smoke=%s jobs=%d seed=%d", cfg.experiment, smoke, cfg.jobs, cfg.master_seed)
    if cfg.experiment == "validate":
        report = run_validate(cfg, out, stamp)
        logger.info("validation done directory=%s failing=%s", report.directory, report.failing)
        return report.exit_code
    try:
        result = _RUNNERS[cfg.experiment](cfg, out, stamp)
    except ConfigError as err:
        logger.error("config error key=%s constraint=%s message=%s", err.key, err.constraint, err)
        return EXIT_CONFIG_ERROR
    logger.info("experiment done kind=%s directory=%s", cfg.experiment, result.directory)
    if cfg.experiment == "sweep-epsilon" and not result.fit["censored"] and not math.isnan(result.fit["slope"]):
        return EXIT_OK if result.fit["passes"] else EXIT_CHECK_FAILURE
    return EXIT_OK

# %% ../../nbs/experiments/cli.ipynb #0f5ac8e2
@call_parse
def main(
    experiment: Param("Experiment to run", str, choices=EXPERIMENT_KINDS),
    config: Param("Flat key = value config file", str) = None,
    out: Param("Output root directory", str) = "out",
    seed: Param("Master seed override", int) = None,
    jobs: Param("Worker processes", int) = None,
    smoke: Param("Use the N=64 smoke preset", store_true) = False,
    verbose: Param("Log at DEBUG level", store_true) = False
) -> int:
    """Pseudo-spectral water wave lab."""
    configure_logging(verbose)
    return run_command(experiment, config, out, seed, jobs, smoke)
