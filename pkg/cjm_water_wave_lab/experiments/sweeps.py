"""Experiment drivers: single runs, lifespan sweeps and the Strichartz table."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/experiments/sweeps.ipynb.

# %% auto #0
__all__ = ['REGIMES', 'diagnostics_settings', 'integrator_settings', 'modes_for_period', 'run_member', 'lifespan_regime',
           'ExperimentResult', 'run_simulate', 'SweepRow', 'lifespan_fit', 'run_sweep_epsilon', 'run_sweep_period',
           'run_strichartz']

# %% ../../nbs/experiments/sweeps.ipynb #1f3b7d2c
import logging
import math
import time
from dataclasses import asdict, dataclass, field
from functools import partial
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from fastcore.parallel import parallel
from scipy import stats

from ..core.config import ExperimentConfig, config_echo
from ..core.records import RunRecord, run_directory, write_json, write_rows_csv
from ..diagnostics.functionals import DiagnosticsSettings
from ..evolution.initial import SpectralEnvelope, make_initial_data
from ..evolution.integrator import IntegratorSettings
from ..evolution.simulate import simulate
from ..spectral.grid import PeriodicGrid
from ..spectral.paraproduct import ParaproductCutoff
from ..strichartz.lab import dispersion_report

# %% ../../nbs/experiments/sweeps.ipynb #84a2c6e0
logger = logging.getLogger(__name__)

def diagnostics_settings(
    config: ExperimentConfig  # Experiment settings
) -> DiagnosticsSettings:  # Exponents and operator settings of the diagnostics
    return DiagnosticsSettings(s=config.s, rho=config.rho, order=config.dtn_order,
                               steepness_limit=config.steepness_limit,
                               cutoff=ParaproductCutoff(config.cutoff_inner, config.cutoff_outer),
                               k_low=config.k_low, oversample=config.oversample)

def integrator_settings(
    config: ExperimentConfig  # Experiment settings
) -> IntegratorSettings:  # Physics switches of the stepper
    return IntegratorSettings(config.dtn_order, config.steepness_limit, config.nonlinear)

def modes_for_period(
    config: ExperimentConfig,  # Experiment settings
    circumference: float  # Period of the run
) -> int:  # Power of two keeping the configured grid spacing (never below config.modes)
    """Grid size for a period sweep."""
    if circumference <= config.circumference:
        return config.modes
    need = config.modes * circumference / config.circumference
    return 2 ** math.ceil(math.log2(need))

# %% ../../nbs/experiments/sweeps.ipynb #c6d51e3a
def run_member(
    task: Tuple[float, float, int],  # (epsilon, circumference, seed)
    config: ExperimentConfig  # Experiment settings
) -> RunRecord:  # Diagnostics record of one run
    """One evolution with its own random stream derived from (master seed, seed)."""
    epsilon, circumference, seed = task
    grid = PeriodicGrid(modes_for_period(config, circumference), circumference)
    diagnostics = diagnostics_settings(config)
    envelope = SpectralEnvelope(config.envelope_center, config.envelope_width)
    started = time.perf_counter()
    initial = make_initial_data(grid, epsilon, np.random.SeedSequence([config.master_seed, seed]), envelope,
                                diagnostics)
    _, record = simulate(initial, config.resolved_horizon(epsilon), config.resolved_dt(grid.modes, circumference),
                         integrator_settings(config), diagnostics, config.snapshots,
                         blowup_factor=config.blowup_factor, growth_threshold=config.growth_threshold)
    record.seed = [config.master_seed, seed]
    record.config = {"epsilon": epsilon, "circumference": circumference, "modes": grid.modes,
                     "horizon": config.resolved_horizon(epsilon)}
    record.wall_clock["run_seconds"] = time.perf_counter() - started
    logger.info("run done eps=%g R=%g seed=%d lifespan=%s halt=%s", epsilon, circumference, seed, record.lifespan,
                record.halt_reason)
    return record

def _run_all(
    tasks: Sequence[Tuple[float, float, int]],  # Run parameters
    config: ExperimentConfig  # Experiment settings
) -> List[RunRecord]:  # Records in task order
    member = partial(run_member, config=config)
    if config.jobs > 1 and len(tasks) > 1:
        return list(parallel(member, tasks, n_workers=config.jobs, progress=False))
    return [member(t) for t in tasks]

REGIMES = ("short", "middle", "euclidean")  # Ordered by growing period at fixed epsilon

def lifespan_regime(
    epsilon: float,  # Initial size
    circumference: float  # Period R
) -> Tuple[str, float]:  # (regime name, predicted lifespan up to a constant)
    """Lifespan regime of a periodic run: eps^-3, sqrt(R) eps^-2 or eps^-4."""
    if epsilon <= 0:
        return "euclidean", float('inf')
    if circumference <= epsilon**-2:
        return "short", epsilon**-3
    if circumference <= epsilon**-4:
        return "middle", math.sqrt(circumference) * epsilon**-2
    return "euclidean", epsilon**-4

# %% ../../nbs/experiments/sweeps.ipynb #0ad9f418
@dataclass
class ExperimentResult:
    """Output folder, records and fits of one invocation."""
    directory: Path
    records: List[Any] = field(default_factory=list)
    rows: List[Any] = field(default_factory=list)
    fit: Dict[str, Any] = field(default_factory=dict)

def _record_name(
    record: RunRecord  # Finished run
) -> str:
    cfg = record.config
    return f"eps{cfg['epsilon']:.6g}_R{cfg['circumference']:g}_seed{record.seed[1]}.csv"

def _write_runs(
    directory: Path,  # Invocation folder
    config: ExperimentConfig,  # Experiment settings
    records: List[RunRecord],  # Finished runs
    extra: Dict[str, Any]  # Fits and tables for the summary
) -> None:
    (directory / "config.echo").write_text(config_echo(config))
    for record in records:
        record.write_csv(directory / "runs" / _record_name(record))
    write_json(directory / "summary.json", {
        "schema_version": records[0].schema_version if records else RunRecord().schema_version,
        "experiment": config.experiment,
        "config": asdict(config),
        "runs": [dict(r.summary(), file=_record_name(r), **r.config) for r in records],
        **extra,
    })

def run_simulate(
    config: ExperimentConfig,  # Experiment settings
    out: Union[str, Path] = "out",  # Output root
    stamp: Optional[str] = None  # Timestamp folder (default: now)
) -> ExperimentResult:  # One record per seed
    """Simulate once per seed; write per-run CSVs and the JSON summary."""
    directory = run_directory(out, config.experiment, stamp)
    records = _run_all([(config.epsilon, config.circumference, s) for s in config.seeds], config)
    _write_runs(directory, config, records, {})
    return ExperimentResult(directory, records)

# %% ../../nbs/experiments/sweeps.ipynb #e37c0b59
@dataclass
class SweepRow:
    """Median lifespan proxy over seeds at one (epsilon, R)."""
    epsilon: float
    circumference: float
    regime: str
    predicted: float  # Regime lifespan up to its constant
    seeds: int
    t_num: float  # Median first time E_s >= threshold E_s(0), capped at the horizon
    t_blowup: float  # Median first time E_s >= blow-up factor E_s(0) over runs that crossed it (nan if none)
    censored_fraction: float  # Runs that never crossed the threshold
    horizon: float

def _sweep_rows(
    records: List[RunRecord],  # Finished runs
    keys: List[Tuple[float, float]]  # (epsilon, circumference) per record
) -> Tuple[List[SweepRow], Dict[Tuple[float, float], List[float]]]:
    groups: Dict[Tuple[float, float], List[RunRecord]] = {}
    for key, record in zip(keys, records):
        groups.setdefault(key, []).append(record)
    rows, samples = [], {}
    for (eps, r), group in groups.items():
        regime, predicted = lifespan_regime(eps, r)
        spans = [g.lifespan for g in group]
        blowups = [g.lifespan_blowup for g in group if g.lifespan_blowup is not None]
        samples[(eps, r)] = spans
        rows.append(SweepRow(eps, r, regime, predicted, len(group), float(np.median(spans)),
                             float(np.median(blowups)) if blowups else float('nan'),
                             sum(g.censored for g in group) / len(group), group[0].config["horizon"]))
    return rows, samples

def lifespan_fit(
    x: Sequence[float],  # Abscissae (epsilon or R)
    samples: Sequence[Sequence[float]],  # Lifespans over seeds per abscissa
    censored: bool,  # Any run capped at the horizon
    seed: int = 0,  # Bootstrap stream
    resamples: int = 1000  # Bootstrap resamples
) -> Dict[str, Any]:  # slope, bootstrap 95% interval and flags
    """Log-log slope of the median lifespan with a bootstrap interval over seeds."""
    medians = np.array([np.median(s) for s in samples], dtype=float)
    x = np.asarray(x, dtype=float)
    fit = {"slope": float('nan'), "ci": [float('nan'), float('nan')], "censored": bool(censored), "points": int(x.size)}
    ok = medians > 0
    if np.count_nonzero(ok) < 2:
        fit["censored"] = True
        return fit
    fit["slope"] = float(stats.linregress(np.log(x[ok]), np.log(medians[ok])).slope)
    rng = np.random.default_rng(seed)
    slopes = []
    for _ in range(resamples):
        boot = np.array([np.median(rng.choice(s, size=len(s), replace=True)) for s in samples])
        good = ok & (boot > 0)
        if np.count_nonzero(good) >= 2 and np.ptp(np.log(x[good])) > 0:
            slopes.append(stats.linregress(np.log(x[good]), np.log(boot[good])).slope)
    if slopes:
        fit["ci"] = [float(np.percentile(slopes, 2.5)), float(np.percentile(slopes, 97.5))]
    return fit

def _write_sweep(
    directory: Path,
    config: ExperimentConfig,
    records: List[RunRecord],
    rows: List[SweepRow],
    fit: Dict[str, Any]
) -> None:
    write_rows_csv(directory / "sweep.csv", rows)
    _write_runs(directory, config, records, {"fit": fit, "table": rows})

def run_sweep_epsilon(
    config: ExperimentConfig,  # Settings with epsilon_grid and at least 2 seeds
    out: Union[str, Path] = "out",  # Output root
    stamp: Optional[str] = None  # Timestamp folder (default: now)
) -> ExperimentResult:  # Table of median lifespans with the log-log fit
    """Lifespan proxy against epsilon at fixed R."""
    directory = run_directory(out, config.experiment, stamp)
    tasks = [(e, config.circumference, s) for e in config.epsilon_grid for s in config.seeds]
    records = _run_all(tasks, config)
    rows, samples = _sweep_rows(records, [(e, r) for e, r, _ in tasks])
    rows.sort(key=lambda row: row.epsilon)
    fit = lifespan_fit([row.epsilon for row in rows], [samples[(row.epsilon, row.circumference)] for row in rows],
                       any(r.censored for r in records), config.master_seed)
    fit["all_censored"] = all(r.censored for r in records)
    fit["passes"] = bool(fit["slope"] <= -2) if not math.isnan(fit["slope"]) else False
    # T_num(eps/2) / T_num(eps) for every halving pair in the grid
    by_eps = {row.epsilon: row.t_num for row in rows}
    fit["halving_ratios"] = {f"{e:g}": by_eps[e / 2] / by_eps[e] for e in by_eps
                             if e / 2 in by_eps and by_eps[e] > 0}
    logger.info("sweep-epsilon slope=%.4g ci=%s censored=%s", fit["slope"], fit["ci"], fit["censored"])
    _write_sweep(directory, config, records, rows, fit)
    return ExperimentResult(directory, records, rows, fit)

def run_sweep_period(
    config: ExperimentConfig,  # Settings with period_grid
    out: Union[str, Path] = "out",  # Output root
    stamp: Optional[str] = None  # Timestamp folder (default: now)
) -> ExperimentResult:  # Table of median lifespans against R
    """Lifespan proxy against the period at fixed epsilon."""
    directory = run_directory(out, config.experiment, stamp)
    tasks = [(config.epsilon, r, s) for r in config.period_grid for s in config.seeds]
    records = _run_all(tasks, config)
    rows, samples = _sweep_rows(records, [(e, r) for e, r, _ in tasks])
    rows.sort(key=lambda row: row.circumference)
    fit: Dict[str, Any] = {"slope": float('nan'), "ci": [float('nan'), float('nan')], "points": len(rows),
                           "predicted_middle_slope": 0.5}
    if len(rows) >= 2:
        middle = [row for row in rows if row.regime == "middle"]
        chosen = middle if len(middle) >= 2 else rows
        fit.update(lifespan_fit([row.circumference for row in chosen],
                                [samples[(row.epsilon, row.circumference)] for row in chosen],
                                any(r.censored for r in records), config.master_seed))
        fit["regime"] = "middle" if chosen is middle else "all"
        fit["monotone"] = all(b.t_num >= 0.9 * a.t_num for a, b in zip(rows, rows[1:]))
    logger.info("sweep-period rows=%d slope=%.4g", len(rows), fit["slope"])
    _write_sweep(directory, config, records, rows, fit)
    return ExperimentResult(directory, records, rows, fit)

# %% ../../nbs/experiments/sweeps.ipynb #5b8f0e67
def _report(
    k: int,
    config: ExperimentConfig
):
    return dispersion_report(k, config.strichartz_horizon, config.strichartz_period, config.oversample)

def run_strichartz(
    config: ExperimentConfig,  # Settings with strichartz_blocks, horizon and period
    out: Union[str, Path] = "out",  # Output root
    stamp: Optional[str] = None  # Timestamp folder (default: now)
) -> ExperimentResult:  # DispersionReport rows with the frequency-scaling fit
    """Strichartz norm, decay slope and wrap time for every configured block."""
    directory = run_directory(out, config.experiment, stamp)
    blocks = sorted(config.strichartz_blocks)
    member = partial(_report, config=config)
    if config.jobs > 1 and len(blocks) > 1:
        rows = list(parallel(member, blocks, n_workers=config.jobs, progress=False))
    else:
        rows = [member(k) for k in blocks]
    fit: Dict[str, Any] = {"exponent": float('nan'), "predicted_exponent": 0.375}
    if len(rows) >= 2:
        fit["exponent"] = float(stats.linregress([r.k * math.log(2) for r in rows],
                                                 [math.log(r.strichartz_norm) for r in rows]).slope)
    (directory / "config.echo").write_text(config_echo(config))
    write_rows_csv(directory / "strichartz.csv", rows)
    write_json(directory / "summary.json", {"schema_version": RunRecord().schema_version, "experiment": config.experiment,
                                            "config": asdict(config), "fit": fit, "table": rows})
    logger.info("strichartz blocks=%s exponent=%.4g", blocks, fit["exponent"])
    return ExperimentResult(directory, rows=rows, fit=fit)
