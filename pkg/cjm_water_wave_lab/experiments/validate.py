"""Validation suite: named numerical checks with measured values, tolerances and pass/fail flags."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/experiments/validate.ipynb.

# %% auto #0
__all__ = ['CheckResult', 'ValidationReport', 'CHECKS', 'register_check', 'run_check', 'run_validate']

# %% ../../nbs/experiments/validate.ipynb #a6d20f3b
import logging
import math
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

import numpy as np
from scipy import stats

from ..core.config import CHECK_NAMES, ExperimentConfig, config_echo
from ..core.errors import WaterWaveLabError
from ..core.records import SCHEMA_VERSION, run_directory, write_json, write_rows_csv
from ..diagnostics.drift import quartic_drift_check
from ..diagnostics.functionals import complex_variable
from ..dtn.bench import BenchSettings, RatioStats, inequality_bench
from ..dtn.oracle import dtn_elliptic_oracle
from ..dtn.series import dtn_series, steepness
from ..dtn.state import WaveState
from ..evolution.initial import SpectralEnvelope, make_initial_data, random_phase_field, random_state
from ..evolution.simulate import simulate
from ..normal_form.ibp import boundary_term_bounds, ibp_convergence, reconstruct_quadratic
from ..normal_form.split import cross_formulation_residual, relative_l2, split_nonlinearity
from ..spectral.grid import Field, PeriodicGrid
from ..spectral.littlewood_paley import LPDecomposition, sobolev_norm, sup_norm
from ..spectral.paraproduct import paraproduct
from ..strichartz.lab import measure_decay, measure_periodic_loss, measure_strichartz, wrap_time
from .sweeps import diagnostics_settings, integrator_settings

# %% ../../nbs/experiments/validate.ipynb #3e8b51c0
logger = logging.getLogger(__name__)

@dataclass
class CheckResult:
    """Outcome of one validation check."""
    name: str
    passed: bool
    inconclusive: bool = False  # Measurement could not decide; counts as passing
    measured: float = float('nan')  # Headline measured value
    tolerance: str = ""  # Acceptance rule for the measured value
    seconds: float = 0.0
    detail: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(
        self
    ) -> bool:  # Passed or flagged inconclusive
        return self.passed or self.inconclusive

@dataclass
class ValidationReport:
    """All check results of one validate invocation."""
    results: List[CheckResult] = field(default_factory=list)
    directory: Optional[Path] = None

    @property
    def failing(
        self
    ) -> List[str]:  # Names of hard failures
        return [r.name for r in self.results if not r.ok]

    @property
    def exit_code(
        self
    ) -> int:  # 0 when every check passed or was inconclusive, else 1
        return 1 if self.failing else 0

# %% ../../nbs/experiments/validate.ipynb #c07f9e12
CHECKS: Dict[str, Callable[[ExperimentConfig], CheckResult]] = {}

def register_check(
    name: str  # One of CHECK_NAMES
):
    """Decorator adding a check function to the registry."""
    if name not in CHECK_NAMES:
        raise ValueError(f"unknown check name: {name}")
    def _register(fn):
        CHECKS[name] = fn
        return fn
    return _register

def _grid(
    config: ExperimentConfig
) -> PeriodicGrid:
    return PeriodicGrid(config.modes, config.circumference)

def _envelope(
    config: ExperimentConfig
) -> SpectralEnvelope:
    return SpectralEnvelope(config.envelope_center, config.envelope_width)

def _rng(
    config: ExperimentConfig,
    stream: int  # Per-check stream index
) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([config.master_seed, stream]))

def _small_states(
    config: ExperimentConfig,
    count: int,  # Number of states
    slope: float = 0.01,  # Target max |h'|
    stream: int = 0
) -> List[WaveState]:
    """Random states scaled to a fixed steepness."""
    grid, envelope, rng = _grid(config), _envelope(config), _rng(config, stream)
    envelope.check(grid)
    states = []
    for _ in range(count):
        state = random_state(grid, envelope, rng)
        states.append(state.scaled(slope / steepness(state)))
    return states

def _loglog_slope(
    x: Sequence[float],
    y: Sequence[float]
) -> float:
    return float(stats.linregress(np.log(x), np.log(y)).slope)

# %% ../../nbs/experiments/validate.ipynb #1b94e6d7
@register_check("transform_roundtrip")
def check_transform_roundtrip(config: ExperimentConfig) -> CheckResult:
    grid = _grid(config)
    values = _rng(config, 1).standard_normal(grid.modes)
    err = float(np.max(np.abs(Field.from_values(grid, values).values - values)) / np.max(np.abs(values)))
    return CheckResult("transform_roundtrip", err <= 1e-12, measured=err, tolerance="<= 1e-12")

@register_check("lp_partition")
def check_lp_partition(config: ExperimentConfig) -> CheckResult:
    grid = _grid(config)
    lp = LPDecomposition.for_grid(grid, config.k_low)
    xi = grid.wavenumbers
    total = lp.low_symbol(xi) + sum(lp.block_symbol(k, xi) for k in lp.blocks)
    err = float(np.max(np.abs(total - 1)))
    return CheckResult("lp_partition", err <= 1e-14, measured=err, tolerance="<= 1e-14",
                       detail={"k_low": lp.k_low, "k_max": lp.k_max})

@register_check("parseval")
def check_parseval(config: ExperimentConfig) -> CheckResult:
    grid = _grid(config)
    values = _rng(config, 2).standard_normal(grid.modes)
    direct = grid.dx * float(np.sum(values**2))
    err = abs(sobolev_norm(Field.from_values(grid, values), 0)**2 - direct) / direct
    return CheckResult("parseval", err <= 1e-12, measured=err, tolerance="<= 1e-12")

@register_check("paraproduct_bound")
def check_paraproduct_bound(config: ExperimentConfig) -> CheckResult:
    grid, rng = _grid(config), _rng(config, 3)
    # f on the first mode only, g spread over the upper part of the grid
    k0 = 2 * math.pi / grid.circumference
    low = SpectralEnvelope(k0, 0.5 * k0)
    high = SpectralEnvelope(0.7 * grid.xi_max, 0.5 * grid.xi_max)
    cutoff = diagnostics_settings(config).cutoff
    ratios = []
    for _ in range(config.ensemble_size):
        f = random_phase_field(grid, low, rng)
        g = random_phase_field(grid, high, rng)
        ratios.append(sobolev_norm(paraproduct(f, g, cutoff), config.s) / (sup_norm(f) * sobolev_norm(g, config.s)))
    ratio = RatioStats("paraproduct", ratios)
    return CheckResult("paraproduct_bound", ratio.finite, inconclusive=ratio.finite and not ratio.stable,
                       measured=ratio.max, tolerance="finite; max <= 3 median", detail=ratio.summary())

@register_check("split_identity")
def check_split_identity(config: ExperimentConfig) -> CheckResult:
    settings = integrator_settings(config)
    worst = max(split_nonlinearity(s, settings).identity_residual for s in _small_states(config, 50, stream=4))
    return CheckResult("split_identity", worst <= 1e-12, measured=worst, tolerance="<= 1e-12 on 50 states")

@register_check("cross_formulation")
def check_cross_formulation(config: ExperimentConfig) -> CheckResult:
    settings = integrator_settings(config)
    worst = max(cross_formulation_residual(s, settings) for s in _small_states(config, 50, stream=5))
    return CheckResult("cross_formulation", worst <= 1e-10, measured=worst, tolerance="<= 1e-10 on 50 states")

# %% ../../nbs/experiments/validate.ipynb #58fe0a21
@register_check("dtn_oracle")
def check_dtn_oracle(config: ExperimentConfig) -> CheckResult:
    """Series of order 3 against the elliptic oracle at |h|_{C^1} = 0.01 and two smaller scalings."""
    grid = PeriodicGrid(32, 2 * math.pi)
    x = grid.points
    h0 = np.cos(x) + 0.5 * np.sin(2 * x)
    psi = np.sin(x) + 0.3 * np.cos(3 * x)
    base = WaveState.from_values(grid, h0, psi)
    c1 = float(np.max(np.abs(h0))) + steepness(base)
    errors = []
    for scale in (1.0, 0.5, 0.25):
        amp = 0.01 * scale / c1
        state = WaveState.from_values(grid, amp * h0, psi)
        depth = 3 * float(np.max(np.abs(state.h.values))) + grid.circumference / 4
        series = dtn_series(state, 3, config.steepness_limit).g_psi
        errors.append(relative_l2(series, dtn_elliptic_oracle(state, depth)))
    exponent = _loglog_slope([1.0, 0.5, 0.25], errors)
    return CheckResult("dtn_oracle", errors[0] <= 1e-4 and exponent >= 3.8, measured=errors[0],
                       tolerance="error <= 1e-4 and exponent >= 3.8",
                       detail={"errors": errors, "exponent": exponent})

@register_check("amplitude_scaling")
def check_amplitude_scaling(config: ExperimentConfig) -> CheckResult:
    settings = integrator_settings(config)
    base = _small_states(config, 1, slope=0.02, stream=6)[0]
    scales = [1.0, 0.5, 0.25]
    splits = [split_nonlinearity(base.scaled(a), settings) for a in scales]
    p2 = _loglog_slope(scales, [sobolev_norm(sp.n2, 0) for sp in splits])
    p3 = _loglog_slope(scales, [sobolev_norm(sp.n3, 0) for sp in splits])
    return CheckResult("amplitude_scaling", abs(p2 - 2) <= 0.1 and abs(p3 - 3) <= 0.1, measured=p3,
                       tolerance="N2 exponent 2 +- 0.1, N3 exponent 3 +- 0.1", detail={"n2": p2, "n3": p3})

@register_check("normal_form_reconstruction")
def check_normal_form_reconstruction(config: ExperimentConfig) -> CheckResult:
    settings = integrator_settings(config)
    worst = 0.0
    for state in _small_states(config, 5, stream=7):
        direct = split_nonlinearity(state, settings).n2
        worst = max(worst, relative_l2(reconstruct_quadratic(complex_variable(state)), direct))
    return CheckResult("normal_form_reconstruction", worst <= 1e-10, measured=worst, tolerance="<= 1e-10")

@register_check("ibp_convergence")
def check_ibp_convergence(config: ExperimentConfig) -> CheckResult:
    grid = _grid(config)
    diagnostics = diagnostics_settings(config)
    initial = make_initial_data(grid, 0.05, np.random.SeedSequence([config.master_seed, 8]), _envelope(config),
                                diagnostics)
    # 128 steps with a snapshot every 4th keeps the cadence uniform for strides 1, 2, 4
    trajectory, record = simulate(initial, 2.0, 2.0 / 128, integrator_settings(config), diagnostics, snapshots=32)
    if record.halt_reason is not None:
        return CheckResult("ibp_convergence", False, detail={"halt_reason": record.halt_reason})
    conv = ibp_convergence(trajectory, (1, 2, 4), integrator_settings(config))
    return CheckResult("ibp_convergence", conv.passes(2.0), inconclusive=conv.inconclusive, measured=conv.order,
                       tolerance="order >= 2", detail=asdict(conv))

# %% ../../nbs/experiments/validate.ipynb #9d4c7a38
@register_check("energy_conservation")
def check_energy_conservation(config: ExperimentConfig) -> CheckResult:
    grid = _grid(config)
    diagnostics = diagnostics_settings(config)
    initial = make_initial_data(grid, config.epsilon, np.random.SeedSequence([config.master_seed, 9]),
                                _envelope(config), diagnostics)
    horizon = min(100.0, config.resolved_horizon())
    _, record = simulate(initial, horizon, config.resolved_dt(), integrator_settings(config), diagnostics,
                         config.snapshots, blowup_factor=config.blowup_factor)
    energies = np.array([r.energy for r in record.rows])
    masses = np.array([r.mass for r in record.rows])
    drift = float(np.max(np.abs(energies - energies[0])) / energies[0]) if energies[0] > 0 else 0.0
    mass_drift = float(np.max(np.abs(masses - masses[0])))
    passed = record.halt_reason is None and drift <= 1e-6 and mass_drift <= 1e-12
    return CheckResult("energy_conservation", passed, measured=drift, tolerance="energy <= 1e-6, mass <= 1e-12",
                       detail={"horizon": horizon, "mass_drift": mass_drift, "halt_reason": record.halt_reason})

@register_check("time_reversal")
def check_time_reversal(config: ExperimentConfig) -> CheckResult:
    grid = _grid(config)
    diagnostics = diagnostics_settings(config)
    settings = integrator_settings(config)
    initial = make_initial_data(grid, config.epsilon, np.random.SeedSequence([config.master_seed, 10]),
                                _envelope(config), diagnostics)
    horizon, dt = 10.0, config.resolved_dt()
    forward, _ = simulate(initial, horizon, dt, settings, diagnostics, snapshots=1)
    back, _ = simulate(forward.final.reversed(), horizon, dt, settings, diagnostics, snapshots=1)
    end = back.final.reversed()
    err = max(relative_l2(end.h, initial.h), relative_l2(end.psi, initial.psi))
    return CheckResult("time_reversal", err <= 1e-7, measured=err, tolerance="<= 1e-7", detail={"horizon": horizon})

# %% ../../nbs/experiments/validate.ipynb #70c3b9e5
@register_check("dispersive_decay")
def check_dispersive_decay(config: ExperimentConfig) -> CheckResult:
    fit = measure_decay(0, 2000.0, oversample=config.oversample)
    shifted = measure_decay(0, 2000.0, center=500.0, oversample=config.oversample)
    passed = abs(fit.slope + 0.5) <= 0.05 and abs(shifted.slope - fit.slope) <= 1e-6
    return CheckResult("dispersive_decay", passed, measured=fit.slope, tolerance="-0.5 +- 0.05, translation invariant",
                       detail={"stderr": fit.stderr, "shifted_slope": shifted.slope})

@register_check("strichartz_frequency")
def check_strichartz_frequency(config: ExperimentConfig) -> CheckResult:
    blocks = sorted(config.strichartz_blocks)
    if len(blocks) < 2:
        return CheckResult("strichartz_frequency", False, inconclusive=True, tolerance="needs 2 blocks")
    runs = [measure_strichartz(k, config.strichartz_horizon, config.strichartz_period, oversample=config.oversample)
            for k in blocks]
    exponent = _loglog_slope([2.0**k for k in blocks], [r.value for r in runs])
    return CheckResult("strichartz_frequency", abs(exponent - 0.375) <= 0.05,
                       inconclusive=any(r.inconclusive for r in runs), measured=exponent, tolerance="0.375 +- 0.05",
                       detail={"blocks": blocks, "values": [r.value for r in runs]})

@register_check("periodic_loss")
def check_periodic_loss(config: ExperimentConfig) -> CheckResult:
    fit = measure_periodic_loss(config.loss_block, config.loss_period, oversample=config.oversample)
    return CheckResult("periodic_loss", abs(fit.exponent - 0.25) <= 0.05, inconclusive=fit.inconclusive,
                       measured=fit.exponent, tolerance="0.25 +- 0.05", detail=asdict(fit))

@register_check("wrap_time")
def check_wrap_time(config: ExperimentConfig) -> CheckResult:
    one = wrap_time(config.loss_block, config.loss_period)
    two = wrap_time(config.loss_block, 2 * config.loss_period)
    ratio = two.measured / one.measured if one.measured > 0 else float('nan')
    passed = one.relative_error <= 0.3 and two.relative_error <= 0.3 and abs(ratio - 2) <= 0.2
    return CheckResult("wrap_time", bool(passed), inconclusive=one.inconclusive or two.inconclusive,
                       measured=one.relative_error, tolerance="within 30% of 2^(k/2) R; doubling R within 10%",
                       detail={"single": asdict(one), "double": asdict(two), "ratio": ratio})

# %% ../../nbs/experiments/validate.ipynb #e4a1f865
@register_check("quartic_drift")
def check_quartic_drift(config: ExperimentConfig) -> CheckResult:
    fit = quartic_drift_check(_grid(config), (0.02, 0.04, 0.08), config.seeds, horizon=min(10.0, config.resolved_horizon()),
                              dt=config.resolved_dt(), nonlinear=config.nonlinear, envelope=_envelope(config),
                              diagnostics=diagnostics_settings(config), jobs=config.jobs)
    return CheckResult("quartic_drift", fit.passes(1.5) and (fit.monotone or fit.inconclusive),
                       inconclusive=fit.inconclusive, measured=fit.exponent, tolerance="exponent >= 1.5, monotone",
                       detail=asdict(fit))

@register_check("inequality_bench")
def check_inequality_bench(config: ExperimentConfig) -> CheckResult:
    grid, envelope = _grid(config), _envelope(config)
    settings = BenchSettings(s=config.s, gamma=config.gamma, order=config.dtn_order,
                             steepness_limit=config.steepness_limit, k_low=config.k_low,
                             cutoff=diagnostics_settings(config).cutoff)
    ratios = inequality_bench(grid, config.epsilon, config.ensemble_size, config.master_seed, envelope, settings,
                              config.jobs)
    ratios.update(boundary_term_bounds(grid, config.epsilon, config.ensemble_size, config.master_seed, envelope,
                                       config.s, config.gamma, config.rho, config.k_low, config.jobs))
    finite = all(r.finite for r in ratios.values())
    unstable = [name for name, r in ratios.items() if not r.stable]
    return CheckResult("inequality_bench", finite, inconclusive=finite and bool(unstable),
                       measured=max(r.max for r in ratios.values()), tolerance="finite; max <= 3 median",
                       detail={"ratios": {k: r.summary() for k, r in ratios.items()}, "unstable": unstable})

# %% ../../nbs/experiments/validate.ipynb #31f7d8ab
def run_check(
    name: str,  # Registered check
    config: ExperimentConfig  # Experiment settings
) -> CheckResult:  # Result; lab errors become failures carrying the message
    """Run one check and time it."""
    started = time.perf_counter()
    try:
        result = CHECKS[name](config)
    except WaterWaveLabError as err:
        logger.warning("check error name=%s error=%s", name, err)
        result = CheckResult(name, False, detail={"error": f"{type(err).__name__}: {err}"})
    result.seconds = time.perf_counter() - started
    logger.info("check done name=%s passed=%s inconclusive=%s measured=%.6g seconds=%.1f", name, result.passed,
                result.inconclusive, result.measured, result.seconds)
    return result

def run_validate(
    config: ExperimentConfig,  # Settings; config.checks selects checks (None = all)
    out: Union[str, Path, None] = "out",  # Output root; None skips writing
    stamp: Optional[str] = None  # Timestamp folder (default: now)
) -> ValidationReport:  # Results with the exit code
    """Run the selected checks in registry order and write the report."""
    names = CHECK_NAMES if config.checks is None else [n for n in CHECK_NAMES if n in config.checks]
    report = ValidationReport([run_check(name, config) for name in names])
    if out is not None:
        report.directory = run_directory(out, config.experiment, stamp)
        (report.directory / "config.echo").write_text(config_echo(config))
        if report.results:
            write_rows_csv(report.directory / "checks.csv", report.results,
                           ["name", "passed", "inconclusive", "measured", "tolerance"])
        write_json(report.directory / "summary.json", {
            "schema_version": SCHEMA_VERSION, "experiment": config.experiment, "config": asdict(config),
            "checks": report.results, "failing": report.failing, "exit_code": report.exit_code})
    if report.failing:
        logger.warning("validation failed checks=%s", ",".join(report.failing))
    return report
