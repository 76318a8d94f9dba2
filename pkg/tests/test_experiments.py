import json
import math
from pathlib import Path

import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail

from cjm_water_wave_lab.core.config import CHECK_NAMES, ExperimentConfig, config_from_mapping, load_config
from cjm_water_wave_lab.diagnostics.functionals import DiagnosticsRecord
from cjm_water_wave_lab.experiments.cli import EXIT_CONFIG_ERROR, EXIT_OK, run_command
from cjm_water_wave_lab.experiments.sweeps import (REGIMES, diagnostics_settings, lifespan_fit, lifespan_regime,
                                                   modes_for_period, run_member, run_simulate, run_strichartz,
                                                   run_sweep_epsilon)
from cjm_water_wave_lab.experiments.validate import (CHECKS, CheckResult, ValidationReport, register_check, run_check,
                                                     run_validate)

FILES = Path(__file__).parent.parent / "test_files"
SMALL = {"modes": 64, "circumference": 40.0, "envelope_center": 1.0, "envelope_width": 1.0, "snapshots": 2}

def _config(**values):
    return config_from_mapping({**SMALL, **values})

# Regimes and grids

def test_lifespan_regime():
    name, predicted = lifespan_regime(0.1, 50.0)
    test_eq(name, "short")
    test_close(predicted, 1000.0, eps=1e-9)
    name, predicted = lifespan_regime(0.1, 400.0)
    test_eq(name, "middle")
    test_close(predicted, 20.0 * 100.0, eps=1e-9)
    test_eq(lifespan_regime(0.1, 1e5)[0], "euclidean")
    test_eq(lifespan_regime(0.0, 40.0), ("euclidean", float('inf')))
    test_eq(REGIMES, ("short", "middle", "euclidean"))

def test_modes_for_period():
    cfg = ExperimentConfig()
    test_eq(modes_for_period(cfg, 100.0), cfg.modes)
    test_eq(modes_for_period(cfg, 400.0), 2 * cfg.modes)
    test_eq(modes_for_period(cfg, 300.0), 2 * cfg.modes)
    test_eq(modes_for_period(cfg, 1000.0), 8 * cfg.modes)

def test_diagnostics_settings_follow_config():
    cfg = _config(s=20.0, rho=4.0, cutoff_inner=0.05)
    settings = diagnostics_settings(cfg)
    test_eq((settings.s, settings.rho, settings.cutoff.inner), (20.0, 4.0, 0.05))

# Lifespan fits

def test_lifespan_fit_recovers_slope():
    eps = [0.02, 0.04, 0.08]
    samples = [[3 * e**-2, 3 * e**-2] for e in eps]
    fit = lifespan_fit(eps, samples, censored=False)
    test_close(fit["slope"], -2.0, eps=1e-12)
    test_close(np.array(fit["ci"]), np.array([-2.0, -2.0]), eps=1e-12)
    test_eq((fit["censored"], fit["points"]), (False, 3))

def test_lifespan_fit_needs_two_points():
    fit = lifespan_fit([0.02, 0.04], [[0.0], [5.0]], censored=False)
    assert math.isnan(fit["slope"])
    test_eq(fit["censored"], True)

def test_lifespan_fit_bootstrap_is_seeded():
    rng = np.random.default_rng(0)
    samples = [list(100 * e**-2 * rng.uniform(0.8, 1.2, 4)) for e in (0.02, 0.04, 0.08)]
    first = lifespan_fit([0.02, 0.04, 0.08], samples, False, seed=3)
    test_eq(lifespan_fit([0.02, 0.04, 0.08], samples, False, seed=3), first)
    assert first["ci"][0] <= first["slope"] <= first["ci"][1]

# Runs and outputs

def test_run_member_provenance():
    cfg = _config(epsilon=0.01, horizon=0.5, master_seed=9)
    record = run_member((0.01, 40.0, 3), cfg)
    test_eq(record.seed, [9, 3])
    test_eq(record.config, {"epsilon": 0.01, "circumference": 40.0, "modes": 64, "horizon": 0.5})
    test_eq(record.censored, True)
    assert "run_seconds" in record.wall_clock

def test_run_simulate_outputs(tmp_path):
    cfg = _config(epsilon=0.01, horizon=0.5, seeds=[0, 1])
    result = run_simulate(cfg, tmp_path, stamp="a")
    test_eq(result.directory, tmp_path / "simulate" / "a")
    runs = sorted(p.name for p in (result.directory / "runs").iterdir())
    test_eq(runs, ["eps0.01_R40_seed0.csv", "eps0.01_R40_seed1.csv"])
    header = (result.directory / "runs" / runs[0]).read_bytes().split(b"\r\n")[0].decode()
    test_eq(header.split(","), list(DiagnosticsRecord.__dataclass_fields__))
    summary = json.loads((result.directory / "summary.json").read_text())
    test_eq((summary["experiment"], summary["schema_version"], len(summary["runs"])), ("simulate", "1.0", 2))
    test_eq(load_config(result.directory / "config.echo"), cfg)

def test_run_simulate_is_reproducible(tmp_path):
    cfg = _config(epsilon=0.01, horizon=0.5, seeds=[2])
    first, second = run_simulate(cfg, tmp_path, "a"), run_simulate(cfg, tmp_path, "b")
    name = "runs/eps0.01_R40_seed2.csv"
    test_eq((first.directory / name).read_bytes(), (second.directory / name).read_bytes())

def test_sweep_epsilon_with_censored_runs(tmp_path):
    cfg = _config(experiment="sweep-epsilon", epsilon_grid=[0.01, 0.02, 0.04], seeds=[0, 1], horizon=0.2)
    result = run_sweep_epsilon(cfg, tmp_path, "s")
    test_eq([row.epsilon for row in result.rows], [0.01, 0.02, 0.04])
    test_eq([row.censored_fraction for row in result.rows], [1.0, 1.0, 1.0])
    test_eq((result.fit["censored"], result.fit["all_censored"]), (True, True))
    test_eq(set(result.fit["halving_ratios"]), {"0.02", "0.04"})
    assert (result.directory / "sweep.csv").exists()

def test_strichartz_experiment(tmp_path):
    cfg = _config(experiment="strichartz", strichartz_blocks=[0, 1], strichartz_horizon=2.0, strichartz_period=40.0)
    result = run_strichartz(cfg, tmp_path, "k")
    test_eq([row.k for row in result.rows], [0, 1])
    assert not math.isnan(result.fit["exponent"])
    test_eq(result.fit["predicted_exponent"], 0.375)
    assert (result.directory / "strichartz.csv").exists()

# Validation suite

def test_check_registry():
    test_eq(sorted(CHECKS), sorted(CHECK_NAMES))
    test_fail(lambda: register_check("no_such_check"), contains="unknown check")

def test_report_exit_code():
    report = ValidationReport([CheckResult("a", True), CheckResult("b", False, inconclusive=True)])
    test_eq((report.failing, report.exit_code), ([], 0))
    report.results.append(CheckResult("c", False))
    test_eq((report.failing, report.exit_code), (["c"], 1))

def test_cheap_checks_pass(tmp_path):
    cfg = _config(experiment="validate", checks=["transform_roundtrip", "lp_partition", "parseval",
                                                 "paraproduct_bound", "split_identity", "cross_formulation",
                                                 "normal_form_reconstruction"])
    report = run_validate(cfg, tmp_path, "v")
    test_eq([r.name for r in report.results], cfg.checks)
    test_eq(report.failing, [])
    rows = (report.directory / "checks.csv").read_text().splitlines()
    test_eq(rows[0], "name,passed,inconclusive,measured,tolerance")
    test_eq(json.loads((report.directory / "summary.json").read_text())["exit_code"], 0)

def test_empty_check_selection(tmp_path):
    report = run_validate(_config(experiment="validate", checks=[]), tmp_path, "e")
    test_eq((report.results, report.exit_code), ([], 0))
    assert not (report.directory / "checks.csv").exists()

def test_run_check_records_lab_errors():
    # An envelope that misses the grid fails the envelope check with ConfigError
    cfg = _config(experiment="validate", envelope_center=0.2, envelope_width=0.1)
    result = run_check("split_identity", cfg)
    test_eq(result.passed, False)
    assert "ConfigError" in result.detail["error"]

@pytest.mark.slow
def test_full_validation_smoke(tmp_path):
    test_eq(run_command("validate", out=tmp_path, smoke=True, stamp="full"), EXIT_OK)

# Command line

def test_cli_imports_with_pinned_fastcore():
    import fastcore
    from cjm_water_wave_lab.experiments import cli
    assert int(fastcore.__version__.split(".")[0]) < 2
    assert callable(cli.main)

def test_run_command_exit_codes(tmp_path):
    test_eq(run_command("simulate", FILES / "bad_gamma.cfg", out=tmp_path), EXIT_CONFIG_ERROR)
    test_eq(run_command("simulate", FILES / "missing.cfg", out=tmp_path), EXIT_CONFIG_ERROR)
    test_eq(run_command("validate", FILES / "validate_fast.cfg", out=tmp_path, stamp="v"), EXIT_OK)
    assert (tmp_path / "validate" / "v" / "checks.csv").exists()

def test_run_command_simulate(tmp_path):
    test_eq(run_command("simulate", FILES / "simulate_smoke.cfg", out=tmp_path, seed=4, stamp="s"), EXIT_OK)
    summary = json.loads((tmp_path / "simulate" / "s" / "summary.json").read_text())
    test_eq(summary["config"]["master_seed"], 4)
    test_eq([run["seed"] for run in summary["runs"]], [[4, 0], [4, 1]])
