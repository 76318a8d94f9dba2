import math
from dataclasses import asdict

import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail

from cjm_water_wave_lab.core.config import ExperimentConfig, smoke_config
from cjm_water_wave_lab.diagnostics.drift import DriftFit, drift_rate, quartic_drift_check
from cjm_water_wave_lab.diagnostics.functionals import (DiagnosticsSettings, DiagnosticsTracker, complex_variable,
                                                        energy, good_unknown, quadratic_sobolev_energy,
                                                        sobolev_energy, state_from_complex)
from cjm_water_wave_lab.diagnostics.spacetime import holder_l2_bound, spacetime_accumulate
from cjm_water_wave_lab.dtn.state import WaveState
from cjm_water_wave_lab.evolution.initial import SpectralEnvelope
from cjm_water_wave_lab.experiments.sweeps import diagnostics_settings
from cjm_water_wave_lab.spectral.grid import PeriodicGrid
from cjm_water_wave_lab.spectral.littlewood_paley import sobolev_norm
from cjm_water_wave_lab.spectral.multipliers import half_grad

GRID = PeriodicGrid(32)
X = GRID.points
LOW = DiagnosticsSettings(s=2.0, rho=1.5)

def _state(eps=0.01):
    return WaveState.from_values(GRID, eps * np.cos(2 * X), np.sin(X) + 0.2 * np.cos(3 * X))

# Functionals

def test_complex_variable_roundtrip():
    state = _state()
    back = state_from_complex(complex_variable(state), 1.5)
    test_close(back.h.values, state.h.values, eps=1e-14)
    test_close(back.psi.values, state.psi.values, eps=1e-13)
    test_eq(back.t, 1.5)
    test_close(complex_variable(state).imag.values, half_grad(state.psi).values, eps=1e-14)

def test_flat_surface_functionals():
    state = WaveState.from_values(GRID, np.zeros(32), np.sin(3 * X))
    test_close(energy(state), 1.5 * math.pi, eps=1e-12)
    test_close(good_unknown(state).values, state.psi.values, eps=1e-14)
    test_close(quadratic_sobolev_energy(state, 0, nonlinear=False), 3 * math.pi, eps=1e-12)
    test_close(sobolev_energy(state, 0), math.sqrt(3 * math.pi), eps=1e-12)

def test_quadratic_energy_linear_part():
    state = _state(0.02)
    linear = sobolev_norm(state.h, 2.0)**2 + sobolev_norm(half_grad(state.psi), 2.0)**2
    test_close(quadratic_sobolev_energy(state, 2.0, nonlinear=False), linear, eps=1e-10)
    # The good unknown differs from psi at second order in the amplitude
    gap = abs(quadratic_sobolev_energy(state, 2.0) - linear)
    assert gap < 0.1 * linear

def test_energy_is_even_in_psi():
    state = _state(0.02)
    test_close(energy(state), energy(state.reversed()), eps=1e-13)

# Tracker

def test_tracker_accumulates():
    tracker = DiagnosticsTracker(LOW)
    state = _state()
    first = tracker(state)
    second = tracker(state.at(1.0))
    test_eq(first.g_partial, 0.0)
    test_close(second.g_partial, second.u_besov, eps=1e-12)
    test_eq(second.f_sup, max(first.u_sobolev, second.u_sobolev))
    test_close(second.mass, 0.0, eps=1e-15)
    test_close(second.steepness, 0.02, eps=1e-3)
    test_eq(len(tracker.records), 2)

def test_functionals_are_translation_invariant():
    state = WaveState.from_values(GRID, 0.01 * (np.cos(2 * X) + 0.5 * np.sin(5 * X)), np.sin(X) + 0.2 * np.cos(3 * X))
    moved = WaveState(state.h.roll(5), state.psi.roll(5))
    for name, value in asdict(DiagnosticsTracker(LOW)(state)).items():
        shifted = asdict(DiagnosticsTracker(LOW)(moved))[name]
        test_close(shifted, value, eps=1e-10 * max(1.0, abs(value)))
    for f in (energy, quadratic_sobolev_energy):
        test_close(f(moved, settings=LOW), f(state, settings=LOW), eps=1e-10 * f(state, settings=LOW))

# Spacetime norms

def test_spacetime_accumulate():
    test_close(spacetime_accumulate([2.0] * 11, 0.1), 2.0, eps=1e-12)
    test_close(spacetime_accumulate([0.0, 1.0], 1.0), 0.5**0.25, eps=1e-12)
    test_fail(lambda: spacetime_accumulate([1.0], 0.1), contains="at least 2")
    test_fail(lambda: spacetime_accumulate([1.0, 2.0], 0.0), contains="positive")

def test_holder_bound():
    lhs, rhs = holder_l2_bound([3.0] * 5, 0.25)
    test_close(lhs, rhs, eps=1e-12)
    trace = np.abs(np.sin(np.linspace(0, 3, 31)))
    lhs, rhs = holder_l2_bound(trace, 0.1)
    assert lhs <= rhs

# Drift

def test_drift_rate():
    times = np.linspace(0, 2, 9)
    test_close(drift_rate(times, 3.0 * (1 + 0.1 * times)), 0.1, eps=1e-12)
    test_close(drift_rate(times, 3.0 * (1 - 0.1 * times)), 0.1, eps=1e-12)
    test_eq(drift_rate(times, np.zeros(9)), 0.0)
    test_eq(drift_rate([0.0], [1.0]), 0.0)

def test_drift_fit_passes():
    test_eq(DriftFit([0.1, 0.2], [1.0, 2.0], exponent=1.0).passes(), False)
    test_eq(DriftFit([0.1, 0.2], [1.0, 2.0], exponent=2.1).passes(), True)
    test_eq(DriftFit([0.1, 0.2], [0.0, 0.0], inconclusive=True).passes(), True)

def test_free_flow_drift_is_round_off():
    grid = PeriodicGrid(64, 40.0)
    fit = quartic_drift_check(grid, (0.01, 0.02), horizon=1.0, dt=0.25, nonlinear=False,
                              envelope=SpectralEnvelope(1.0, 1.0), diagnostics=LOW, snapshots=4, floor=1e-10)
    test_eq(fit.inconclusive, True)
    test_fail(lambda: quartic_drift_check(grid, (0.01,)), contains="at least 2")

@pytest.mark.slow
def test_quartic_drift_exponent():
    # Same settings as the smoke validation: s = 18 over a horizon of 10
    config = smoke_config(ExperimentConfig())
    fit = quartic_drift_check(PeriodicGrid(config.modes, config.circumference), (0.02, 0.04, 0.08), config.seeds,
                              horizon=10.0, dt=config.resolved_dt(), envelope=SpectralEnvelope(1.0, 1.0),
                              diagnostics=diagnostics_settings(config))
    assert fit.passes(1.5) and fit.monotone, fit
    test_eq(fit.halted, [])
