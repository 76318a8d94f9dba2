import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail

from cjm_water_wave_lab.core.errors import BlowUpSignal, ConfigError, SteepnessError
from cjm_water_wave_lab.diagnostics.functionals import (DiagnosticsRecord, DiagnosticsSettings, complex_variable,
                                                        energy, sobolev_energy)
from cjm_water_wave_lab.dtn.state import WaveState
from cjm_water_wave_lab.evolution.initial import SpectralEnvelope, make_initial_data, random_phase_field
from cjm_water_wave_lab.evolution.integrator import IntegratorSettings, default_dt, rhs, step
from cjm_water_wave_lab.evolution.simulate import simulate
from cjm_water_wave_lab.spectral.grid import PeriodicGrid
from cjm_water_wave_lab.spectral.multipliers import abs_grad, free_propagator

GRID = PeriodicGrid(128, 200.0)
SMALL = PeriodicGrid(64, 40.0)
ENVELOPE = SpectralEnvelope(1.0, 1.0)
LOW = DiagnosticsSettings(s=2.0, rho=1.5)
FREE = IntegratorSettings(nonlinear=False)

# Initial data

def test_initial_data_is_normalized():
    state = make_initial_data(GRID, 0.05, seed=1)
    test_close(sobolev_energy(state), 0.05, eps=1e-12)
    test_eq(state.h.is_real and state.psi.is_real, True)
    again = make_initial_data(GRID, 0.05, seed=1)
    test_eq(np.array_equal(state.h.values, again.h.values), True)
    test_eq(np.array_equal(state.h.values, make_initial_data(GRID, 0.05, seed=2).h.values), False)

def test_initial_data_edge_cases():
    zero = make_initial_data(GRID, 0.0)
    test_eq(float(np.max(np.abs(zero.h.values))), 0.0)
    with pytest.raises(ConfigError) as err:
        make_initial_data(GRID, -0.1)
    test_eq(err.value.key, "epsilon")
    with pytest.raises(ConfigError) as err:
        make_initial_data(PeriodicGrid(64, 200.0), 0.01)
    test_eq(err.value.key, "envelope_width")
    with pytest.raises(ConfigError) as err:
        make_initial_data(SMALL, 0.01, envelope=SpectralEnvelope(0.5, 0.2))
    test_eq(err.value.key, "envelope_center")

def test_random_phase_field_stays_in_band():
    f = random_phase_field(SMALL, ENVELOPE, np.random.default_rng(0))
    test_eq(f.is_real, True)
    test_eq(f.spectrum[0], 0)
    assert np.all(f.spectrum[np.abs(SMALL.indices) >= 13] == 0)

# Integrator

def test_default_dt():
    test_close(default_dt(PeriodicGrid(16)), 0.1 * min(1.0, 2 * np.pi / np.sqrt(8.0)), eps=1e-15)

def test_rhs_of_flat_surface():
    x = SMALL.points
    state = WaveState.from_values(SMALL, np.zeros(64), 1e-3 * np.sin(2 * np.pi * 3 * x / 40))
    h_t, psi_t = rhs(state)
    test_close(h_t.values, abs_grad(state.psi).values, eps=1e-15)
    # psi_t is purely quadratic here
    assert float(np.max(np.abs(psi_t.values))) < 1e-6

def test_linear_step_is_free_propagator():
    state = make_initial_data(SMALL, 0.01, seed=3, envelope=ENVELOPE, settings=LOW)
    stepped = step(state, 0.7, FREE)
    expected = free_propagator(SMALL, 0.7) * complex_variable(state).spectrum
    test_close(complex_variable(stepped).spectrum, expected, eps=1e-14)
    test_eq(stepped.t, 0.7)

def test_zero_state_is_fixed():
    zero = WaveState.zeros(SMALL)
    test_eq(float(np.max(np.abs(step(zero, 0.1).h.values))), 0.0)

def test_step_rejects_bad_dt():
    state = WaveState.zeros(SMALL)
    test_fail(lambda: step(state, 0.0), contains="nonzero")
    test_fail(lambda: step(state, float('nan')), contains="nonzero")

# Simulation driver

def test_simulate_snapshots():
    state = make_initial_data(SMALL, 0.01, seed=0, envelope=ENVELOPE, settings=LOW)
    traj, record = simulate(state, 1.0, 0.1, diagnostics=LOW, snapshots=5)
    test_close(traj.times, np.linspace(0, 1, 6), eps=1e-12)
    test_eq(len(record.rows), 6)
    test_eq(record.columns[0], "time")
    test_eq(len(record.columns), len(DiagnosticsRecord.__dataclass_fields__))
    test_eq((record.censored, record.lifespan, record.halt_reason), (True, 1.0, None))
    test_eq(record.scheme["steps"], 10)

def test_simulate_uniform_step():
    traj, record = simulate(WaveState.zeros(SMALL), 1.0, 0.3, diagnostics=LOW)
    test_eq(record.scheme["steps"], 4)
    test_close(traj.dt, 0.25, eps=1e-15)

def test_zero_horizon_is_censored():
    state = make_initial_data(SMALL, 0.01, envelope=ENVELOPE, settings=LOW)
    traj, record = simulate(state, 0.0, diagnostics=LOW)
    test_eq(len(traj.states), 1)
    test_eq((record.censored, record.lifespan), (True, 0.0))
    test_fail(lambda: simulate(state, -1.0), contains="horizon")
    test_fail(lambda: simulate(state, 1.0, -0.1), contains="positive")

def test_hook_halt_is_recorded():
    state = make_initial_data(SMALL, 0.01, envelope=ENVELOPE, settings=LOW)

    def hook(s):
        if s.t >= 0.5:
            raise BlowUpSignal("custom", s.t, s)

    traj, record = simulate(state, 1.0, 0.1, diagnostics=LOW, snapshots=10, hooks=[hook])
    test_eq(record.halt_reason, "custom")
    test_close(record.halt_time, 0.5, eps=1e-12)
    test_close(record.lifespan, 0.5, eps=1e-12)
    test_eq(record.censored, False)
    test_eq(traj.final is traj.states[-1], True)

def test_growth_guard_runs_between_snapshots():
    state = make_initial_data(SMALL, 0.01, envelope=ENVELOPE, settings=LOW)
    # a zero ceiling trips on the first guarded step
    traj, record = simulate(state, 1.0, 0.1, diagnostics=LOW, snapshots=1, blowup_factor=0.0)
    test_eq(record.halt_reason, "energy-growth")
    test_close(record.halt_time, 0.1, eps=1e-12)
    test_eq(len(traj.states), 1)
    test_close(traj.final.t, 0.1, eps=1e-12)
    _, coarse = simulate(state, 1.0, 0.1, diagnostics=LOW, snapshots=1, blowup_factor=0.0, guard_every=5)
    test_close(coarse.halt_time, 0.5, eps=1e-12)
    test_fail(lambda: simulate(state, 1.0, 0.1, diagnostics=LOW, guard_every=0), contains="guard_every")

def test_steep_initial_state_is_rejected():
    x = SMALL.points
    steep = WaveState.from_values(SMALL, np.sin(2 * np.pi * 4 * x / 40), np.zeros(64))
    with pytest.raises(SteepnessError):
        simulate(steep, 1.0, 0.1, diagnostics=LOW)

@pytest.mark.slow
def test_energy_conservation():
    grid = PeriodicGrid(256, 200.0)
    state = make_initial_data(grid, 0.01, seed=0)
    traj, record = simulate(state, 100.0, snapshots=10)
    e0 = energy(traj.states[0])
    drift = max(abs(energy(s) - e0) for s in traj.states) / abs(e0)
    assert drift <= 1e-6, drift
    test_eq(record.halt_reason, None)

@pytest.mark.slow
def test_time_reversal():
    state = make_initial_data(SMALL, 0.02, seed=4, envelope=ENVELOPE, settings=LOW)
    forward, _ = simulate(state, 10.0, diagnostics=LOW, snapshots=1)
    back, _ = simulate(forward.final.reversed().at(0.0), 10.0, diagnostics=LOW, snapshots=1)
    returned = back.final.reversed()
    error = max(np.linalg.norm(returned.h.values - state.h.values) / np.linalg.norm(state.h.values),
                np.linalg.norm(returned.psi.values - state.psi.values) / np.linalg.norm(state.psi.values))
    assert error <= 1e-7, error
