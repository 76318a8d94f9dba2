"""Zakharov right-hand side and the integrating-factor RK4 step."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/evolution/integrator.ipynb.

# %% auto #0
__all__ = ['IntegratorSettings', 'rhs', 'nonlinearity', 'step', 'default_dt']

# %% ../../nbs/evolution/integrator.ipynb #0d6e9a21
import math
from dataclasses import dataclass
from typing import Tuple

from ..core.errors import BlowUpSignal, RejectedInputError, SteepnessError
from ..diagnostics.functionals import complex_variable, state_from_complex
from ..dtn.series import DEFAULT_STEEPNESS, dtn_series
from ..dtn.state import WaveState
from ..spectral.grid import Field, PeriodicGrid
from ..spectral.multipliers import abs_grad, ddx, dealias, free_propagator, half_grad

# %% ../../nbs/evolution/integrator.ipynb #a5c3f817
@dataclass(frozen=True)
class IntegratorSettings:
    """Physics switches of the time stepper."""
    order: int = 3  # DtN truncation order
    steepness_limit: float = DEFAULT_STEEPNESS  # Series regime guard
    nonlinear: bool = True  # False integrates the free flow only

def default_dt(
    grid: PeriodicGrid  # Simulation grid
) -> float:  # 0.1 min(1, 2 pi / Lambda(xi_max))
    """Default time step."""
    return 0.1 * min(1.0, 2 * math.pi / math.sqrt(grid.xi_max))

# %% ../../nbs/evolution/integrator.ipynb #6f81b2d4
def rhs(
    state: WaveState,  # Interface state
    settings: IntegratorSettings = IntegratorSettings()  # DtN order and guard
) -> Tuple[Field, Field]:  # (h_t, psi_t)
    """Zakharov system: h_t = G(h)psi, psi_t = -h - psi'^2/2 + (G psi + h' psi')^2 / (2 (1 + h'^2))."""
    try:
        g = dtn_series(state, settings.order, settings.steepness_limit).g_psi
    except SteepnessError as e:
        raise BlowUpSignal("steepness", state.t, state) from e
    hx, psix = ddx(state.h), ddx(state.psi)
    flux = g + hx * psix
    quadratic = flux * flux / (2.0 * (1.0 + hx * hx)) - 0.5 * psix * psix
    # Only the nonlinear parts are projected; the linear flow acts on every mode
    d_psi = abs_grad(state.psi)
    return d_psi + dealias(g - d_psi), dealias(quadratic) - state.h

def nonlinearity(
    state: WaveState,  # Interface state
    settings: IntegratorSettings = IntegratorSettings()  # DtN order and guard
) -> Field:  # N = u_t + i Lambda u
    """Nonlinear part of the complex equation, from the Zakharov right-hand side."""
    h_t, psi_t = rhs(state, settings)
    return Field(state.grid, (h_t - abs_grad(state.psi)).spectrum + 1j * half_grad(psi_t + state.h).spectrum, False)

# %% ../../nbs/evolution/integrator.ipynb #c0b94e5a
def step(
    state: WaveState,  # State at time t
    dt: float,  # Time step (negative steps integrate backwards)
    settings: IntegratorSettings = IntegratorSettings()  # Physics switches
) -> WaveState:  # State at time t + dt
    """Integrating-factor RK4 on u = h + i Lambda psi with exp(-i t Lambda) factored out exactly."""
    if dt == 0 or not math.isfinite(dt):
        raise RejectedInputError(f"time step must be finite and nonzero, got {dt}")
    grid = state.grid
    u = complex_variable(state).spectrum
    half = free_propagator(grid, dt / 2)
    full = half * half

    if not settings.nonlinear:
        return _checked(state_from_complex(Field(grid, full * u), state.t + dt), state)

    def tendency(spec, t):
        return nonlinearity(state_from_complex(Field(grid, spec), t), settings).spectrum

    try:
        k1 = tendency(u, state.t)
        k2 = tendency(half * (u + 0.5 * dt * k1), state.t + dt / 2)
        k3 = tendency(half * u + 0.5 * dt * k2, state.t + dt / 2)
        k4 = tendency(full * u + dt * half * k3, state.t + dt)
    except BlowUpSignal as signal:
        # report the step's starting state, not an intermediate stage
        raise BlowUpSignal(signal.reason, signal.time, state) from signal
    u_new = full * u + dt / 6 * (full * k1 + 2 * half * (k2 + k3) + k4)
    return _checked(state_from_complex(Field(grid, u_new), state.t + dt), state)

def _checked(
    new: WaveState,  # Candidate state
    old: WaveState  # Last valid state
) -> WaveState:
    if not new.is_finite:
        raise BlowUpSignal("non-finite", new.t, old)
    return new
