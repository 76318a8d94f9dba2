"""Time loop with snapshot hooks, blow-up proxies and run records."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/evolution/simulate.ipynb.

# %% auto #0
__all__ = ['Hook', 'Trajectory', 'simulate']

# %% ../../nbs/evolution/simulate.ipynb #3e9d0c6b
import logging
import math
import time
from dataclasses import dataclass, field, fields
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import BlowUpSignal, RejectedInputError
from ..core.records import RunRecord
from ..diagnostics.functionals import DiagnosticsRecord, DiagnosticsSettings, DiagnosticsTracker, sobolev_energy
from ..dtn.state import WaveState
from .integrator import IntegratorSettings, default_dt, step

# %% ../../nbs/evolution/simulate.ipynb #b0fa4d73
logger = logging.getLogger(__name__)

Hook = Callable[[WaveState], Any]  # Called with every snapshot

@dataclass
class Trajectory:
    """Snapshots of a run at strictly increasing times, integrated with a uniform step."""
    states: List[WaveState]
    dt: float
    scheme: Dict[str, Any] = field(default_factory=dict)
    halted: Optional[WaveState] = None  # State at which a halt was detected, when it is not a snapshot

    @property
    def times(
        self
    ) -> np.ndarray:  # Snapshot times
        """Times of the snapshots."""
        return np.array([s.t for s in self.states])

    @property
    def final(
        self
    ) -> WaveState:  # Last valid state of the run
        """Halt state if the run stopped between snapshots, else the last snapshot."""
        return self.halted if self.halted is not None else self.states[-1]

# %% ../../nbs/evolution/simulate.ipynb #71c5e2a8
def _snapshot_steps(
    n_steps: int,  # Integration steps in the run
    snapshots: int  # Requested snapshot count
) -> set:  # Step numbers after which a snapshot is taken (0 is the initial state)
    stride = max(1, n_steps // max(1, snapshots))
    marks = set(range(0, n_steps + 1, stride))
    marks.add(n_steps)
    return marks

def simulate(
    initial: WaveState,  # Initial state
    horizon: float,  # Final time T >= 0
    dt: Optional[float] = None,  # Nominal step; the run uses T / ceil(T / dt)
    settings: IntegratorSettings = IntegratorSettings(),  # Physics switches
    diagnostics: DiagnosticsSettings = DiagnosticsSettings(),  # Exponents of the recorded norms
    snapshots: int = 50,  # Snapshot cadence (count over the run)
    hooks: Sequence[Hook] = (),  # Extra callables invoked at every snapshot
    blowup_factor: float = 10.0,  # Halt when E_s exceeds this multiple of E_s(0)
    growth_threshold: float = 2.0,  # Lifespan proxy threshold on E_s / E_s(0)
    guard_every: int = 1  # Steps between E_s checks, independent of the snapshot cadence
) -> Tuple[Trajectory, RunRecord]:  # Snapshots and the diagnostics record
    """Advance to the horizon or until a halt signal; halts are recorded, not raised."""
    if horizon < 0 or not math.isfinite(horizon):
        raise RejectedInputError(f"horizon must be finite and nonnegative, got {horizon}")
    nominal = dt if dt is not None else default_dt(initial.grid)
    if not nominal > 0:
        raise RejectedInputError(f"time step must be positive, got {nominal}")
    if guard_every < 1:
        raise RejectedInputError(f"guard_every must be at least 1, got {guard_every}")
    n_steps = math.ceil(horizon / nominal - 1e-12) if horizon > 0 else 0
    step_dt = horizon / n_steps if n_steps else nominal
    marks = _snapshot_steps(n_steps, snapshots)

    tracker = DiagnosticsTracker(diagnostics)
    record = RunRecord(scheme={"integrator": "if-rk4", "dt": step_dt, "steps": n_steps, "dtn_order": settings.order,
                               "nonlinear": settings.nonlinear})
    record.columns = [f.name for f in fields(DiagnosticsRecord)]
    states = []
    started = time.perf_counter()

    def take(state):
        row = tracker(state)
        states.append(state)
        record.rows.append(row)
        for hook in hooks:
            hook(state)
        return row

    state, t0 = initial, initial.t
    halted = None
    try:
        first = take(state)
        base = first.sobolev_energy
        for n in range(1, n_steps + 1):
            state = step(state, step_dt, settings).at(t0 + n * step_dt)
            if n in marks:
                current = take(state).sobolev_energy
            elif n % guard_every == 0:
                current = sobolev_energy(state, settings=diagnostics)
            else:
                continue
            if base > 0:
                ratio = current / base
                record.note_growth(state.t - t0, ratio, growth_threshold, blowup_factor)
                if ratio > blowup_factor:
                    raise BlowUpSignal("energy-growth", state.t, state)
    except BlowUpSignal as signal:
        record.halt_reason = signal.reason
        record.halt_time = signal.time
        if isinstance(signal.state, WaveState) and not (states and states[-1] is signal.state):
            halted = signal.state
        logger.info("run halted reason=%s t=%.6g", signal.reason, signal.time)
    record.wall_clock["simulate_seconds"] = time.perf_counter() - started
    if record.lifespan is None:
        if record.halt_reason is not None:
            record.lifespan = record.halt_time - t0
        else:
            record.lifespan = horizon
            record.censored = True
    return Trajectory(states, step_dt, dict(record.scheme), halted), record
