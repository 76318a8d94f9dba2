"""Time-integrated norms of diagnostic traces."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/diagnostics/spacetime.ipynb.

# %% auto #0
__all__ = ['spacetime_accumulate', 'holder_l2_bound']

# %% ../../nbs/diagnostics/spacetime.ipynb #8e20b4d1
from typing import Sequence, Tuple

import numpy as np
from scipy.integrate import trapezoid

from ..core.errors import RejectedInputError

# %% ../../nbs/diagnostics/spacetime.ipynb #1b7fa9c6
def _as_trace(
    trace: Sequence[float],  # Uniformly sampled values
    dt: float  # Sample spacing
) -> np.ndarray:
    values = np.asarray(trace, dtype=float)
    if values.ndim != 1 or values.size < 2:
        raise RejectedInputError(f"need at least 2 samples, got {values.size}")
    if not dt > 0:
        raise RejectedInputError(f"sample spacing must be positive, got {dt}")
    return values

def spacetime_accumulate(
    trace: Sequence[float],  # Besov norm samples at uniform times
    dt: float  # Sample spacing
) -> float:  # (trapezoid of trace^4)^(1/4)
    """L^4-in-time norm of a trace."""
    values = _as_trace(trace, dt)
    return float(trapezoid(values**4, dx=dt) ** 0.25)

def holder_l2_bound(
    trace: Sequence[float],  # Samples at uniform times
    dt: float  # Sample spacing
) -> Tuple[float, float]:  # (|f|^2_{L^2_t}, sqrt(T) |f|^2_{L^4_t})
    """Both sides of the Hoelder step L^2_t <= T^(1/4) L^4_t, squared."""
    values = _as_trace(trace, dt)
    horizon = dt * (values.size - 1)
    return float(trapezoid(values**2, dx=dt)), float(np.sqrt(horizon) * spacetime_accumulate(values, dt)**2)
