"""Exception hierarchy shared by every lab module."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/errors.ipynb.

# %% auto #0
__all__ = ['WaterWaveLabError', 'RejectedInputError', 'SteepnessError', 'WrapContaminationError', 'ConfigError',
           'SolverDivergenceError', 'BlowUpSignal', 'NormalFormConsistencyError']

# %% ../../nbs/core/errors.ipynb #3b1e7c02
from typing import Any, Optional

# %% ../../nbs/core/errors.ipynb #5d0f2a91
class WaterWaveLabError(Exception):
    """Base class for all lab errors."""

# %% ../../nbs/core/errors.ipynb #a4c81e37
class RejectedInputError(WaterWaveLabError, ValueError):
    """Input to a pure operation is outside its domain."""

class SteepnessError(RejectedInputError):
    """Surface slope exceeds the limit where the DtN series is trusted."""

    def __init__(
        self,
        steepness: float,  # Measured max |h'|
        limit: float  # Allowed max |h'|
    ):
        super().__init__(f"steepness {steepness:.6g} exceeds series limit {limit:.6g}")
        self.steepness = steepness
        self.limit = limit

class WrapContaminationError(RejectedInputError):
    """Sup-norm trace regrows inside a decay window (packet wrapped around the torus)."""

# %% ../../nbs/core/errors.ipynb #e72d5b60
class ConfigError(WaterWaveLabError):
    """Experiment configuration is invalid."""

    def __init__(
        self,
        message: str,  # Human readable reason
        key: Optional[str] = None,  # Offending config key, if any
        constraint: Optional[str] = None  # Violated constraint, if any
    ):
        super().__init__(message)
        self.key = key
        self.constraint = constraint

# %% ../../nbs/core/errors.ipynb #0c9f4d18
class SolverDivergenceError(WaterWaveLabError):
    """Iterative solver stopped before reaching its tolerance."""

    def __init__(
        self,
        residual: float,  # Relative residual at exit
        iterations: int = 0  # Iterations performed
    ):
        super().__init__(f"solver did not converge: relative residual {residual:.3e} after {iterations} iterations")
        self.residual = residual
        self.iterations = iterations

# %% ../../nbs/core/errors.ipynb #81b6e3fa
class BlowUpSignal(WaterWaveLabError):
    """Evolution halted: guard violation, non-finite values or runaway Sobolev energy."""

    def __init__(
        self,
        reason: str,  # One of 'steepness', 'non-finite', 'energy-growth'
        time: float,  # Time at which the halt was detected
        state: Any = None  # Last valid WaveState
    ):
        super().__init__(f"evolution halted at t={time:.6g}: {reason}")
        self.reason = reason
        self.time = time
        self.state = state

# %% ../../nbs/core/errors.ipynb #c5a07d2e
class NormalFormConsistencyError(WaterWaveLabError):
    """A nonzero quadratic symbol met a zero of the phase."""
