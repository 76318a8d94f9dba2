"""Interface state (h, psi) and the DtN result bundle."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/dtn/state.ipynb.

# %% auto #0
__all__ = ['WaveState', 'DtnResult']

# %% ../../nbs/dtn/state.ipynb #e0b73c51
from dataclasses import dataclass, field
from typing import Any, Dict

import numpy as np

from ..core.errors import RejectedInputError
from ..spectral.grid import Field, PeriodicGrid

# %% ../../nbs/dtn/state.ipynb #74d1a0f9
@dataclass(frozen=True, eq=False)
class WaveState:
    """Surface elevation h and boundary potential psi at time t; psi has zero mean."""
    h: Field
    psi: Field
    t: float = 0.0
    _cache: Dict[Any, Any] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.h.grid != self.psi.grid:
            raise RejectedInputError(f"h and psi live on different grids: {self.h.grid} vs {self.psi.grid}")
        if not (self.h.is_real and self.psi.is_real):
            raise RejectedInputError("h and psi must be real fields")
        if self.psi.spectrum[0] != 0:
            pinned = self.psi.spectrum.copy()
            pinned[0] = 0
            object.__setattr__(self, 'psi', Field(self.psi.grid, pinned, True))

    @property
    def grid(
        self
    ) -> PeriodicGrid:  # Grid shared by h and psi
        """Grid of the state."""
        return self.h.grid

    @classmethod
    def zeros(
        cls,
        grid: PeriodicGrid,  # Grid of the state
        t: float = 0.0  # Time
    ) -> 'WaveState':  # Flat, still interface
        """Equilibrium state."""
        return cls(Field.zeros(grid), Field.zeros(grid), t)

    @classmethod
    def from_values(
        cls,
        grid: PeriodicGrid,  # Grid of the state
        h: np.ndarray,  # Elevation samples
        psi: np.ndarray,  # Potential samples
        t: float = 0.0  # Time
    ) -> 'WaveState':  # State built from physical samples
        """State from real samples."""
        return cls(Field.from_values(grid, np.asarray(h, float)), Field.from_values(grid, np.asarray(psi, float)), t)

    def scaled(
        self,
        factor: float  # Amplitude factor lambda
    ) -> 'WaveState':  # (lambda h, lambda psi)
        """Amplitude scaling."""
        return WaveState(float(factor) * self.h, float(factor) * self.psi, self.t)

    def at(
        self,
        t: float  # New time stamp
    ) -> 'WaveState':  # Same fields, new time
        """Restamp the state."""
        return WaveState(self.h, self.psi, t)

    def reversed(
        self
    ) -> 'WaveState':  # (h, -psi): the time-reversed state
        """Time reversal symmetry t -> -t."""
        return WaveState(self.h, -self.psi, self.t)

    @property
    def is_finite(
        self
    ) -> bool:  # True when every coefficient is finite
        """Check for NaN or overflow."""
        return bool(np.all(np.isfinite(self.h.spectrum)) and np.all(np.isfinite(self.psi.spectrum)))

# %% ../../nbs/dtn/state.ipynb #a3f90e26
@dataclass(frozen=True, eq=False)
class DtnResult:
    """G(h)psi with B = (G psi + h' psi')/(1 + h'^2) and V = psi' - h' B."""
    g_psi: Field
    b: Field
    v: Field
    order: int
