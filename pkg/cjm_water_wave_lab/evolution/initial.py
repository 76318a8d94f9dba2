"""Random-phase, non-localized initial data normalized in the high-order energy."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/evolution/initial.ipynb.

# %% auto #0
__all__ = ['SpectralEnvelope', 'random_phase_field', 'random_state', 'make_initial_data']

# %% ../../nbs/evolution/initial.ipynb #c4f28e07
import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..core.errors import ConfigError
from ..diagnostics.functionals import DiagnosticsSettings, sobolev_energy
from ..dtn.state import WaveState
from ..spectral.grid import Field, PeriodicGrid
from ..spectral.littlewood_paley import bump, sobolev_norm
from ..spectral.multipliers import half_grad, inv_half_grad

# %% ../../nbs/evolution/initial.ipynb #7a1d5fe3
logger = logging.getLogger(__name__)

Seed = Union[int, np.random.SeedSequence, None]

@dataclass(frozen=True)
class SpectralEnvelope:
    """Smooth compact amplitude profile in |xi|: flat on |xi - center| <= width/2, zero beyond width."""
    center: float = 0.5  # Central wavenumber
    width: float = 0.4  # Full width of the support

    def __call__(
        self,
        xi: np.ndarray  # Wavenumbers
    ) -> np.ndarray:  # Amplitudes, zero at xi = 0
        amp = bump(2 * (np.abs(xi) - self.center) / self.width)
        return np.where(xi == 0, 0.0, amp)

    def check(
        self,
        grid: PeriodicGrid,  # Grid to fit on
        band: float = 1 / 3  # Largest allowed |j|/N
    ) -> None:
        """Reject envelopes that miss the grid or leave the dealiased band."""
        amp = self(grid.wavenumbers)
        support = amp > 0
        if np.count_nonzero(support & (grid.indices > 0)) < 4:
            raise ConfigError(f"envelope {self} covers fewer than 4 positive modes on {grid}", key="envelope_center")
        if np.any(np.abs(grid.indices[support]) >= band * grid.modes):
            raise ConfigError(f"envelope {self} leaves the band |j| < {band:.3g} N on {grid}", key="envelope_width")

# %% ../../nbs/evolution/initial.ipynb #e09b6c42
def random_phase_field(
    grid: PeriodicGrid,  # Grid of the field
    envelope: SpectralEnvelope,  # Amplitude profile
    rng: np.random.Generator  # Random stream
) -> Field:  # Real field with uniform random phases
    """Real field whose coefficients are envelope(xi) exp(i theta) with random theta."""
    phases = rng.uniform(0, 2 * np.pi, grid.modes)
    spectrum = envelope(grid.wavenumbers) * np.exp(1j * phases)
    spectrum[grid.nyquist] = 0
    # Keep positive modes, mirror them to negative ones
    spectrum = np.where(grid.indices > 0, spectrum, 0)
    spectrum = spectrum + np.conj(spectrum[grid.mirror])
    return Field(grid, spectrum, True)

def random_state(
    grid: PeriodicGrid,  # Grid of the state
    envelope: SpectralEnvelope,  # Amplitude profile of h and Lambda psi
    rng: np.random.Generator  # Random stream
) -> WaveState:  # Unnormalized random state with h and Lambda psi of equal spectral shape
    """Random-phase state before normalization."""
    h = random_phase_field(grid, envelope, rng)
    psi = inv_half_grad(random_phase_field(grid, envelope, rng))
    return WaveState(h, psi)

# %% ../../nbs/evolution/initial.ipynb #51d8a3bf
def make_initial_data(
    grid: PeriodicGrid,  # Grid of the state
    epsilon: float,  # Target |h|_{H^s} + |Lambda w|_{H^s}
    seed: Seed = 0,  # Seed or SeedSequence of the random phases
    envelope: Optional[SpectralEnvelope] = None,  # Amplitude profile (default SpectralEnvelope())
    settings: Optional[DiagnosticsSettings] = None,  # Sobolev index and DtN settings of E_s
    tol: float = 1e-12,  # Relative normalization tolerance
    max_iter: int = 60  # Fixed-point iteration cap
) -> WaveState:  # Normalized state with E_s = epsilon
    """Random-phase initial data scaled so that the high-order energy equals epsilon."""
    if epsilon < 0:
        raise ConfigError(f"epsilon must be nonnegative, got {epsilon}", key="epsilon")
    envelope = envelope or SpectralEnvelope()
    settings = settings or DiagnosticsSettings()
    envelope.check(grid)
    if epsilon == 0:
        return WaveState.zeros(grid)
    base = random_state(grid, envelope, np.random.default_rng(seed))
    # Start from the linear size (w = psi), then iterate lambda <- lambda epsilon / E_s
    scale = 1.0
    measured = sobolev_norm(base.h, settings.s) + sobolev_norm(half_grad(base.psi), settings.s)
    for it in range(max_iter):
        scale *= epsilon / measured
        state = base.scaled(scale)
        measured = sobolev_energy(state, settings=settings)
        if abs(measured - epsilon) <= tol * epsilon:
            logger.debug("initial data normalized epsilon=%g iterations=%d residual=%.3e", epsilon, it + 1,
                         abs(measured - epsilon))
            return state
    raise ConfigError(f"normalization did not converge: E_s={measured:.17g} for epsilon={epsilon:g}", key="epsilon")
