"""Complex variable, good unknown, energies and the per-snapshot diagnostics record."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/diagnostics/functionals.ipynb.

# %% auto #0
__all__ = ['DiagnosticsSettings', 'complex_variable', 'state_from_complex', 'good_unknown', 'energy', 'sobolev_energy',
           'quadratic_sobolev_energy', 'DiagnosticsRecord', 'DiagnosticsTracker']

# %% ../../nbs/diagnostics/functionals.ipynb #f3c9a108
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..dtn.series import DEFAULT_STEEPNESS, dtn_series, steepness
from ..dtn.state import WaveState
from ..spectral.grid import Field
from ..spectral.littlewood_paley import LPDecomposition, besov_norm, sobolev_norm
from ..spectral.multipliers import half_grad, inv_half_grad
from ..spectral.paraproduct import ParaproductCutoff, paraproduct

# %% ../../nbs/diagnostics/functionals.ipynb #4a7e21d6
@dataclass(frozen=True)
class DiagnosticsSettings:
    """Exponents and operator settings shared by every diagnostic."""
    s: float = 18.0  # Sobolev index of E_s
    rho: float = 3.5  # Besov index of the spacetime norm
    order: int = 3  # DtN truncation order
    steepness_limit: float = DEFAULT_STEEPNESS  # DtN series guard
    cutoff: ParaproductCutoff = field(default_factory=ParaproductCutoff)  # Paraproduct cutoff phi
    k_low: int = 0  # Low Littlewood-Paley block index
    oversample: int = 1  # Sup-norm oversampling

    def decomposition(
        self,
        state: WaveState  # State whose grid is covered
    ) -> LPDecomposition:  # Decomposition covering the grid
        return LPDecomposition.for_grid(state.grid, self.k_low)

_DEFAULT = DiagnosticsSettings()

# %% ../../nbs/diagnostics/functionals.ipynb #d5b1e047
def complex_variable(
    state: WaveState  # Interface state
) -> Field:  # u = h + i Lambda psi
    """Diagonalizing complex unknown."""
    return Field(state.grid, state.h.spectrum + 1j * half_grad(state.psi).spectrum, False)

def state_from_complex(
    u: Field,  # Complex unknown
    t: float = 0.0  # Time stamp
) -> WaveState:  # (Re u, Lambda^{-1} Im u) with mean-zero psi
    """Invert complex_variable."""
    return WaveState(u.real, inv_half_grad(u.imag), t)

# %% ../../nbs/diagnostics/functionals.ipynb #90e4c3fb
def good_unknown(
    state: WaveState,  # Interface state
    settings: DiagnosticsSettings = _DEFAULT  # Operator settings
) -> Field:  # w = psi - T_B h
    """Paradifferential good unknown."""
    b = dtn_series(state, settings.order, settings.steepness_limit).b
    return state.psi - paraproduct(b, state.h, settings.cutoff)

def energy(
    state: WaveState,  # Interface state
    settings: DiagnosticsSettings = _DEFAULT  # Operator settings
) -> float:  # integral of (psi G(h)psi + h^2)/2
    """Conserved Hamiltonian."""
    g = dtn_series(state, settings.order, settings.steepness_limit).g_psi
    density = 0.5 * (state.psi.values * g.values + state.h.values**2)
    return float(np.sum(density) * state.grid.dx)

def sobolev_energy(
    state: WaveState,  # Interface state
    s: Optional[float] = None,  # Sobolev index (default: settings.s)
    settings: DiagnosticsSettings = _DEFAULT  # Operator settings
) -> float:  # |h|_{H^s} + |Lambda w|_{H^s}
    """High-order energy E_s."""
    s = settings.s if s is None else s
    return sobolev_norm(state.h, s) + sobolev_norm(half_grad(good_unknown(state, settings)), s)

def quadratic_sobolev_energy(
    state: WaveState,  # Interface state
    s: Optional[float] = None,  # Sobolev index (default: settings.s)
    nonlinear: bool = True,  # Use w; with False the good unknown is replaced by psi
    settings: DiagnosticsSettings = _DEFAULT  # Operator settings
) -> float:  # |h|^2_{H^s} + |Lambda w|^2_{H^s}
    """Quadratic form whose drift rate measures the energy estimate."""
    s = settings.s if s is None else s
    w = good_unknown(state, settings) if nonlinear else state.psi
    return sobolev_norm(state.h, s)**2 + sobolev_norm(half_grad(w), s)**2

# %% ../../nbs/diagnostics/functionals.ipynb #27ea8b5c
@dataclass(frozen=True)
class DiagnosticsRecord:
    """One row of a run's diagnostics time series."""
    time: float
    energy: float  # E
    sobolev_energy: float  # E_s
    besov_rho: float  # |h|_{C^rho} + |Lambda psi|_{C^rho}
    u_sobolev: float  # |u|_{H^s}
    g_partial: float  # (int_0^t |u|_{C^rho}^4)^(1/4)
    u_besov: float  # |u|_{C^rho}
    f_sup: float  # sup over past snapshots of |u|_{H^s}
    mass: float  # mean of h
    steepness: float  # max |h'|

class DiagnosticsTracker:
    """Computes DiagnosticsRecord rows along a trajectory and accumulates the spacetime norm."""

    def __init__(
        self,
        settings: DiagnosticsSettings = _DEFAULT  # Exponents and operator settings
    ):
        self.settings = settings
        self.records = []
        self._integral = 0.0
        self._f_sup = 0.0

    def __call__(
        self,
        state: WaveState  # Snapshot to record
    ) -> DiagnosticsRecord:  # The appended row
        """Record one snapshot; snapshots must arrive in increasing time."""
        cfg = self.settings
        lp = cfg.decomposition(state)
        u = complex_variable(state)
        u_besov = besov_norm(u, cfg.rho, lp, cfg.oversample)
        u_sobolev = sobolev_norm(u, cfg.s)
        if self.records:
            prev = self.records[-1]
            # trapezoid step of |u|_{C^rho}^4
            self._integral += 0.5 * (state.t - prev.time) * (prev.u_besov**4 + u_besov**4)
        self._f_sup = max(self._f_sup, u_sobolev)
        record = DiagnosticsRecord(
            time=float(state.t),
            energy=energy(state, cfg),
            sobolev_energy=sobolev_energy(state, cfg.s, cfg),
            besov_rho=besov_norm(state.h, cfg.rho, lp, cfg.oversample)
                      + besov_norm(half_grad(state.psi), cfg.rho, lp, cfg.oversample),
            u_sobolev=u_sobolev,
            g_partial=self._integral**0.25,
            u_besov=u_besov,
            f_sup=self._f_sup,
            mass=float(state.h.mean),
            steepness=steepness(state),
        )
        self.records.append(record)
        return record
