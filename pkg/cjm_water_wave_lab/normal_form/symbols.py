"""Resonance phases, quadratic symbols and tabulated bilinear kernels."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/normal_form/symbols.ipynb.

# %% auto #0
__all__ = ['SIGNS', 'phase', 'quadratic_generators', 'quadratic_symbol', 'BilinearKernel']

# %% ../../nbs/normal_form/symbols.ipynb #0b7e4f2a
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Tuple

import numpy as np

from ..core.errors import NormalFormConsistencyError, RejectedInputError
from ..spectral.grid import PeriodicGrid

# %% ../../nbs/normal_form/symbols.ipynb #83c5a1d9
SIGNS = ((1, 1), (1, -1), (-1, 1), (-1, -1))  # (mu, nu) pairs; u_+ = u, u_- = conj(u)

def _check_signs(
    mu: int,
    nu: int
) -> None:
    if mu not in (1, -1) or nu not in (1, -1):
        raise RejectedInputError(f"signs must be +1 or -1, got ({mu}, {nu})")

def phase(
    mu: int,  # Sign of the first input
    nu: int,  # Sign of the second input
    xi1: np.ndarray,  # First input frequency
    xi2: np.ndarray  # Second input frequency
) -> np.ndarray:  # sqrt|xi1 + xi2| - mu sqrt|xi1| - nu sqrt|xi2|
    """Three-wave resonance function."""
    _check_signs(mu, nu)
    xi1, xi2 = np.asarray(xi1, dtype=float), np.asarray(xi2, dtype=float)
    return np.sqrt(np.abs(xi1 + xi2)) - mu * np.sqrt(np.abs(xi1)) - nu * np.sqrt(np.abs(xi2))

# %% ../../nbs/normal_form/symbols.ipynb #5fd20c64
def _resonant(
    xi1: np.ndarray,
    xi2: np.ndarray
) -> np.ndarray:  # True where xi1 xi2 (xi1 + xi2) = 0
    return (xi1 == 0) | (xi2 == 0) | (xi1 + xi2 == 0)

def quadratic_generators(
    xi1: np.ndarray,  # First input frequency
    xi2: np.ndarray  # Second input frequency
) -> Tuple[np.ndarray, np.ndarray]:  # (g1, g2), both zero on the resonance set
    """The two 3/2-homogeneous generators of the quadratic symbols.

    g1 = (|xi| |xi2| - xi xi2) / sqrt|xi2| comes from -|D|(h |D|psi) - (h psi')', and
    g2 = sqrt|xi| (|xi1| |xi2| + xi1 xi2) / sqrt(|xi1| |xi2|) from Lambda((|D|psi)^2 - psi'^2),
    with xi = xi1 + xi2.
    """
    xi1, xi2 = np.broadcast_arrays(np.asarray(xi1, dtype=float), np.asarray(xi2, dtype=float))
    xi = xi1 + xi2
    zero = _resonant(xi1, xi2)
    a1, a2 = np.where(zero, 1.0, np.abs(xi1)), np.where(zero, 1.0, np.abs(xi2))
    g1 = (np.abs(xi) * a2 - xi * xi2) / np.sqrt(a2)
    g2 = np.sqrt(np.abs(xi)) * (a1 * a2 + xi1 * xi2) / np.sqrt(a1 * a2)
    return np.where(zero, 0.0, g1), np.where(zero, 0.0, g2)

def _unsymmetrized(
    mu: int,
    nu: int,
    xi1: np.ndarray,
    xi2: np.ndarray
) -> np.ndarray:  # Coefficient of u_mu(xi1) u_nu(xi2) in N2 before symmetrization
    g1, g2 = quadratic_generators(xi1, xi2)
    return 0.25j * nu * g1 - 0.125j * mu * nu * g2

def quadratic_symbol(
    mu: int,  # Sign of the first input
    nu: int,  # Sign of the second input
    xi1: np.ndarray,  # First input frequency
    xi2: np.ndarray  # Second input frequency
) -> np.ndarray:  # m_{mu nu}(xi1, xi2), complex
    """Symmetrized coefficient of u_mu(xi1) u_nu(xi2) in the quadratic nonlinearity.

    Substituting h = (u_+ + u_-)/2 and Lambda psi = (u_+ - u_-)/(2i) into
    N2 = -|D|(h |D|psi) - (h psi')' + (i/2) Lambda((|D|psi)^2 - psi'^2) gives
    m0_{mu nu} = (i/4) nu g1 - (i/8) mu nu g2; the returned symbol averages
    m0_{mu nu}(xi1, xi2) with m0_{nu mu}(xi2, xi1).
    """
    _check_signs(mu, nu)
    return 0.5 * (_unsymmetrized(mu, nu, xi1, xi2) + _unsymmetrized(nu, mu, xi2, xi1))

# %% ../../nbs/normal_form/symbols.ipynb #c4a9e1b7
@dataclass(frozen=True)
class BilinearKernel:
    """Symbol m_{mu nu} or the normal-form kernel m_{mu nu} / (i Phi_{mu nu}) for one sign pair."""
    mu: int = 1  # Sign of the first input
    nu: int = 1  # Sign of the second input
    kind: Literal['raw', 'normal_form'] = 'raw'
    guard: float = 0.0  # |Phi| <= guard counts as resonant

    def __post_init__(self):
        _check_signs(self.mu, self.nu)
        if self.kind not in ('raw', 'normal_form'):
            raise RejectedInputError(f"kernel kind must be 'raw' or 'normal_form', got {self.kind!r}")
        if not self.guard >= 0:
            raise RejectedInputError(f"guard must be nonnegative, got {self.guard}")

    def __call__(
        self,
        xi1: np.ndarray,  # First input frequency
        xi2: np.ndarray  # Second input frequency
    ) -> np.ndarray:  # Kernel values, 0 on the resonance set
        m = quadratic_symbol(self.mu, self.nu, xi1, xi2)
        if self.kind == 'raw':
            return m
        phi = phase(self.mu, self.nu, xi1, xi2)
        small = np.abs(phi) <= self.guard
        if np.any(small & (m != 0)):
            worst = float(np.max(np.abs(m[small])))
            raise NormalFormConsistencyError(
                f"m_{{{self.mu:+d}{self.nu:+d}}} = {worst:.3e} where |Phi| <= {self.guard:g}")
        return np.where(small, 0.0, m / (1j * np.where(small, 1.0, phi)))

    @lru_cache(maxsize=16)
    def matrix(
        self,
        grid: PeriodicGrid  # Grid to tabulate on
    ) -> np.ndarray:  # Kernel on the (xi1, xi2) mesh in FFT order
        """Kernel tabulated on all frequency pairs; read-only."""
        j = grid.indices
        # Integer meshes make the resonance set exact
        j1, j2 = np.meshgrid(j, j, indexing='ij')
        k0 = 2 * np.pi / grid.circumference
        xi1, xi2 = k0 * j1, k0 * j2
        out = np.asarray(self(xi1, xi2), dtype=np.complex128)
        out[(j1 + j2) == 0] = 0
        out.flags.writeable = False
        return out
