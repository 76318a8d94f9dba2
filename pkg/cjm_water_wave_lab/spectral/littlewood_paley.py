"""Smooth bump profiles, Littlewood-Paley blocks, and the Sobolev and Besov norms."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/littlewood_paley.ipynb.

# %% auto #0
__all__ = ['smooth_step', 'bump', 'LPDecomposition', 'lp_project', 'sup_norm', 'besov_norm', 'sobolev_norm']

# %% ../../nbs/spectral/littlewood_paley.ipynb #a1c04e7b
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from ..core.errors import RejectedInputError
from .grid import Field, PeriodicGrid
from .multipliers import apply_multiplier

# %% ../../nbs/spectral/littlewood_paley.ipynb #5e8f2d30
def smooth_step(
    x: Union[float, np.ndarray]  # Argument
) -> np.ndarray:  # C-infinity step: 0 for x <= 0, 1 for x >= 1
    """Transition built from exp(-1/x); plateaus are exactly 0 and 1."""
    x = np.asarray(x, dtype=float)
    left = np.where(x > 0, np.exp(-1.0 / np.where(x > 0, x, 1.0)), 0.0)
    right = np.where(x < 1, np.exp(-1.0 / np.where(x < 1, 1.0 - x, 1.0)), 0.0)
    return left / (left + right)

def bump(
    r: Union[float, np.ndarray]  # Argument
) -> np.ndarray:  # theta(r): 1 for |r| <= 1, 0 for |r| >= 2
    """Even C-infinity bump profile."""
    return 1.0 - smooth_step(np.abs(r) - 1.0)

# %% ../../nbs/spectral/littlewood_paley.ipynb #c92b6a15
@dataclass(frozen=True)
class LPDecomposition:
    """Dyadic partition of unity: low block theta(xi/2^k_low), blocks k_low+1..k_max."""
    k_max: int  # Highest block index
    k_low: int = 0  # Low block is theta(xi / 2^k_low)
    profile: Callable[[np.ndarray], np.ndarray] = bump  # Bump profile theta

    def __post_init__(self):
        if self.k_max < self.k_low:
            raise RejectedInputError(f"k_max={self.k_max} below k_low={self.k_low}")

    @classmethod
    def for_grid(
        cls,
        grid: PeriodicGrid,  # Grid to cover
        k_low: int = 0  # Low block convention
    ) -> 'LPDecomposition':  # Decomposition whose blocks sum to 1 on every grid wavenumber
        """Smallest decomposition covering the grid."""
        k_max = max(k_low + 1, math.ceil(math.log2(grid.xi_max)))
        return cls(k_max=k_max, k_low=k_low)

    @property
    def blocks(
        self
    ) -> range:  # Block indices above the low block
        """Indices k_low+1..k_max."""
        return range(self.k_low + 1, self.k_max + 1)

    def block_symbol(
        self,
        k: int,  # Any integer block index
        xi: np.ndarray  # Wavenumbers
    ) -> np.ndarray:  # psi_k(xi) = theta(xi/2^k) - theta(xi/2^(k-1))
        """Dyadic annulus symbol, defined for every integer k."""
        return self.profile(xi / 2.0**k) - self.profile(xi / 2.0**(k - 1))

    def low_symbol(
        self,
        xi: np.ndarray  # Wavenumbers
    ) -> np.ndarray:  # theta(xi / 2^k_low)
        """Low-frequency block symbol."""
        return self.profile(xi / 2.0**self.k_low)

    def symbol(
        self,
        k: Union[int, str],  # Block index or "low"
        xi: np.ndarray  # Wavenumbers
    ) -> np.ndarray:  # Block symbol values
        """Symbol of a block in range."""
        if k == "low":
            return self.low_symbol(xi)
        if isinstance(k, (int, np.integer)) and self.k_low < k <= self.k_max:
            return self.block_symbol(int(k), xi)
        raise RejectedInputError(f"block {k!r} outside range low, {self.k_low + 1}..{self.k_max}")

# %% ../../nbs/spectral/littlewood_paley.ipynb #0f4b9d62
def lp_project(
    f: Field,  # Field to project
    k: Union[int, str],  # Block index or "low"
    decomposition: Optional[LPDecomposition] = None  # Defaults to LPDecomposition.for_grid
) -> Field:  # P_k f
    """Littlewood-Paley projection."""
    lp = decomposition or LPDecomposition.for_grid(f.grid)
    return apply_multiplier(f, lp.symbol(k, f.grid.wavenumbers))

# %% ../../nbs/spectral/littlewood_paley.ipynb #7d2e5c83
def sup_norm(
    f: Field,  # Field to measure
    oversample: int = 1  # Spectral oversampling factor
) -> float:  # max |f| over (oversampled) samples
    """Sup norm over grid samples, optionally on a zero-padded finer grid."""
    if oversample <= 1:
        return float(np.max(np.abs(f.values)))
    n, half = f.grid.modes, f.grid.modes // 2
    padded = np.zeros(n * oversample, dtype=np.complex128)
    padded[:half] = f.spectrum[:half]
    padded[-half:] = f.spectrum[half:]
    return float(np.max(np.abs(np.fft.ifft(padded * n * oversample))))

def besov_norm(
    f: Field,  # Field to measure
    gamma: float,  # Regularity index
    decomposition: Optional[LPDecomposition] = None,  # Defaults to LPDecomposition.for_grid
    oversample: int = 1  # Sup-norm oversampling
) -> float:  # max(|P_low f|_inf, sup_k 2^(k gamma) |P_k f|_inf)
    """Norm of the Besov space B^gamma_{inf,inf}."""
    lp = decomposition or LPDecomposition.for_grid(f.grid)
    out = sup_norm(lp_project(f, "low", lp), oversample)
    for k in lp.blocks:
        out = max(out, 2.0**(k * gamma) * sup_norm(lp_project(f, k, lp), oversample))
    return out

# %% ../../nbs/spectral/littlewood_paley.ipynb #e6a1f04c
def sobolev_norm(
    f: Field,  # Field to measure
    s: float  # Sobolev index
) -> float:  # (R sum_j (1+xi_j^2)^s |c_j|^2)^(1/2)
    """H^s norm; s = 0 is the L^2 norm of the samples' trigonometric interpolant."""
    weights = (1.0 + f.grid.wavenumbers**2) ** s
    return float(np.sqrt(f.grid.circumference * np.sum(weights * np.abs(f.spectrum) ** 2)))
