"""Low-high paraproduct T_f g with the smooth cutoff phi."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/paraproduct.ipynb.

# %% auto #0
__all__ = ['ParaproductCutoff', 'paraproduct']

# %% ../../nbs/spectral/paraproduct.ipynb #6b2f9e14
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from ..core.errors import RejectedInputError
from .grid import Field, PeriodicGrid
from .littlewood_paley import bump, smooth_step
from .convolution import pair_convolve, pair_wavenumbers

# %% ../../nbs/spectral/paraproduct.ipynb #f02a8d57
@dataclass(frozen=True)
class ParaproductCutoff:
    """phi(xi1, xi2) = chi(|xi1|/|xi2|) (1 - theta(2 xi2))."""
    inner: float = 1 / 20  # chi = 1 for ratios up to here
    outer: float = 1 / 10  # chi = 0 for ratios from here

    def __post_init__(self):
        if not 0 < self.inner < self.outer:
            raise RejectedInputError(f"cutoff thresholds must satisfy 0 < inner < outer, got {self.inner}, {self.outer}")

    def chi(
        self,
        r: np.ndarray  # Frequency ratio |xi1|/|xi2|
    ) -> np.ndarray:  # 1 below inner, 0 above outer
        """Ratio cutoff."""
        return 1.0 - smooth_step((r - self.inner) / (self.outer - self.inner))

    def __call__(
        self,
        xi1: np.ndarray,  # Low-frequency argument
        xi2: np.ndarray  # High-frequency argument
    ) -> np.ndarray:  # Cutoff values
        high = 1.0 - bump(2 * xi2)
        with np.errstate(divide='ignore', invalid='ignore'):
            ratio = np.where(xi2 != 0, np.abs(xi1) / np.where(xi2 != 0, np.abs(xi2), 1.0), np.inf)
        return self.chi(ratio) * high

    @lru_cache(maxsize=8)
    def matrix(
        self,
        grid: PeriodicGrid  # Grid to tabulate on
    ) -> np.ndarray:  # phi on the (xi1, xi2) mesh
        """Cutoff tabulated on all frequency pairs."""
        xi1, xi2 = pair_wavenumbers(grid)
        return self(xi1, xi2)

# %% ../../nbs/spectral/paraproduct.ipynb #1ad75c60
def paraproduct(
    f: Field,  # Low-frequency factor
    g: Field,  # High-frequency factor
    cutoff: Optional[ParaproductCutoff] = None  # Defaults to thresholds 1/20 and 1/10
) -> Field:  # T_f g
    """Paraproduct: sum over xi1 + xi2 = xi of phi(xi1, xi2) f_hat(xi1) g_hat(xi2)."""
    if f.grid != g.grid:
        raise RejectedInputError(f"grid mismatch: {f.grid} vs {g.grid}")
    phi = (cutoff or ParaproductCutoff()).matrix(f.grid)
    return Field(f.grid, pair_convolve(f.grid, f.spectrum, g.spectrum, phi), f.is_real and g.is_real)
