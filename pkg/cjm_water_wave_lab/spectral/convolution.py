"""Direct O(N^2) bilinear sums over frequency pairs."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/convolution.ipynb.

# %% auto #0
__all__ = ['pair_wavenumbers', 'pair_convolve']

# %% ../../nbs/spectral/convolution.ipynb #3c8d0f6a
from functools import lru_cache
from typing import Tuple

import numpy as np

from .grid import PeriodicGrid

# %% ../../nbs/spectral/convolution.ipynb #9a0e47b1
@lru_cache(maxsize=16)
def _pair_layout(
    grid: PeriodicGrid  # Grid of both inputs
) -> Tuple[np.ndarray, np.ndarray]:  # (flat mask of pairs landing on the grid, FFT position of the sum)
    j = grid.indices
    total = j[:, None] + j[None, :]
    valid = (total >= -grid.modes // 2) & (total < grid.modes // 2)
    target = np.mod(total, grid.modes)
    return valid.ravel(), target.ravel()[valid.ravel()]

def pair_wavenumbers(
    grid: PeriodicGrid  # Grid of both inputs
) -> Tuple[np.ndarray, np.ndarray]:  # (xi1, xi2) meshes, first axis is xi1
    """Wavenumber meshes of all frequency pairs in FFT order."""
    xi = grid.wavenumbers
    return np.meshgrid(xi, xi, indexing='ij')

# %% ../../nbs/spectral/convolution.ipynb #d15b7e29
def pair_convolve(
    grid: PeriodicGrid,  # Grid of inputs and output
    f_hat: np.ndarray,  # First input coefficients (FFT order)
    g_hat: np.ndarray,  # Second input coefficients (FFT order)
    kernel: np.ndarray  # Kernel values on the (xi1, xi2) mesh
) -> np.ndarray:  # sum over xi1 + xi2 = xi of kernel f_hat(xi1) g_hat(xi2)
    """Non-periodic convolution sum; pairs whose sum leaves the grid are dropped."""
    valid, target = _pair_layout(grid)
    terms = (kernel * np.outer(f_hat, g_hat)).ravel()[valid]
    re = np.bincount(target, weights=terms.real, minlength=grid.modes)
    im = np.bincount(target, weights=terms.imag, minlength=grid.modes)
    return re + 1j * im
