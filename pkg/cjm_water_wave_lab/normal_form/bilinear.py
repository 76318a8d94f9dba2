"""Bilinear Fourier multipliers by direct summation over frequency pairs."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/normal_form/bilinear.ipynb.

# %% auto #0
__all__ = ['bilinear_apply']

# %% ../../nbs/normal_form/bilinear.ipynb #7d21c0f5
from typing import Callable, Union

import numpy as np

from ..core.errors import RejectedInputError
from ..spectral.convolution import pair_convolve, pair_wavenumbers
from ..spectral.grid import Field
from .symbols import BilinearKernel

# %% ../../nbs/normal_form/bilinear.ipynb #e48b9a36
def bilinear_apply(
    kernel: Union[BilinearKernel, Callable[[np.ndarray, np.ndarray], np.ndarray], np.ndarray],  # Kernel m(xi1, xi2)
    f: Field,  # First input
    g: Field  # Second input
) -> Field:  # Complex field with spectrum sum_{xi1 + xi2 = xi} m(xi1, xi2) f_hat(xi1) g_hat(xi2)
    """Apply a bilinear multiplier with an O(N^2) pair sum."""
    if f.grid != g.grid:
        raise RejectedInputError(f"grid mismatch: {f.grid} vs {g.grid}")
    grid = f.grid
    if isinstance(kernel, BilinearKernel):
        if kernel.kind == 'normal_form' and kernel.guard != 0:
            raise RejectedInputError(f"normal-form kernels need guard 0, got {kernel.guard}")
        table = kernel.matrix(grid)
    elif callable(kernel):
        xi1, xi2 = pair_wavenumbers(grid)
        table = np.broadcast_to(np.asarray(kernel(xi1, xi2), dtype=np.complex128), (grid.modes, grid.modes))
    else:
        table = np.asarray(kernel, dtype=np.complex128)
        if table.shape != (grid.modes, grid.modes):
            raise RejectedInputError(f"kernel shape {table.shape} does not match {grid.modes} modes")
    return Field(grid, pair_convolve(grid, f.spectrum, g.spectrum, table), False)
