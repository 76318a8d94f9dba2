"""Fourier multipliers, dealiasing and the named operators |D|, Lambda, d/dx."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/multipliers.ipynb.

# %% auto #0
__all__ = ['Symbol', 'symbol_values', 'apply_multiplier', 'dealias', 'product', 'abs_grad', 'half_grad',
           'inv_half_grad', 'ddx', 'free_propagator']

# %% ../../nbs/spectral/multipliers.ipynb #2a7c5e90
from typing import Callable, Optional, Union

import numpy as np

from ..core.errors import RejectedInputError
from .grid import Field, PeriodicGrid

# %% ../../nbs/spectral/multipliers.ipynb #6d19b3f4
Symbol = Callable[[np.ndarray], np.ndarray]  # Vectorized function of the wavenumber

# %% ../../nbs/spectral/multipliers.ipynb #b84e0c27
def symbol_values(
    grid: PeriodicGrid,  # Grid supplying the wavenumbers
    symbol: Union[Symbol, np.ndarray],  # Symbol function or precomputed FFT-ordered values
    at_zero: Optional[complex] = None  # Value imposed at xi = 0 (required for singular symbols)
) -> np.ndarray:  # Symbol evaluated at every grid wavenumber
    """Evaluate a symbol on the grid and reject non-finite values."""
    if callable(symbol):
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            vals = np.broadcast_to(np.asarray(symbol(grid.wavenumbers), dtype=np.complex128), (grid.modes,)).copy()
    else:
        vals = np.asarray(symbol, dtype=np.complex128).copy()
        if vals.shape != (grid.modes,):
            raise RejectedInputError(f"symbol shape {vals.shape} does not match grid with {grid.modes} modes")
    if at_zero is not None:
        vals[0] = at_zero
    bad = ~np.isfinite(vals)
    if bad.any():
        raise RejectedInputError(f"symbol is not finite at wavenumbers {grid.wavenumbers[bad][:5].tolist()}")
    return vals

# %% ../../nbs/spectral/multipliers.ipynb #f3a61d05
def _keeps_real(
    vals: np.ndarray,  # Symbol values in FFT order
    grid: PeriodicGrid  # Grid of the values
) -> bool:  # True when symbol(-xi) = conj(symbol(xi)) on every paired mode
    paired = np.arange(grid.modes) != grid.nyquist
    return bool(np.allclose(vals[grid.mirror][paired], np.conj(vals[paired]), rtol=1e-14, atol=0))

def apply_multiplier(
    f: Field,  # Input field
    symbol: Union[Symbol, np.ndarray],  # Multiplier symbol
    at_zero: Optional[complex] = None  # Value imposed at xi = 0
) -> Field:  # Field with spectrum symbol(xi_j) * spectrum_j
    """Apply a Fourier multiplier; realness is kept when the symbol is Hermitian (e.g. even and real)."""
    vals = symbol_values(f.grid, symbol, at_zero)
    out = f.spectrum * vals
    is_real = f.is_real and _keeps_real(vals, f.grid)
    if is_real:
        # The unpaired Nyquist mode only sees the real part of the symbol
        out[f.grid.nyquist] = f.spectrum[f.grid.nyquist] * vals[f.grid.nyquist].real
    return Field(f.grid, out, is_real)

# %% ../../nbs/spectral/multipliers.ipynb #0e5d7a4b
def dealias(
    f: Field  # Field to filter
) -> Field:  # Field with modes |j| >= N/3 removed
    """Two-thirds rule projection."""
    return Field(f.grid, np.where(f.grid.dealias_mask, f.spectrum, 0), f.is_real)

def product(
    *factors: Field,  # Fields on one grid
    dealiased: bool = True  # Project the result with the two-thirds rule
) -> Field:  # Pointwise product
    """Pointwise product of fields, dealiased by default."""
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return dealias(out) if dealiased else out

# %% ../../nbs/spectral/multipliers.ipynb #94c2f1e8
def abs_grad(
    f: Field  # Input field
) -> Field:  # |D| f
    """Multiplier |xi|."""
    return apply_multiplier(f, np.abs(f.grid.wavenumbers))

def half_grad(
    f: Field  # Input field
) -> Field:  # Lambda f = |D|^{1/2} f
    """Multiplier |xi|^{1/2}."""
    return apply_multiplier(f, np.sqrt(np.abs(f.grid.wavenumbers)))

def inv_half_grad(
    f: Field  # Input field
) -> Field:  # |D|^{-1/2} f on the mean-zero branch
    """Multiplier |xi|^{-1/2}, zero at xi = 0."""
    xi = np.abs(f.grid.wavenumbers)
    with np.errstate(divide='ignore'):
        vals = np.where(xi > 0, 1 / np.sqrt(xi), 0.0)
    return apply_multiplier(f, vals)

def ddx(
    f: Field  # Input field
) -> Field:  # f'
    """Multiplier i xi."""
    return apply_multiplier(f, 1j * f.grid.wavenumbers)

def free_propagator(
    grid: PeriodicGrid,  # Grid of the flow
    t: float  # Time
) -> np.ndarray:  # exp(-i t Lambda(xi)) in FFT order
    """Symbol of the free half-wave flow."""
    return np.exp(-1j * t * np.sqrt(np.abs(grid.wavenumbers)))
