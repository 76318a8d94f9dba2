"""Periodic Fourier grid and the Field value type living on it."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/grid.ipynb.

# %% auto #0
__all__ = ['PeriodicGrid', 'Field']

# %% ../../nbs/spectral/grid.ipynb #4f1a9c2e
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from ..core.errors import RejectedInputError

# %% ../../nbs/spectral/grid.ipynb #8b3e0d71
@dataclass(frozen=True)
class PeriodicGrid:
    """Discrete Fourier lattice of circumference R with N modes, stored in FFT order."""
    modes: int  # Number of modes N (positive, even)
    circumference: float = 2 * math.pi  # Period R

    def __post_init__(self):
        if not isinstance(self.modes, (int, np.integer)) or self.modes <= 0 or self.modes % 2:
            raise RejectedInputError(f"modes must be a positive even integer, got {self.modes!r}")
        if not (math.isfinite(self.circumference) and self.circumference > 0):
            raise RejectedInputError(f"circumference must be positive and finite, got {self.circumference!r}")

    @property
    def dx(
        self
    ) -> float:  # Physical spacing R/N
        """Sample spacing."""
        return self.circumference / self.modes

    @cached_property
    def indices(
        self
    ) -> np.ndarray:  # Integer mode numbers j in FFT order
        """Mode numbers 0, 1, ..., N/2-1, -N/2, ..., -1."""
        out = np.fft.fftfreq(self.modes, d=1.0 / self.modes).round().astype(np.int64)
        out.flags.writeable = False
        return out

    @cached_property
    def wavenumbers(
        self
    ) -> np.ndarray:  # xi_j = 2 pi j / R in FFT order
        """Wavenumbers of the grid modes."""
        out = 2 * np.pi * self.indices / self.circumference
        out.flags.writeable = False
        return out

    @cached_property
    def points(
        self
    ) -> np.ndarray:  # x_i = i dx
        """Physical sample points."""
        out = np.arange(self.modes) * self.dx
        out.flags.writeable = False
        return out

    @cached_property
    def mirror(
        self
    ) -> np.ndarray:  # FFT-order position of -j for each position j
        """Index permutation sending mode j to mode -j (Nyquist maps to itself)."""
        out = (-np.arange(self.modes)) % self.modes
        out.flags.writeable = False
        return out

    @property
    def nyquist(
        self
    ) -> int:  # FFT-order position of j = -N/2
        """Position of the unpaired Nyquist mode."""
        return self.modes // 2

    @property
    def xi_max(
        self
    ) -> float:  # Largest |xi| on the grid
        """Nyquist wavenumber pi N / R."""
        return math.pi * self.modes / self.circumference

    @cached_property
    def dealias_mask(
        self
    ) -> np.ndarray:  # True for retained modes |j| < N/3
        """Two-thirds rule mask."""
        out = 3 * np.abs(self.indices) < self.modes
        out.flags.writeable = False
        return out

# %% ../../nbs/spectral/grid.ipynb #c07d5b18
def _hermitian_part(
    spectrum: np.ndarray,  # FFT-ordered coefficients
    grid: PeriodicGrid  # Grid providing the mirror permutation
) -> np.ndarray:  # Coefficients of the real part of the represented function
    return 0.5 * (spectrum + np.conj(spectrum[grid.mirror]))

# %% ../../nbs/spectral/grid.ipynb #1e6f93ad
@dataclass(frozen=True, eq=False)
class Field:
    """Function on a PeriodicGrid held as Fourier coefficients (forward transform divided by N)."""
    grid: PeriodicGrid
    spectrum: np.ndarray
    is_real: bool = False

    # numpy scalars defer to Field's reflected operators
    __array_ufunc__ = None

    def __post_init__(self):
        spectrum = np.array(self.spectrum, dtype=np.complex128)
        if spectrum.shape != (self.grid.modes,):
            raise RejectedInputError(f"spectrum shape {spectrum.shape} does not match grid with {self.grid.modes} modes")
        if self.is_real:
            # Real fields store the Hermitian part of the given coefficients
            spectrum = _hermitian_part(spectrum, self.grid)
        spectrum.flags.writeable = False
        object.__setattr__(self, 'spectrum', spectrum)

    @classmethod
    def from_values(
        cls,
        grid: PeriodicGrid,  # Grid the samples live on
        values: np.ndarray,  # Samples at grid.points
        is_real: Optional[bool] = None  # Realness flag; inferred from dtype when None
    ) -> 'Field':  # Field with the transformed samples
        """Build a field from physical samples."""
        values = np.asarray(values)
        if values.shape != (grid.modes,):
            raise RejectedInputError(f"values shape {values.shape} does not match grid with {grid.modes} modes")
        if is_real is None:
            is_real = not np.iscomplexobj(values)
        return cls(grid, np.fft.fft(values) / grid.modes, is_real)

    @classmethod
    def zeros(
        cls,
        grid: PeriodicGrid,  # Grid of the field
        is_real: bool = True  # Realness flag
    ) -> 'Field':  # Identically zero field
        """Zero field."""
        return cls(grid, np.zeros(grid.modes, dtype=np.complex128), is_real)

    @cached_property
    def values(
        self
    ) -> np.ndarray:  # Samples at grid.points (float64 when real)
        """Physical-space view."""
        out = np.fft.ifft(self.spectrum * self.grid.modes)
        out = out.real.copy() if self.is_real else out
        out.flags.writeable = False
        return out

    @property
    def mean(
        self
    ) -> complex:  # Zero mode
        """Spatial average."""
        return self.spectrum[0].real if self.is_real else self.spectrum[0]

    def _check_grid(
        self,
        other: 'Field'  # Field combined with self
    ) -> None:
        if other.grid != self.grid:
            raise RejectedInputError(f"grid mismatch: {self.grid} vs {other.grid}")

    def __add__(self, other):
        if isinstance(other, Field):
            self._check_grid(other)
            return Field(self.grid, self.spectrum + other.spectrum, self.is_real and other.is_real)
        if np.isscalar(other):
            out = self.spectrum.copy()
            out[0] += other
            return Field(self.grid, out, self.is_real and np.isrealobj(other))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Field(self.grid, -self.spectrum, self.is_real)

    def __sub__(self, other):
        if isinstance(other, Field) or np.isscalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        # Field * Field is the raw pointwise product (no dealiasing)
        if isinstance(other, Field):
            self._check_grid(other)
            return Field.from_values(self.grid, self.values * other.values, self.is_real and other.is_real)
        if np.isscalar(other):
            return Field(self.grid, self.spectrum * other, self.is_real and np.isrealobj(other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Field):
            self._check_grid(other)
            return Field.from_values(self.grid, self.values / other.values, self.is_real and other.is_real)
        if np.isscalar(other):
            return Field(self.grid, self.spectrum / other, self.is_real and np.isrealobj(other))
        return NotImplemented

    def __pow__(self, n: int):
        return Field.from_values(self.grid, self.values ** n, self.is_real)

    def conj(
        self
    ) -> 'Field':  # Complex conjugate field
        """Pointwise complex conjugate."""
        if self.is_real: return self
        return Field(self.grid, np.conj(self.spectrum[self.grid.mirror]), False)

    @property
    def real(
        self
    ) -> 'Field':  # Real part as a real field
        """Pointwise real part."""
        return Field(self.grid, self.spectrum, True)

    @property
    def imag(
        self
    ) -> 'Field':  # Imaginary part as a real field
        """Pointwise imaginary part."""
        if self.is_real: return Field.zeros(self.grid)
        return Field(self.grid, -1j * self.spectrum, True)

    def roll(
        self,
        shift: int  # Number of samples to translate by
    ) -> 'Field':  # Translated field f(x - shift dx)
        """Translate by a whole number of samples."""
        return Field(self.grid, self.spectrum * np.exp(-1j * self.grid.wavenumbers * shift * self.grid.dx), self.is_real)

    def __repr__(self):
        kind = "real" if self.is_real else "complex"
        return f"Field({kind}, N={self.grid.modes}, R={self.grid.circumference:g})"
