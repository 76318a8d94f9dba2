"""Independent DtN oracle: Laplace solve on the fluid strip under the surface."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/dtn/oracle.ipynb.

# %% auto #0
__all__ = ['VERTICAL_SCHEMES', 'OracleSettings', 'dtn_elliptic_oracle']

# %% ../../nbs/dtn/oracle.ipynb #5c0e8f31
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import lu_factor, lu_solve
from scipy.sparse.linalg import LinearOperator, gmres

from ..core.errors import RejectedInputError, SolverDivergenceError
from ..spectral.grid import Field
from ..spectral.multipliers import ddx
from .state import WaveState

# %% ../../nbs/dtn/oracle.ipynb #b27d4a06
logger = logging.getLogger(__name__)

VERTICAL_SCHEMES = ("chebyshev", "finite_difference")

@dataclass(frozen=True)
class OracleSettings:
    """Discretization and solver knobs of the elliptic oracle."""
    vertical: str = "chebyshev"  # Gauss-Lobatto collocation, or second-order differences on stretched levels
    stretch: float = 3.0  # Exponential clustering of finite-difference levels towards the surface
    tol: float = 1e-12  # GMRES relative tolerance
    restart: int = 60  # GMRES restart length
    maxiter: int = 400  # GMRES outer iterations
    extrapolate: bool = True  # Richardson extrapolation from N_y and 2 N_y (finite differences only)

    def __post_init__(self):
        if self.vertical not in VERTICAL_SCHEMES:
            raise RejectedInputError(f"vertical scheme {self.vertical!r} not in {VERTICAL_SCHEMES}")

# %% ../../nbs/dtn/oracle.ipynb #7f1d9a62
Levels = Tuple[np.ndarray, np.ndarray, np.ndarray]  # (s from -L to 0, d/ds matrix, d^2/ds^2 matrix)

def _chebyshev_levels(
    depth: float,  # Strip depth L
    n_vertical: int  # Number of intervals N_y
) -> Levels:  # Gauss-Lobatto levels with collocation derivative matrices
    j = np.arange(n_vertical + 1)
    x = np.cos(np.pi * j / n_vertical)
    c = np.where((j == 0) | (j == n_vertical), 2.0, 1.0) * (-1.0) ** j
    d = np.outer(c, 1 / c) / (x[:, None] - x[None, :] + np.eye(n_vertical + 1))
    d -= np.diag(d.sum(axis=1))
    # s = -L (1 + x) / 2 runs from the bottom (x = 1) to the surface (x = -1)
    ds = -2 / depth * d
    return -depth * (1 + x) / 2, ds, ds @ ds

def _stretched_levels(
    depth: float,  # Strip depth L
    n_vertical: int,  # Number of intervals N_y
    stretch: float  # Clustering exponent alpha
) -> Levels:  # s(zeta) = -L (exp(alpha (1 - zeta)) - 1) / (exp(alpha) - 1) with second-order stencils
    dz = 1.0 / n_vertical
    e = np.exp(stretch * (1 - np.arange(n_vertical + 1) * dz))
    scale = depth / np.expm1(stretch)
    s, s1, s2 = -scale * (e - 1), scale * stretch * e, -scale * stretch**2 * e
    n = n_vertical + 1
    d1, d2 = np.zeros((n, n)), np.zeros((n, n))
    i = np.arange(1, n - 1)
    d1[i, i - 1], d1[i, i + 1] = -1 / (2 * dz), 1 / (2 * dz)
    d2[i, i - 1], d2[i, i], d2[i, i + 1] = 1 / dz**2, -2 / dz**2, 1 / dz**2
    # One-sided rows at the bottom and at the surface
    d1[0, :3] = np.array([-3.0, 4.0, -1.0]) / (2 * dz)
    d1[-1, -3:] = np.array([1.0, -4.0, 3.0]) / (2 * dz)
    ds = d1 / s1[:, None]
    dss = (d2 - (s2 / s1)[:, None] * d1) / (s1**2)[:, None]
    return s, ds, dss

# %% ../../nbs/dtn/oracle.ipynb #e8a4c017
class _StripProblem:
    """Flattened strip -L <= s <= 0 with y = s (1 + h/L) + h, Fourier in x, derivative matrices in s."""

    def __init__(self, state: WaveState, depth: float, levels: Levels):
        grid = state.grid
        self.s, self.ds, self.dss = levels
        self.n, self.ny, self.depth = grid.modes, len(self.s) - 1, depth
        self.k = 2 * np.pi * np.arange(self.n // 2 + 1) / grid.circumference
        self.ik = 1j * self.k
        self.ik[-1] = 0.0  # odd derivative at the unpaired Nyquist mode

        h = state.h.values
        hx, hxx = ddx(state.h).values, ddx(ddx(state.h)).values
        self.hx = hx
        self.a = 1 + h / depth
        fac = (1 + self.s / depth)[:, None]
        self.b = -hx[None, :] * fac
        self.bx_cs = -hxx[None, :] * fac + 2 * hx[None, :]**2 * fac / (depth * self.a[None, :])
        self.c = (1 + self.b**2) / self.a[None, :]
        self.psi_hat = np.fft.rfft(state.psi.values)
        self._precond = None

    # -- x derivatives, row by row
    def _dx(self, rows, order):
        sym = self.ik if order == 1 else -self.k**2
        return np.fft.irfft(np.fft.rfft(rows, axis=1) * sym, n=self.n, axis=1)

    def _abs_dx(self, row):
        return np.fft.irfft(np.fft.rfft(row) * self.k, n=self.n)

    def apply(self, flat):
        """Discrete operator on the correction field (rows 0..N_y-1; the surface row is zero)."""
        phi = np.vstack([flat.reshape(self.ny, self.n), np.zeros((1, self.n))])
        phi_s, phi_ss = self.ds @ phi, self.dss @ phi
        phi_xs = self.ds @ self._dx(phi, 1)
        out = self.a * self._dx(phi, 2) + 2 * self.b * phi_xs + self.bx_cs * phi_s + self.c * phi_ss
        out[0] = phi_s[0] - self.a * self._abs_dx(phi[0])
        return out[:self.ny].ravel()

    def source(self):
        """Right-hand side from the flat harmonic extension of psi, which solves the problem when h = 0."""
        decay = np.exp(np.outer(self.s, self.k))  # (ny+1, nk)
        base = self.psi_hat[None, :] * decay
        inv = lambda sym: np.fft.irfft(base * sym, n=self.n, axis=1)
        p0_s, p0_ss = inv(self.k), inv(self.k**2)
        p0_xx, p0_xs = inv(-self.k**2), inv(self.ik * self.k)
        residual = self.a * p0_xx + 2 * self.b * p0_xs + self.bx_cs * p0_s + self.c * p0_ss
        rhs = -residual[:self.ny].copy()
        rhs[0] = (self.a - 1) * p0_s[0]  # flat extension has phi_s = |D| phi exactly
        return rhs.ravel(), p0_s[-1]

    def preconditioner(self):
        """Exact inverse of the flat-interface operator, one dense LU per Fourier mode."""
        if self._precond is None:
            eye = np.eye(self.ny + 1)
            blocks = []
            for kk in self.k:
                mat = (self.dss - kk**2 * eye)[:self.ny, :self.ny].copy()
                mat[0] = self.ds[0, :self.ny]
                mat[0, 0] -= kk
                blocks.append(lu_factor(mat))
            self._precond = blocks

        def solve(flat):
            spec = np.fft.rfft(flat.reshape(self.ny, self.n), axis=1)
            sol = np.empty_like(spec)
            for m, lu in enumerate(self._precond):
                sol[:, m] = lu_solve(lu, spec[:, m].real) + 1j * lu_solve(lu, spec[:, m].imag)
            return np.fft.irfft(sol, n=self.n, axis=1).ravel()

        return solve

    def surface_derivative(self, flat):
        """d phi / d s at the surface from the last row of the derivative matrix."""
        return self.ds[-1, :self.ny] @ flat.reshape(self.ny, self.n)

# %% ../../nbs/dtn/oracle.ipynb #31f7b9e5
def _solve_once(
    state: WaveState,  # Interface state
    depth: float,  # Strip depth L
    n_vertical: int,  # Vertical levels N_y
    settings: OracleSettings  # Solver settings
) -> np.ndarray:  # G(h)psi samples
    if settings.vertical == "chebyshev":
        levels = _chebyshev_levels(depth, n_vertical)
    else:
        levels = _stretched_levels(depth, n_vertical, settings.stretch)
    problem = _StripProblem(state, depth, levels)
    rhs, p0_s_top = problem.source()
    size = rhs.size
    norm_rhs = np.linalg.norm(rhs)
    if norm_rhs == 0:
        correction = np.zeros(size)
    else:
        op = LinearOperator((size, size), matvec=problem.apply, dtype=np.float64)
        pre = LinearOperator((size, size), matvec=problem.preconditioner(), dtype=np.float64)
        correction, info = gmres(op, rhs, M=pre, rtol=settings.tol, atol=0.0, restart=settings.restart,
                                 maxiter=settings.maxiter)
        residual = np.linalg.norm(problem.apply(correction) - rhs) / norm_rhs
        logger.debug("oracle gmres vertical=%s n_vertical=%d info=%d residual=%.3e", settings.vertical, n_vertical,
                     info, residual)
        if info != 0 and residual > 100 * settings.tol:
            raise SolverDivergenceError(residual, info if info > 0 else 0)
    phi_s = p0_s_top + problem.surface_derivative(correction)
    b = phi_s / problem.a
    hx, psix = problem.hx, ddx(state.psi).values
    return (1 + hx**2) * b - hx * psix

def dtn_elliptic_oracle(
    state: WaveState,  # Interface state
    depth: float,  # Strip depth L >= 3 max|h| + R/4
    n_vertical: int = 64,  # Vertical levels N_y >= 32
    settings: Optional[OracleSettings] = None  # Solver settings
) -> Field:  # G(h)psi
    """Dirichlet-to-Neumann operator from a Laplace solve with transparent bottom d_y = |D_x|.

    The default Chebyshev collocation in depth is spectrally accurate, so the oracle's error stays far
    below the O(|h|^(M+1)) truncation error of the series it is compared against. The stretched
    finite-difference scheme is second order and is Richardson-extrapolated from N_y and 2 N_y."""
    settings = settings or OracleSettings()
    h_max = float(np.max(np.abs(state.h.values)))
    if depth < 3 * h_max + state.grid.circumference / 4:
        raise RejectedInputError(f"depth {depth:g} below 3 max|h| + R/4 = {3 * h_max + state.grid.circumference / 4:g}")
    if n_vertical < 32:
        raise RejectedInputError(f"n_vertical must be at least 32, got {n_vertical}")
    g = _solve_once(state, depth, n_vertical, settings)
    if settings.vertical == "finite_difference" and settings.extrapolate:
        fine = _solve_once(state, depth, 2 * n_vertical, settings)
        g = (4 * fine - g) / 3
    return Field.from_values(state.grid, g, is_real=True)
