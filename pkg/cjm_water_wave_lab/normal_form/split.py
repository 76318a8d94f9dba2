"""Quadratic and cubic parts of the complex nonlinearity."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/normal_form/split.ipynb.

# %% auto #0
__all__ = ['NonlinearitySplit', 'split_nonlinearity', 'cross_formulation_residual', 'relative_l2']

# %% ../../nbs/normal_form/split.ipynb #2e91b4c7
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..dtn.series import b3_remainder, dtn_series
from ..dtn.state import WaveState
from ..evolution.integrator import IntegratorSettings, rhs
from ..spectral.grid import Field
from ..spectral.multipliers import abs_grad, ddx, dealias, half_grad

# %% ../../nbs/normal_form/split.ipynb #d6a04f18
def relative_l2(
    a: Field,  # Measured field
    b: Field,  # Reference field
    scale: Optional[float] = None  # Denominator (default: |b|); 0/0 reads as 0
) -> float:  # |a - b| / scale
    """Relative difference of two fields in the discrete L^2 norm."""
    diff = float(np.linalg.norm(a.spectrum - b.spectrum))
    scale = float(np.linalg.norm(b.spectrum)) if scale is None else scale
    if diff == 0:
        return 0.0
    return diff / scale if scale > 0 else float('inf')

def _complex(
    re: Field,  # Real part
    im: Field  # Imaginary part
) -> Field:
    return Field(re.grid, re.spectrum + 1j * im.spectrum, False)

@dataclass(frozen=True, eq=False)
class NonlinearitySplit:
    """N with its quadratic part N2 and cubic-and-higher part N3."""
    n: Field
    n2: Field
    n3: Field

    @property
    def identity_residual(
        self
    ) -> float:  # |N - N2 - N3| / |N|
        """Bookkeeping check of N = N2 + N3."""
        return relative_l2(self.n2 + self.n3, self.n)

# %% ../../nbs/normal_form/split.ipynb #91fc3a0e
def split_nonlinearity(
    state: WaveState,  # Interface state
    settings: IntegratorSettings = IntegratorSettings()  # DtN order and guard
) -> NonlinearitySplit:  # (N, N2, N3), each projected with the two-thirds rule
    """Split N = (G - |D|)psi + (i/2) Lambda((1 + h'^2) B^2 - psi'^2) into N2 + N3."""
    dtn = dtn_series(state, settings.order, settings.steepness_limit)
    h, psi = state.h, state.psi
    hx, psix, psixx = ddx(h), ddx(psi), ddx(ddx(psi))
    d_psi = abs_grad(psi)
    b, slope2 = dtn.b, hx * hx

    n = _complex(dealias(dtn.g_psi - d_psi), 0.5 * half_grad(dealias((1.0 + slope2) * b * b - psix * psix)))
    # (h psi')' is expanded by the product rule so that the split is exact pointwise
    n2 = _complex(dealias(-abs_grad(h * d_psi) - (hx * psix + h * psixx)),
                  0.5 * half_grad(dealias(d_psi * d_psi - psix * psix)))
    b3 = b3_remainder(state, settings.order, settings.steepness_limit)
    n3 = _complex(dealias(b3 + slope2 * b), 0.5 * half_grad(dealias(b * b - d_psi * d_psi + slope2 * b * b)))
    return NonlinearitySplit(n, n2, n3)

def cross_formulation_residual(
    state: WaveState,  # Interface state
    settings: IntegratorSettings = IntegratorSettings()  # DtN order and guard
) -> float:  # |(u_t + i Lambda u) - N| / |N|
    """Compare u_t + i Lambda u from the Zakharov right-hand side with the split's N."""
    split = split_nonlinearity(state, settings)
    h_t, psi_t = rhs(state, settings)
    u_t = _complex(h_t, half_grad(psi_t))
    i_lam_u = _complex(-abs_grad(state.psi), half_grad(state.h))
    return relative_l2(u_t + i_lam_u, split.n)
