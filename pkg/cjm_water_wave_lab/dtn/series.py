"""Truncated homogeneous expansion of the Dirichlet-to-Neumann operator."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/dtn/series.ipynb.

# %% auto #0
__all__ = ['MAX_ORDER', 'DEFAULT_STEEPNESS', 'steepness', 'dtn_terms', 'dtn_series', 'b3_remainder']

# %% ../../nbs/dtn/series.ipynb #27f6c0b8
from typing import List

import numpy as np

from ..core.errors import RejectedInputError, SteepnessError
from ..spectral.grid import Field
from ..spectral.multipliers import abs_grad, ddx, product
from .state import DtnResult, WaveState

# %% ../../nbs/dtn/series.ipynb #c1e84a3d
MAX_ORDER = 6
DEFAULT_STEEPNESS = 0.5

def steepness(
    state: WaveState  # Interface state
) -> float:  # max |h'| over samples
    """Surface slope used by the series guard."""
    return float(np.max(np.abs(ddx(state.h).values)))

# %% ../../nbs/dtn/series.ipynb #5b90d2f7
def dtn_terms(
    state: WaveState,  # Interface state
    order: int = 3,  # Truncation order M
    dealiased: bool = True  # Dealias every product inside the recursion
) -> List[Field]:  # Homogeneous pieces G_0 psi, ..., G_M psi
    """Homogeneous terms of G(h)psi from the harmonic extension about y = 0.

    The potential is expanded as phi = sum_m phi_m with phi_m(x, z) of degree m in h and
    exp(|xi| z) vertical structure. Matching phi = psi at z = h order by order gives
    phi_m = -sum_{s=1..m} h^s/s! d_z^s phi_{m-s}, and the vertical velocity at the surface
    W_m = sum_{s=0..m} h^s/s! d_z^{s+1} phi_{m-s}. The DtN pieces are then
    G_j = W_j + h'^2 W_{j-2} - [j = 1] h' psi'.
    """
    if not 0 <= order <= MAX_ORDER:
        raise RejectedInputError(f"truncation order must be in 0..{MAX_ORDER}, got {order}")
    h, psi = state.h, state.psi
    mul = lambda *fs: product(*fs, dealiased=dealiased)

    # h^s / s!
    powers = [None, h]
    for s in range(2, order + 1):
        powers.append(mul(powers[-1], h) / s)

    # derivs[m][n] = d_z^n phi_m at z = 0, with d_z acting as |D|
    derivs = []
    for m in range(order + 1):
        if m == 0:
            base = psi
        else:
            base = Field.zeros(state.grid)
            for s in range(1, m + 1):
                base = base - mul(powers[s], derivs[m - s][s])
        column = [base]
        for _ in range(order + 1 - m):
            column.append(abs_grad(column[-1]))
        derivs.append(column)

    w = []
    for m in range(order + 1):
        total = derivs[m][1]
        for s in range(1, m + 1):
            total = total + mul(powers[s], derivs[m - s][s + 1])
        w.append(total)

    hx, psix = ddx(h), ddx(psi)
    slope2 = mul(hx, hx) if order >= 2 else None
    terms = []
    for j in range(order + 1):
        g = w[j]
        if j == 1:
            g = g - mul(hx, psix)
        if j >= 2:
            g = g + mul(slope2, w[j - 2])
        terms.append(g)
    return terms

# %% ../../nbs/dtn/series.ipynb #e4a61f93
def dtn_series(
    state: WaveState,  # Interface state
    order: int = 3,  # Truncation order M in 0..6
    steepness_limit: float = DEFAULT_STEEPNESS,  # Series regime guard on max |h'|
    dealiased: bool = True  # Dealias products inside the recursion
) -> DtnResult:  # G(h)psi truncated at order M with B and V
    """Dirichlet-to-Neumann operator by truncated expansion; cached on the state."""
    key = ('dtn', order, steepness_limit, dealiased)
    if key in state._cache:
        return state._cache[key]
    slope = steepness(state)
    if slope > steepness_limit:
        raise SteepnessError(slope, steepness_limit)
    terms = dtn_terms(state, order, dealiased)
    g_psi = terms[0]
    for g in terms[1:]:
        g_psi = g_psi + g
    hx, psix = ddx(state.h), ddx(state.psi)
    # B and V are pointwise so that G = B(1 + h'^2) - h' psi' holds exactly
    b = (g_psi + hx * psix) / (1.0 + hx * hx)
    v = psix - hx * b
    result = DtnResult(g_psi=g_psi, b=b, v=v, order=order)
    state._cache[key] = result
    return result

# %% ../../nbs/dtn/series.ipynb #08b3f5ad
def b3_remainder(
    state: WaveState,  # Interface state
    order: int = 3,  # Truncation order of the DtN series
    steepness_limit: float = DEFAULT_STEEPNESS  # Series regime guard
) -> Field:  # B - |D|psi + |D|(h |D|psi) + h psi''
    """Cubic remainder B_3 of the vertical velocity."""
    b = dtn_series(state, order, steepness_limit).b
    h, psi = state.h, state.psi
    d_psi = abs_grad(psi)
    return b - d_psi + abs_grad(h * d_psi) + h * ddx(ddx(psi))
