"""Empirical constants of the Dirichlet-to-Neumann bounds over random small states."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/dtn/bench.ipynb.

# %% auto #0
__all__ = ['BenchSettings', 'RatioStats', 'measure_ratios', 'inequality_bench']

# %% ../../nbs/dtn/bench.ipynb #5e0a7c21
import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional

import numpy as np
from fastcore.parallel import parallel

from ..evolution.initial import SpectralEnvelope, random_state
from ..spectral.grid import PeriodicGrid
from ..spectral.littlewood_paley import LPDecomposition, besov_norm, sobolev_norm
from ..spectral.multipliers import abs_grad, ddx, half_grad
from ..spectral.paraproduct import ParaproductCutoff, paraproduct
from .series import DEFAULT_STEEPNESS, dtn_series
from .state import WaveState

# %% ../../nbs/dtn/bench.ipynb #a93f1d60
logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class BenchSettings:
    """Exponents of the measured bounds."""
    s: float = 18.0  # Sobolev index of h
    gamma: float = 4.25  # Hoelder-Zygmund index, 2 gamma not an integer
    mu: Optional[float] = None  # Index of the quadratic-remainder bound (default: s)
    order: int = 3  # DtN truncation order
    steepness_limit: float = DEFAULT_STEEPNESS
    k_low: int = 0  # Low Littlewood-Paley block
    cutoff: ParaproductCutoff = field(default_factory=ParaproductCutoff)

@dataclass
class RatioStats:
    """Distribution of one LHS/RHS ratio over an ensemble."""
    name: str
    samples: List[float]

    @property
    def max(
        self
    ) -> float:
        return float(np.max(self.samples)) if self.samples else 0.0

    @property
    def median(
        self
    ) -> float:
        return float(np.median(self.samples)) if self.samples else 0.0

    @property
    def finite(
        self
    ) -> bool:  # Every sample is a finite number
        return bool(np.all(np.isfinite(self.samples)))

    @property
    def stable(
        self
    ) -> bool:  # Max within a factor 3 of the median
        return self.finite and self.max <= 3 * self.median if self.median > 0 else self.max == 0

    def summary(
        self
    ) -> Dict[str, float]:
        return {"max": self.max, "median": self.median, "finite": self.finite, "stable": self.stable,
                "samples": len(self.samples)}

# %% ../../nbs/dtn/bench.ipynb #1c5b8e4f
def _ratio(
    num: float,  # Left-hand side
    den: float  # Right-hand side
) -> float:  # num / den, with 0/0 read as 0
    if num == 0:
        return 0.0
    return num / den if den > 0 else float('inf')

def measure_ratios(
    state: WaveState,  # Small interface state
    settings: BenchSettings = BenchSettings()  # Exponents
) -> Dict[str, float]:  # Bound name -> LHS / RHS
    """LHS/RHS of each Dirichlet-to-Neumann, good-unknown and paraproduct bound at one state."""
    s, gamma = settings.s, settings.gamma
    mu = s if settings.mu is None else settings.mu
    lp = LPDecomposition.for_grid(state.grid, settings.k_low)
    hs = lambda f, r: sobolev_norm(f, r)
    cr = lambda f, r: besov_norm(f, r, lp)
    h, psi = state.h, state.psi
    dtn = dtn_series(state, settings.order, settings.steepness_limit)
    d_psi, psix, lam_psi = abs_grad(psi), ddx(psi), half_grad(psi)

    out = {}
    out["Gh-Cr"] = _ratio(cr(dtn.g_psi, gamma - 1) + cr(dtn.b, gamma - 1) + cr(dtn.v, gamma - 1),
                          cr(lam_psi, gamma - 0.5))
    out["Gh-Hs"] = _ratio(hs(dtn.g_psi, s - 1) + hs(dtn.b, s - 1) + hs(dtn.v, s - 1), hs(lam_psi, s - 0.5))
    out["Gh-Cr2"] = _ratio(cr(dtn.g_psi - d_psi, gamma - 1) + cr(dtn.b - d_psi, gamma - 1) + cr(dtn.v - psix, gamma - 1),
                           cr(h, gamma) * cr(lam_psi, gamma + 0.5))
    mixed = cr(lam_psi, gamma - 0.5) * hs(h, s)
    out["Gh-Hs2-g"] = _ratio(hs(dtn.g_psi - d_psi, mu - 1), mixed + cr(h, gamma) * hs(lam_psi, mu - 1.5))
    out["Gh-Hs2-b"] = _ratio(hs(dtn.b - d_psi, mu - 1), mixed + cr(h, gamma) * hs(lam_psi, mu - 0.5))
    w = psi - paraproduct(dtn.b, h, settings.cutoff)
    out["good-unknown"] = _ratio(hs(half_grad(w - psi), s - 0.5), hs(lam_psi, s - 0.5) * hs(h, s))
    out["paraproduct"] = _ratio(hs(paraproduct(dtn.b, h, settings.cutoff), s),
                                float(np.max(np.abs(dtn.b.values))) * hs(h, s))
    return out

# %% ../../nbs/dtn/bench.ipynb #e7042b9d
def _bench_member(
    index: int,  # Ensemble index
    grid: PeriodicGrid,
    epsilon: float,
    seed: int,
    envelope: SpectralEnvelope,
    settings: BenchSettings
) -> Dict[str, float]:
    base = random_state(grid, envelope, np.random.default_rng(np.random.SeedSequence([seed, index])))
    size = sobolev_norm(base.h, settings.s)
    return measure_ratios(base.scaled(epsilon / size), settings)

def inequality_bench(
    grid: PeriodicGrid,  # Grid of the ensemble
    epsilon: float = 0.01,  # |h|_{H^s} of every sample
    samples: int = 100,  # Ensemble size
    seed: int = 0,  # Master seed
    envelope: Optional[SpectralEnvelope] = None,  # Spectral shape of the random states
    settings: BenchSettings = BenchSettings(),  # Exponents
    jobs: int = 1  # Worker processes
) -> Dict[str, RatioStats]:  # Bound name -> ratio distribution
    """Ratio distributions of every bound over a random-phase ensemble."""
    envelope = envelope or SpectralEnvelope()
    envelope.check(grid)
    member = partial(_bench_member, grid=grid, epsilon=epsilon, seed=seed, envelope=envelope, settings=settings)
    rows = parallel(member, range(samples), n_workers=jobs, progress=False) if jobs > 1 else [member(i) for i in range(samples)]
    stats = {name: RatioStats(name, [row[name] for row in rows]) for name in (rows[0] if rows else {})}
    for st in stats.values():
        logger.info("bench ratio=%s max=%.4g median=%.4g stable=%s", st.name, st.max, st.median, st.stable)
    return stats
