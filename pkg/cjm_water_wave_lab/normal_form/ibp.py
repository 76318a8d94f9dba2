"""Normal-form boundary and cubic terms, and the time integration-by-parts identity."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/normal_form/ibp.ipynb.

# %% auto #0
__all__ = ['boundary_term', 'cubic_term', 'reconstruct_quadratic', 'IbpTerms', 'ibp_terms', 'ibp_identity_residual',
           'IbpConvergence', 'ibp_convergence', 'DuhamelSplit', 'duhamel_split', 'boundary_term_bounds']

# %% ../../nbs/normal_form/ibp.ipynb #6c0e2d95
import logging
import math
from dataclasses import dataclass
from functools import partial
from typing import Dict, List, Optional, Sequence

import numpy as np
from fastcore.parallel import parallel
from scipy.integrate import trapezoid

from ..core.errors import RejectedInputError
from ..diagnostics.functionals import complex_variable
from ..dtn.bench import RatioStats
from ..dtn.state import WaveState
from ..evolution.initial import SpectralEnvelope, random_state
from ..evolution.integrator import IntegratorSettings
from ..evolution.simulate import Trajectory
from ..spectral.grid import Field, PeriodicGrid
from ..spectral.littlewood_paley import LPDecomposition, besov_norm, sobolev_norm
from ..spectral.multipliers import dealias, free_propagator
from .bilinear import bilinear_apply
from .split import relative_l2, split_nonlinearity
from .symbols import SIGNS, BilinearKernel

# %% ../../nbs/normal_form/ibp.ipynb #f1a8c347
logger = logging.getLogger(__name__)

def _signed(
    f: Field,  # Complex field
    sign: int  # +1 or -1
) -> Field:  # f for +1, conj(f) for -1
    return f if sign > 0 else f.conj()

def _sum_pairs(
    kind: str,  # Kernel kind
    terms  # Callable (kernel, mu, nu) -> Field
) -> Field:
    out = None
    for mu, nu in SIGNS:
        term = terms(BilinearKernel(mu, nu, kind), mu, nu)
        out = term if out is None else out + term
    return dealias(out)

def reconstruct_quadratic(
    u: Field  # Complex unknown u = h + i Lambda psi
) -> Field:  # sum over (mu, nu) of N_{mu nu}[u_mu, u_nu]
    """Quadratic nonlinearity rebuilt from the symbols m_{mu nu}."""
    return _sum_pairs('raw', lambda k, mu, nu: bilinear_apply(k, _signed(u, mu), _signed(u, nu)))

def boundary_term(
    state: WaveState  # Interface state
) -> Field:  # sum over (mu, nu) of Q_{mu nu}
    """Boundary term of the normal form: kernel m_{mu nu} / (i Phi_{mu nu}) applied to (u_mu, u_nu)."""
    u = complex_variable(state)
    return _sum_pairs('normal_form', lambda k, mu, nu: bilinear_apply(k, _signed(u, mu), _signed(u, nu)))

def cubic_term(
    state: WaveState,  # Interface state
    nonlinearity: Optional[Field] = None,  # N at this state (computed when omitted)
    settings: IntegratorSettings = IntegratorSettings()  # DtN order and guard
) -> Field:  # sum over (mu, nu) of C_{mu nu}
    """Bulk term of the normal form: the kernel applied to (u_mu, N_nu) + (N_mu, u_nu)."""
    u = complex_variable(state)
    n = split_nonlinearity(state, settings).n if nonlinearity is None else nonlinearity

    def terms(k, mu, nu):
        return bilinear_apply(k, _signed(u, mu), _signed(n, nu)) + bilinear_apply(k, _signed(n, mu), _signed(u, nu))
    return _sum_pairs('normal_form', terms)

# %% ../../nbs/normal_form/ibp.ipynb #20b9d6ea
@dataclass
class IbpTerms:
    """Both sides of u2(t) = Q(t) - e^{-it Lambda} Q(0) - int_0^t e^{-i(t - tau) Lambda} C(tau) dtau."""
    u2: Field  # Duhamel integral of N2
    q_end: Field  # Q(t)
    q_start: Field  # e^{-it Lambda} Q(0)
    bulk: Field  # Duhamel integral of C

    @property
    def rhs(
        self
    ) -> Field:
        return self.q_end - self.q_start - self.bulk

    @property
    def residual(
        self
    ) -> float:  # |u2 - rhs| / max(|u2|, |Q(t)|)
        scale = max(float(np.linalg.norm(self.u2.spectrum)), float(np.linalg.norm(self.q_end.spectrum)))
        return relative_l2(self.rhs, self.u2, scale)

def _duhamel(
    grid: PeriodicGrid,  # Grid of the samples
    times: np.ndarray,  # Sample times tau_k, increasing
    spectra: np.ndarray  # Integrand spectra at tau_k, shape (K, N)
) -> Field:  # Trapezoid of e^{-i(t - tau) Lambda} f(tau) over [tau_0, t]
    end = times[-1]
    weights = np.stack([free_propagator(grid, end - tau) for tau in times])
    return Field(grid, trapezoid(weights * spectra, x=times, axis=0), False)

def _samples(
    states: Sequence[WaveState]  # Snapshots
) -> np.ndarray:
    times = np.array([s.t for s in states], dtype=float)
    if times.size < 2:
        raise RejectedInputError(f"need at least 2 snapshots, got {times.size}")
    if np.any(np.diff(times) <= 0):
        raise RejectedInputError("snapshot times must be strictly increasing")
    return times

def ibp_terms(
    states: Sequence[WaveState],  # Snapshots of one trajectory
    settings: IntegratorSettings = IntegratorSettings()  # DtN order and guard of the run
) -> IbpTerms:  # Both sides of the identity at the last snapshot
    """Evaluate the integration-by-parts identity from trajectory snapshots by trapezoid quadrature."""
    times = _samples(states)
    grid = states[0].grid
    n2, bulk = [], []
    for state in states:
        split = split_nonlinearity(state, settings)
        n2.append(split.n2.spectrum)
        # A free-flow run has u_t + i Lambda u = 0, so the bulk term vanishes
        n = split.n if settings.nonlinear else Field(grid, np.zeros(grid.modes), False)
        bulk.append(cubic_term(state, n, settings).spectrum)
    q0 = boundary_term(states[0])
    return IbpTerms(
        u2=_duhamel(grid, times, np.array(n2)),
        q_end=boundary_term(states[-1]),
        q_start=Field(grid, free_propagator(grid, times[-1] - times[0]) * q0.spectrum, False),
        bulk=_duhamel(grid, times, np.array(bulk)),
    )

def _states(
    trajectory  # Trajectory or sequence of states
) -> List[WaveState]:
    return list(trajectory.states if isinstance(trajectory, Trajectory) else trajectory)

def ibp_identity_residual(
    trajectory,  # Trajectory or snapshot sequence with a fine cadence
    settings: IntegratorSettings = IntegratorSettings()  # DtN order and guard
) -> float:  # Relative L^2 residual of the identity
    """Residual of the normal-form identity over the whole trajectory."""
    return ibp_terms(_states(trajectory), settings).residual

# %% ../../nbs/normal_form/ibp.ipynb #8b4d1f70
@dataclass
class IbpConvergence:
    """Identity residual under cadence coarsening."""
    strides: List[int]
    residuals: List[float]  # Finest cadence first
    order: float = float('nan')  # Smallest observed order log2(r_coarse / r_fine)
    inconclusive: bool = False  # Residuals at round-off or outside the asymptotic regime

    def passes(
        self,
        minimum: float = 2.0,  # Required convergence order
        slack: float = 0.0  # Allowed shortfall below minimum
    ) -> bool:
        return self.inconclusive or self.order >= minimum - slack

def ibp_convergence(
    trajectory,  # Trajectory or snapshot sequence
    strides: Sequence[int] = (1, 2, 4),  # Cadence multipliers, each double the previous
    settings: IntegratorSettings = IntegratorSettings(),  # DtN order and guard
    floor: float = 1e-12  # Residuals below this are round-off
) -> IbpConvergence:  # Residuals and observed order
    """Self-convergence of the identity residual as the snapshot cadence is halved."""
    states = _states(trajectory)
    top = max(strides)
    usable = (len(states) - 1) // top * top
    if usable < top:
        raise RejectedInputError(f"need at least {top + 1} snapshots, got {len(states)}")
    states = states[:usable + 1]
    residuals = [ibp_identity_residual(states[::k], settings) for k in strides]
    out = IbpConvergence(list(strides), residuals)
    if min(residuals) < floor:
        out.inconclusive = True
        return out
    orders = [math.log(r_coarse / r_fine, k_coarse / k_fine)
              for (k_fine, r_fine), (k_coarse, r_coarse) in zip(zip(strides, residuals), zip(strides[1:], residuals[1:]))]
    out.order = min(orders)
    # Orders that disagree by more than one mean the coarse cadence is not yet asymptotic
    out.inconclusive = len(orders) > 1 and max(orders) - min(orders) > 1.0
    logger.info("ibp convergence residuals=%s order=%.3g inconclusive=%s", residuals, out.order, out.inconclusive)
    return out

# %% ../../nbs/normal_form/ibp.ipynb #c5376e21
@dataclass
class DuhamelSplit:
    """u(t) = e^{-it Lambda} u(0) + u2(t) + u3(t) with the quadrature residual."""
    linear: Field
    u2: Field
    u3: Field
    residual: float

def duhamel_split(
    trajectory,  # Trajectory or snapshot sequence
    settings: IntegratorSettings = IntegratorSettings()  # DtN order and guard
) -> DuhamelSplit:  # Pieces at the last snapshot
    """Split the final state into its free, quadratic and cubic Duhamel parts."""
    states = _states(trajectory)
    times = _samples(states)
    grid = states[0].grid
    splits = [split_nonlinearity(s, settings) for s in states]
    u0, u_end = complex_variable(states[0]), complex_variable(states[-1])
    linear = Field(grid, free_propagator(grid, times[-1] - times[0]) * u0.spectrum, False)
    u2 = _duhamel(grid, times, np.array([sp.n2.spectrum for sp in splits]))
    u3 = _duhamel(grid, times, np.array([sp.n3.spectrum for sp in splits]))
    return DuhamelSplit(linear, u2, u3, relative_l2(linear + u2 + u3, u_end))

# %% ../../nbs/normal_form/ibp.ipynb #3a6f02e8
def _bound_member(
    index: int,
    grid: PeriodicGrid,
    epsilon: float,
    seed: int,
    envelope: SpectralEnvelope,
    s: float,
    gamma: float,
    rho: float,
    k_low: int
) -> Dict[str, float]:
    base = random_state(grid, envelope, np.random.default_rng(np.random.SeedSequence([seed, index])))
    state = base.scaled(epsilon / sobolev_norm(complex_variable(base), s))
    u, q = complex_variable(state), boundary_term(state)
    lp = LPDecomposition.for_grid(grid, k_low)
    return {"Q-Hgamma": sobolev_norm(q, gamma) / (besov_norm(u, rho, lp) * sobolev_norm(u, s)),
            "Q-besov": besov_norm(q, rho, lp) / sobolev_norm(q, rho + 0.5)}

def boundary_term_bounds(
    grid: PeriodicGrid,  # Grid of the ensemble
    epsilon: float = 0.01,  # |u|_{H^s} of every sample
    samples: int = 20,  # Ensemble size
    seed: int = 0,  # Master seed
    envelope: Optional[SpectralEnvelope] = None,  # Spectral shape of the random states
    s: float = 18.0,  # Sobolev index
    gamma: float = 4.25,  # Index of the H^gamma bound
    rho: float = 3.5,  # Besov index
    k_low: int = 0,  # Low Littlewood-Paley block
    jobs: int = 1  # Worker processes
) -> Dict[str, RatioStats]:  # Bound name -> ratio distribution
    """Ensemble ratios |Q|_{H^gamma} / (|u|_{C^rho} |u|_{H^s}) and |Q|_{C^rho} / |Q|_{H^{rho+1/2}}."""
    envelope = envelope or SpectralEnvelope()
    envelope.check(grid)
    member = partial(_bound_member, grid=grid, epsilon=epsilon, seed=seed, envelope=envelope, s=s, gamma=gamma,
                     rho=rho, k_low=k_low)
    rows = parallel(member, range(samples), n_workers=jobs, progress=False) if jobs > 1 else [member(i) for i in range(samples)]
    return {name: RatioStats(name, [row[name] for row in rows]) for name in (rows[0] if rows else {})}
