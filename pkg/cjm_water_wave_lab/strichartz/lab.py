"""Dispersive decay, Strichartz norms and wrap-around of the free half-wave flow on a periodic grid."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/strichartz/lab.ipynb.

# %% auto #0
__all__ = ['free_evolve', 'block_packet', 'grid_for_block', 'DecayFit', 'measure_decay', 'StrichartzMeasurement',
           'measure_strichartz', 'LossFit', 'measure_periodic_loss', 'WrapMeasurement', 'wrap_time',
           'periodic_loss_factor', 'DispersionReport', 'dispersion_report']

# %% ../../nbs/strichartz/lab.ipynb #4b8e02d7
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from scipy import stats
from scipy.integrate import trapezoid

from ..core.errors import RejectedInputError, WrapContaminationError
from ..spectral.grid import Field, PeriodicGrid
from ..spectral.littlewood_paley import LPDecomposition, bump, smooth_step, sobolev_norm
from ..spectral.multipliers import free_propagator

# %% ../../nbs/strichartz/lab.ipynb #a7f3c910
logger = logging.getLogger(__name__)

def free_evolve(
    u0: Field,  # Initial datum
    t: float  # Time (any sign)
) -> Field:  # e^{-it Lambda} u0
    """Free half-wave flow, exact on every mode."""
    if t == 0:
        return u0
    return Field(u0.grid, free_propagator(u0.grid, t) * u0.spectrum, False)

def grid_for_block(
    k: int,  # Dyadic block index
    circumference: float  # Period R
) -> PeriodicGrid:  # Smallest power-of-two grid with xi_max >= 1.5 * 2^(k+1)
    """Grid resolving a block-k packet with margin."""
    need = 1.5 * 2.0**(k + 1) * circumference / math.pi
    return PeriodicGrid(max(16, 2**math.ceil(math.log2(need))), circumference)

def _flat_symbol(
    xi: np.ndarray,  # Wavenumbers
    k: int,  # Dyadic block index
    edge: float  # Width of each taper in log2 frequency
) -> np.ndarray:  # |xi/2^k|^(-3/4) under a flat-topped window on 2^(k-1) < |xi| < 2^(k+1)
    ratio = np.abs(xi) / 2.0**k
    safe = np.where(ratio > 0, ratio, 1.0)
    taper = 1.0 - smooth_step((np.abs(np.log2(safe)) - 1.0 + edge) / edge)
    return np.where(ratio > 0, taper * safe**-0.75, 0.0)

def block_packet(
    grid: PeriodicGrid,  # Grid of the packet
    k: int,  # Dyadic block index
    center: float = 0.0,  # Position of the packet
    one_sided: bool = False,  # Keep positive frequencies only (a packet moving right)
    relative_width: Optional[float] = None,  # Narrow bump of this relative width around 2^k instead of the annulus
    flat: bool = False,  # Equal stationary-phase amplitude across the annulus
    edge: float = 0.4  # Taper width of the flat profile in log2 frequency
) -> Field:  # Unit-L^2 datum
    """Block-k datum translated to center.

    The default spectrum is the Littlewood-Paley annulus symbol and `relative_width` selects a narrow bump
    around 2^k. With `flat` the spectrum is |xi|^(-3/4) under a flat-topped window filling the annulus: every
    frequency of the block then has the same stationary-phase amplitude, and the sup norm follows t^(-1/2)
    as soon as the packet has spread past its initial width."""
    if not 0 < edge <= 1:
        raise RejectedInputError(f"taper width must lie in (0, 1], got {edge}")
    xi = grid.wavenumbers
    if flat:
        amp = _flat_symbol(xi, k, edge)
    elif relative_width is None:
        amp = LPDecomposition(k_max=k, k_low=k - 1).block_symbol(k, xi)
    else:
        amp = bump((np.abs(xi) - 2.0**k) / (relative_width * 2.0**k))
    if one_sided:
        amp = np.where(xi > 0, amp, 0.0)
    amp = np.where(xi == 0, 0.0, amp)
    spectrum = amp * np.exp(-1j * xi * center)
    spectrum[grid.nyquist] = 0
    packet = Field(grid, spectrum, not one_sided)
    norm = sobolev_norm(packet, 0)
    if norm == 0:
        raise RejectedInputError(f"block {k} has no modes on {grid}")
    return packet / norm

# %% ../../nbs/strichartz/lab.ipynb #2f96d4e1
@dataclass
class DecayFit:
    """Fit of log sup_x |e^{-it Lambda} u| against log t with a (t0/t)^2 settling term."""
    k: int
    circumference: float
    times: List[float]
    sups: List[float]
    slope: float
    intercept: float
    stderr: float  # Standard error of the slope
    settling: float  # Coefficient of (t0/t)^2, the approach to the stationary-phase curve

def _check_window(
    k: int,
    circumference: float,
    t_max: float
) -> None:
    wrap = 2.0**(k / 2) * circumference
    if t_max > wrap / 4:
        raise RejectedInputError(f"window end {t_max:g} exceeds a quarter of the wrap time {wrap:g} (k={k}, R={circumference:g})")

def _sup_series(
    u0: Field,  # Initial datum
    times: np.ndarray,  # Evaluation times
    oversample: int = 1,  # Sup-norm oversampling
    budget: int = 1 << 20  # Complex entries per batched FFT
) -> np.ndarray:  # sup_x |e^{-it Lambda} u0| at every time
    """Sup norms along the free flow, one batched inverse FFT per block of times."""
    n = u0.grid.modes
    m = n * max(oversample, 1)
    root = np.sqrt(np.abs(u0.grid.wavenumbers))
    out = np.empty(len(times))
    rows = max(1, budget // m)
    for start in range(0, len(times), rows):
        t = np.asarray(times[start:start + rows], dtype=float)[:, None]
        spectra = np.exp(-1j * t * root) * u0.spectrum
        if m > n:
            # Zero-padding as in sup_norm
            padded = np.zeros((len(t), m), dtype=np.complex128)
            padded[:, :n // 2] = spectra[:, :n // 2]
            padded[:, -(n // 2):] = spectra[:, n // 2:]
            spectra = padded
        out[start:start + len(t)] = np.abs(np.fft.ifft(spectra * m, axis=1)).max(axis=1)
    return out

def measure_decay(
    k: int,  # Dyadic block index
    circumference: float,  # Period R
    times: Optional[Sequence[float]] = None,  # Fit window (default 2^(-k/2) geomspace(10, 200, 24))
    center: float = 0.0,  # Packet position
    oversample: int = 1,  # Sup-norm oversampling
    regrowth: float = 0.05  # Tolerated relative re-growth of the sup norm
) -> DecayFit:  # Fitted decay slope, about -1/2 before wrap-around
    """Dispersive decay rate of a unit-L^2 block-k packet.

    The packet is `block_packet(..., flat=True)`. Near the start of the window its sup norm is still
    settling onto the stationary-phase curve C t^(-1/2); the leading correction of that expansion is
    O(t^-2), so the least-squares model is log sup = intercept + slope log t + settling (t0/t)^2."""
    times = np.asarray(2.0**(-k / 2) * np.geomspace(10, 200, 24) if times is None else times, dtype=float)
    if times.size < 4 or np.any(times <= 0) or np.any(np.diff(times) <= 0):
        raise RejectedInputError("decay window needs at least 4 increasing positive times")
    _check_window(k, circumference, float(times[-1]))
    grid = grid_for_block(k, circumference)
    u0 = block_packet(grid, k, center, flat=True)
    sups = _sup_series(u0, times, oversample)
    running_min = np.minimum.accumulate(sups)
    if np.any(sups > (1 + regrowth) * running_min):
        at = float(times[np.argmax(sups > (1 + regrowth) * running_min)])
        raise WrapContaminationError(f"sup norm grows again at t={at:g} (k={k}, R={circumference:g})")
    design = np.column_stack([np.ones_like(times), np.log(times), (times[0] / times) ** 2])
    target = np.log(sups)
    coef, *_ = np.linalg.lstsq(design, target, rcond=None)
    dof = times.size - design.shape[1]
    variance = np.sum((target - design @ coef) ** 2) / dof if dof > 0 else 0.0
    stderr = math.sqrt(variance * np.linalg.inv(design.T @ design)[1, 1])
    logger.debug("decay k=%d R=%g slope=%.4f settling=%.3g", k, circumference, coef[1], coef[2])
    return DecayFit(k, circumference, times.tolist(), sups.tolist(), float(coef[1]), float(coef[0]), stderr,
                    float(coef[2]))

# %% ../../nbs/strichartz/lab.ipynb #6ad15b3c
@dataclass
class StrichartzMeasurement:
    """L^4-in-time, sup-in-space norm of the free flow of unit block-k data over [0, T]."""
    k: int
    horizon: float
    circumference: float
    value: float  # Finest sampling
    coarse: float  # Every other sample
    samples: int
    inconclusive: bool  # Coarse and fine quadratures differ by more than the tolerance

def _time_samples(
    k: int,
    horizon: float,
    samples: Optional[int]
) -> int:
    if samples is not None:
        return samples
    # Sup norm varies on the time scale 2^(-k/2)
    n = int(math.ceil(8 * horizon * 2.0**(k / 2))) + 1
    return max(65, n + (n + 1) % 2)

def measure_strichartz(
    k: int,  # Dyadic block index
    horizon: float,  # Time interval length T >= 0
    circumference: float,  # Period R
    samples: Optional[int] = None,  # Odd number of time samples (default from the block's time scale)
    oversample: int = 1,  # Sup-norm oversampling
    tolerance: float = 0.02  # Allowed relative gap between full and half sampling
) -> StrichartzMeasurement:  # (trapezoid of sup_x |u|^4 dt)^(1/4) with a self-convergence flag
    """Strichartz norm of unit-L^2 block-k data by time quadrature."""
    if horizon < 0:
        raise RejectedInputError(f"horizon must be nonnegative, got {horizon}")
    if horizon == 0:
        return StrichartzMeasurement(k, 0.0, circumference, 0.0, 0.0, 1, False)
    n = _time_samples(k, horizon, samples)
    if n < 3 or n % 2 == 0:
        raise RejectedInputError(f"need an odd number of at least 3 samples, got {n}")
    grid = grid_for_block(k, circumference)
    u0 = block_packet(grid, k)
    times = np.linspace(0.0, horizon, n)
    quartic = _sup_series(u0, times, oversample) ** 4
    fine = float(trapezoid(quartic, times) ** 0.25)
    coarse = float(trapezoid(quartic[::2], times[::2]) ** 0.25)
    gap = abs(fine - coarse) / fine if fine > 0 else 0.0
    logger.debug("strichartz k=%d T=%g R=%g value=%.6g gap=%.2e", k, horizon, circumference, fine, gap)
    return StrichartzMeasurement(k, float(horizon), circumference, fine, coarse, n, gap > tolerance)

@dataclass
class LossFit:
    """Growth exponent of the Strichartz norm in 1 + T/R at fixed block."""
    k: int
    circumference: float
    horizons: List[float]
    values: List[float]
    exponent: float
    euclidean: float  # Intercept of value^4 against T: the part collected before the packet fills the torus
    rate: float  # Slope of value^4 against T: time average of sup|u|^4 after wrap-around
    inconclusive: bool

def measure_periodic_loss(
    k: int,  # Dyadic block index
    circumference: float,  # Period R
    multiples: Sequence[float] = (64, 256, 1024),  # Horizons T as multiples of R
    oversample: int = 1  # Sup-norm oversampling
) -> LossFit:  # Fitted exponent of the norm against 1 + T/R, about 1/4
    """Periodic loss: Strichartz norm growth once packets wrap around the torus.

    value^4 grows like euclidean + rate T, so the exponent only reaches 1/4 once rate T dominates the
    Euclidean part; the default horizons sit well past that point for R of a few wavelengths."""
    if len(multiples) < 2 or min(multiples) <= 0:
        raise RejectedInputError(f"need at least 2 positive horizon multiples, got {list(multiples)}")
    runs = [measure_strichartz(k, m * circumference, circumference, oversample=oversample) for m in multiples]
    ratios = np.array([1 + m for m in multiples], dtype=float)
    values = np.array([r.value for r in runs])
    exponent = float(stats.linregress(np.log(ratios), np.log(values)).slope)
    quartic = stats.linregress([r.horizon for r in runs], values**4)
    logger.debug("periodic loss k=%d R=%g exponent=%.4f rate=%.3g", k, circumference, exponent, quartic.slope)
    return LossFit(k, circumference, [r.horizon for r in runs], values.tolist(), exponent,
                   float(quartic.intercept), float(quartic.slope), any(r.inconclusive for r in runs))

# %% ../../nbs/strichartz/lab.ipynb #0c8e57f2
@dataclass
class WrapMeasurement:
    """Predicted and measured time for a packet to cross half the torus."""
    k: int
    circumference: float
    predicted: float  # 2^(k/2) R
    measured: float  # nan when the crossing was not observed
    speed: float  # Measured centroid speed
    inconclusive: bool  # Packet too dispersed to track, or no crossing

    @property
    def relative_error(
        self
    ) -> float:
        return abs(self.measured - self.predicted) / self.predicted

def _centroid(
    u: Field  # Packet
) -> tuple:  # (angle of the circular mean of |u|^2, resultant length in [0, 1])
    weight = np.abs(u.values) ** 2
    resultant = np.sum(weight * np.exp(2j * np.pi * u.grid.points / u.grid.circumference)) / np.sum(weight)
    return float(np.angle(resultant)), float(np.abs(resultant))

def wrap_time(
    k: int,  # Dyadic block index
    circumference: float,  # Period R
    samples: int = 97,  # Time samples over 1.5 predicted wrap times
    relative_width: float = 0.125,  # Frequency width of the tracked packet
    min_resultant: float = 0.5  # Smaller circular-mean resultants count as dispersed
) -> WrapMeasurement:  # Predicted and measured wrap times
    """Track the circular-mean centroid of a right-moving block-k packet until it has moved R/2."""
    grid = grid_for_block(k, circumference)
    predicted = 2.0**(k / 2) * circumference
    u0 = block_packet(grid, k, one_sided=True, relative_width=relative_width)
    times = np.linspace(0.0, 1.5 * predicted, samples)
    tracks = [_centroid(free_evolve(u0, t)) for t in times]
    angles = np.unwrap([a for a, _ in tracks])
    shift = (angles - angles[0]) * circumference / (2 * np.pi)
    crossed = np.nonzero(shift >= circumference / 2)[0]
    if crossed.size == 0:
        return WrapMeasurement(k, circumference, predicted, float('nan'), float('nan'), True)
    i = int(crossed[0])
    # Linear interpolation between the bracketing samples
    t0, t1, s0, s1 = times[i - 1], times[i], shift[i - 1], shift[i]
    measured = float(t0 + (circumference / 2 - s0) * (t1 - t0) / (s1 - s0))
    dispersed = min(r for _, r in tracks[:i + 1]) < min_resultant
    logger.debug("wrap k=%d R=%g predicted=%.6g measured=%.6g", k, circumference, predicted, measured)
    return WrapMeasurement(k, circumference, predicted, measured, circumference / 2 / measured, dispersed)

def periodic_loss_factor(
    k: int,  # Dyadic block index
    horizon: float,  # Time interval length T
    circumference: float  # Period R
) -> float:  # 2^(3k/8) (1 + 2^(-k/2) T / R)^(1/4)
    """Block-level bound of the periodic Strichartz norm."""
    return 2.0**(3 * k / 8) * (1 + 2.0**(-k / 2) * horizon / circumference) ** 0.25

# %% ../../nbs/strichartz/lab.ipynb #93e1d0a4
@dataclass
class DispersionReport:
    """One row of the strichartz experiment."""
    k: int
    horizon: float
    circumference: float
    strichartz_norm: float
    decay_slope: float  # nan when the decay window does not fit before wrap-around
    predicted_wrap: float
    measured_wrap: float
    loss_factor: float  # periodic_loss_factor(k, T, R)
    inconclusive: bool

def dispersion_report(
    k: int,  # Dyadic block index
    horizon: float,  # Strichartz interval length T
    circumference: float,  # Period R
    oversample: int = 1,  # Sup-norm oversampling
    measure_wrap: bool = True  # Also track the packet around the torus
) -> DispersionReport:  # Measurements of one block
    """Strichartz norm, decay slope and wrap time of block k."""
    norm = measure_strichartz(k, horizon, circumference, oversample=oversample)
    try:
        slope = measure_decay(k, circumference, oversample=oversample).slope
    except RejectedInputError as e:
        logger.info("decay window skipped k=%d R=%g: %s", k, circumference, e)
        slope = float('nan')
    wrap = wrap_time(k, circumference) if measure_wrap else None
    return DispersionReport(
        k=k, horizon=float(horizon), circumference=float(circumference), strichartz_norm=norm.value,
        decay_slope=slope, predicted_wrap=2.0**(k / 2) * circumference,
        measured_wrap=wrap.measured if wrap else float('nan'),
        loss_factor=periodic_loss_factor(k, horizon, circumference),
        inconclusive=norm.inconclusive or bool(wrap and wrap.inconclusive))
