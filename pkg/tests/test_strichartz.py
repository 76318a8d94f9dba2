import math

import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail

from cjm_water_wave_lab.spectral.grid import PeriodicGrid
from cjm_water_wave_lab.spectral.littlewood_paley import sobolev_norm, sup_norm
from cjm_water_wave_lab.strichartz.lab import (_sup_series, block_packet, dispersion_report, free_evolve,
                                               grid_for_block, measure_decay, measure_periodic_loss,
                                               measure_strichartz, periodic_loss_factor, wrap_time)

# Packets and the free flow

def test_grid_for_block():
    test_eq(grid_for_block(0, 40.0).modes, 64)
    test_eq(grid_for_block(2, 40.0).modes, 256)
    test_eq(grid_for_block(-3, 2.0).modes, 16)
    grid = grid_for_block(3, 100.0)
    assert grid.xi_max >= 1.5 * 2**4

def test_block_packet():
    grid = grid_for_block(1, 40.0)
    packet = block_packet(grid, 1)
    test_close(sobolev_norm(packet, 0), 1.0, eps=1e-12)
    test_eq(packet.is_real, True)
    support = np.abs(grid.wavenumbers[np.abs(packet.spectrum) > 0])
    assert support.min() >= 2**0 - 1e-12 and support.max() <= 2**2 + 1e-12
    right = block_packet(grid, 1, one_sided=True, relative_width=0.125)
    test_eq(right.is_real, False)
    assert np.all(grid.wavenumbers[np.abs(right.spectrum) > 0] > 0)
    test_fail(lambda: block_packet(PeriodicGrid(16, 2.0), 6), contains="no modes")

def test_flat_block_packet():
    grid = grid_for_block(0, 2000.0)
    packet = block_packet(grid, 0, flat=True)
    test_close(sobolev_norm(packet, 0), 1.0, eps=1e-12)
    xi = np.abs(grid.wavenumbers)
    support = xi[np.abs(packet.spectrum) > 0]
    assert support.min() > 0.5 and support.max() < 2.0
    # Equal stationary-phase amplitude |c| |xi|^(3/4) on the plateau 2^-0.6 <= |xi| <= 2^0.6
    plateau = (xi >= 2**-0.6) & (xi <= 2**0.6)
    level = np.abs(packet.spectrum[plateau]) * xi[plateau] ** 0.75
    test_close(level, np.full(level.shape, level[0]), eps=1e-12 * level[0])
    test_fail(lambda: block_packet(grid, 0, flat=True, edge=0.0), contains="taper width")

def test_block_packet_translation():
    grid = grid_for_block(0, 40.0)
    centered, moved = block_packet(grid, 0), block_packet(grid, 0, center=10.0)
    test_close(moved.roll(-16).values, centered.values, eps=1e-12)

def test_free_flow_is_unitary_and_reversible():
    grid = grid_for_block(0, 40.0)
    packet = block_packet(grid, 0)
    later = free_evolve(packet, 7.5)
    test_close(sobolev_norm(later, 0), 1.0, eps=1e-12)
    test_close(free_evolve(later, -7.5).spectrum, packet.spectrum, eps=1e-13)
    assert free_evolve(packet, 0.0) is packet
    assert sup_norm(later) < sup_norm(packet)

def test_batched_sup_norms_match_single_evolutions():
    grid = grid_for_block(1, 40.0)
    packet = block_packet(grid, 1)
    times = np.linspace(0.0, 30.0, 7)
    for oversample in (1, 2):
        expected = [sup_norm(free_evolve(packet, t), oversample) for t in times]
        test_close(_sup_series(packet, times, oversample, budget=2 * grid.modes), expected, eps=1e-13)

def test_periodic_loss_factor():
    test_eq(periodic_loss_factor(0, 0.0, 40.0), 1.0)
    test_close(periodic_loss_factor(2, 64.0, 64.0), 2**0.75 * 1.5**0.25, eps=1e-14)
    test_close(periodic_loss_factor(0, 3 * 40.0, 40.0), 4**0.25, eps=1e-14)

# Measurements

def test_decay_window_is_checked():
    test_fail(lambda: measure_decay(0, 40.0), contains="quarter of the wrap time")
    test_fail(lambda: measure_decay(0, 2000.0, times=[10.0, 5.0]), contains="increasing")
    test_fail(lambda: measure_decay(0, 2000.0, times=[10.0, 20.0, 40.0]), contains="at least 4")

def test_strichartz_edge_cases():
    zero = measure_strichartz(0, 0.0, 40.0)
    test_eq((zero.value, zero.samples, zero.inconclusive), (0.0, 1, False))
    test_fail(lambda: measure_strichartz(0, -1.0, 40.0), contains="nonnegative")
    test_fail(lambda: measure_strichartz(0, 1.0, 40.0, samples=10), contains="odd")

def test_strichartz_of_short_interval():
    m = measure_strichartz(0, 1.0, 40.0)
    test_eq(m.samples, 65)
    # Over a short interval the norm is close to T^(1/4) sup|u0|
    grid = grid_for_block(0, 40.0)
    test_close(m.value, sup_norm(block_packet(grid, 0)), eps=0.2 * m.value)

def test_dispersion_report_without_decay_window():
    row = dispersion_report(0, 10.0, 40.0, measure_wrap=False)
    assert math.isnan(row.decay_slope) and math.isnan(row.measured_wrap)
    test_eq(row.predicted_wrap, 40.0)
    test_close(row.loss_factor, periodic_loss_factor(0, 10.0, 40.0), eps=1e-15)
    assert row.strichartz_norm > 0

@pytest.mark.slow
def test_dispersive_decay_rate():
    fit = measure_decay(0, 2000.0)
    test_close(fit.slope, -0.5, eps=0.05)
    moved = measure_decay(0, 2000.0, center=500.0)
    test_close(moved.slope, fit.slope, eps=1e-6)

@pytest.mark.slow
def test_decay_rate_is_scale_invariant():
    # (x, t) -> (2^-k x, 2^(-k/2) t) maps block 0 on R to block k on 2^-k R with the same grid size
    base, scaled = measure_decay(0, 2000.0), measure_decay(4, 2000.0 / 16)
    test_eq(grid_for_block(4, 2000.0 / 16).modes, grid_for_block(0, 2000.0).modes)
    test_close(scaled.slope, base.slope, eps=1e-6)

@pytest.mark.slow
def test_wrap_time():
    first, second = wrap_time(0, 64.0), wrap_time(0, 128.0)
    assert first.relative_error <= 0.3 and second.relative_error <= 0.3
    test_close(second.measured / first.measured, 2.0, eps=0.2)

@pytest.mark.slow
def test_periodic_loss_exponent():
    fit = measure_periodic_loss(2, 16.0)
    test_close(fit.exponent, 0.25, eps=0.05)
    assert fit.rate > 0 and fit.euclidean > 0
