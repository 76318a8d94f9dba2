import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail

from cjm_water_wave_lab.core.errors import NormalFormConsistencyError, RejectedInputError
from cjm_water_wave_lab.diagnostics.functionals import DiagnosticsSettings, complex_variable
from cjm_water_wave_lab.evolution.initial import SpectralEnvelope, make_initial_data
from cjm_water_wave_lab.evolution.integrator import IntegratorSettings
from cjm_water_wave_lab.evolution.simulate import simulate
from cjm_water_wave_lab.normal_form.bilinear import bilinear_apply
from cjm_water_wave_lab.normal_form.ibp import (IbpConvergence, boundary_term, boundary_term_bounds, duhamel_split,
                                                ibp_convergence,
                                                ibp_identity_residual, reconstruct_quadratic)
from cjm_water_wave_lab.normal_form.split import (cross_formulation_residual, relative_l2, split_nonlinearity)
from cjm_water_wave_lab.normal_form.symbols import (SIGNS, BilinearKernel, phase, quadratic_generators,
                                                    quadratic_symbol)
from cjm_water_wave_lab.spectral.grid import Field, PeriodicGrid

SMALL = PeriodicGrid(64, 40.0)
ENVELOPE = SpectralEnvelope(1.0, 1.0)
LOW = DiagnosticsSettings(s=2.0, rho=1.5)
XI1, XI2 = np.meshgrid(np.linspace(-3, 3, 13), np.linspace(-2.5, 2.5, 11), indexing='ij')

def _state(eps=0.01, seed=0):
    return make_initial_data(SMALL, eps, seed=seed, envelope=ENVELOPE, settings=LOW)

# Symbols

def test_phase_on_degenerate_frequencies():
    xi = np.linspace(-3, 3, 7)
    for mu, nu in SIGNS:
        test_close(phase(mu, nu, xi, np.zeros_like(xi)), (1 - mu) * np.sqrt(np.abs(xi)), eps=1e-15)
    test_close(phase(1, 1, xi, -xi), -2 * np.sqrt(np.abs(xi)), eps=1e-15)
    test_fail(lambda: phase(0, 1, xi, xi), contains="signs")

def test_generators_vanish_on_resonance_set():
    xi = np.linspace(-3, 3, 7)
    for a, b in ((xi, 0 * xi), (0 * xi, xi), (xi, -xi)):
        g1, g2 = quadratic_generators(a, b)
        test_eq(np.count_nonzero(g1) + np.count_nonzero(g2), 0)

def test_generators_are_three_halves_homogeneous():
    g1, g2 = quadratic_generators(XI1, XI2)
    s1, s2 = quadratic_generators(4 * XI1, 4 * XI2)
    test_close(s1, 8 * g1, eps=1e-12)
    test_close(s2, 8 * g2, eps=1e-12)

def test_symbol_symmetry():
    for mu, nu in SIGNS:
        test_close(quadratic_symbol(mu, nu, XI1, XI2), quadratic_symbol(nu, mu, XI2, XI1), eps=1e-15)

# Kernels

def test_normal_form_kernel():
    kernel = BilinearKernel(1, -1, 'normal_form')
    expected = quadratic_symbol(1, -1, 1.0, 2.0) / (1j * phase(1, -1, 1.0, 2.0))
    test_close(kernel(np.array([1.0]), np.array([2.0])), np.array([expected]), eps=1e-14)
    test_eq(complex(kernel(np.array([0.0]), np.array([2.0]))[0]), 0j)
    test_eq(complex(BilinearKernel(1, 1)(np.array([1.0]), np.array([2.0]))[0]), complex(quadratic_symbol(1, 1, 1.0, 2.0)))

def test_kernel_guards():
    with pytest.raises(NormalFormConsistencyError):
        BilinearKernel(1, 1, 'normal_form', guard=10.0)(XI1, XI2)
    test_fail(lambda: BilinearKernel(2, 1), contains="signs")
    test_fail(lambda: BilinearKernel(1, 1, 'cubic'), contains="kind")
    test_fail(lambda: BilinearKernel(1, 1, guard=-1.0), contains="nonnegative")

def test_kernel_matrix_is_read_only():
    table = BilinearKernel(-1, 1, 'normal_form').matrix(SMALL)
    test_eq(table.shape, (64, 64))
    test_eq(table.flags.writeable, False)
    test_eq(complex(table[0, 5]), 0j)
    assert np.all(np.isfinite(table))
    assert BilinearKernel(-1, 1, 'normal_form').matrix(SMALL) is table

# Bilinear multipliers

def test_bilinear_apply_with_unit_kernel():
    x = SMALL.points
    f = Field.from_values(SMALL, np.cos(2 * np.pi * 3 * x / 40))
    g = Field.from_values(SMALL, np.sin(2 * np.pi * 5 * x / 40) + 0.5)
    test_close(bilinear_apply(np.ones((64, 64)), f, g).spectrum, (f * g).spectrum, eps=1e-13)
    test_close(bilinear_apply(lambda a, b: np.ones_like(a), f, g).spectrum, (f * g).spectrum, eps=1e-13)
    test_fail(lambda: bilinear_apply(np.ones((8, 8)), f, g), contains="shape")
    test_fail(lambda: bilinear_apply(BilinearKernel(1, 1, 'normal_form', guard=0.1), f, g), contains="guard 0")
    with pytest.raises(RejectedInputError):
        bilinear_apply(np.ones((64, 64)), f, Field.zeros(PeriodicGrid(32)))

# Split of the nonlinearity

def test_split_identity():
    for seed in range(3):
        split = split_nonlinearity(_state(0.02, seed))
        assert split.identity_residual <= 1e-12
        assert np.linalg.norm(split.n3.values) / np.linalg.norm(split.n2.values) < 0.5

def test_cross_formulation():
    assert cross_formulation_residual(_state(0.02)) <= 1e-10

def test_reconstruct_quadratic():
    state = _state(0.02, 1)
    n2 = split_nonlinearity(state).n2
    assert relative_l2(reconstruct_quadratic(complex_variable(state)), n2) <= 1e-10

def test_n3_is_cubic():
    small, large = split_nonlinearity(_state(0.01)), split_nonlinearity(_state(0.02))
    ratio = np.linalg.norm(large.n3.spectrum) / np.linalg.norm(small.n3.spectrum)
    test_close(ratio, 8.0, eps=0.5)

# Integration by parts in time

def test_boundary_term_is_quadratic():
    q1, q2 = boundary_term(_state(0.01)), boundary_term(_state(0.02))
    test_close(np.linalg.norm(q2.spectrum) / np.linalg.norm(q1.spectrum), 4.0, eps=0.2)

def test_ibp_rejects_short_trajectories():
    state = _state()
    test_fail(lambda: ibp_identity_residual([state]), contains="at least 2")
    test_fail(lambda: ibp_identity_residual([state, state]), contains="increasing")
    test_fail(lambda: ibp_convergence([state.at(t) for t in range(3)]), contains="at least 5")

def test_boundary_term_bounds():
    ratios = boundary_term_bounds(SMALL, samples=2, envelope=ENVELOPE, s=2.0, gamma=1.25, rho=1.5)
    test_eq(sorted(ratios), ["Q-Hgamma", "Q-besov"])
    assert all(st.finite for st in ratios.values())

def test_ibp_convergence_order_threshold():
    test_eq(IbpConvergence([1, 2, 4], [1e-6, 4e-6, 1.6e-5], order=1.9).passes(), False)
    test_eq(IbpConvergence([1, 2, 4], [1e-6, 4e-6, 1.6e-5], order=1.9).passes(2.0, slack=0.2), True)
    test_eq(IbpConvergence([1, 2, 4], [1e-6, 4e-6, 1.6e-5], order=2.0).passes(), True)
    test_eq(IbpConvergence([1, 2, 4], [0.0, 0.0, 0.0], inconclusive=True).passes(), True)

def _trajectory(nonlinear=True):
    settings = IntegratorSettings(nonlinear=nonlinear)
    traj, _ = simulate(_state(0.02), 2.0, 2.0 / 128, settings, LOW, snapshots=32)
    return traj, settings

@pytest.mark.slow
def test_ibp_identity_converges():
    traj, settings = _trajectory()
    test_eq(len(traj.states), 33)
    fit = ibp_convergence(traj, settings=settings)
    assert fit.passes(), fit
    assert fit.residuals[0] <= fit.residuals[-1]

@pytest.mark.slow
def test_ibp_identity_for_free_flow():
    traj, settings = _trajectory(nonlinear=False)
    assert ibp_convergence(traj, settings=settings).passes()

@pytest.mark.slow
def test_duhamel_split():
    traj, settings = _trajectory()
    parts = duhamel_split(traj, settings)
    assert parts.residual < 1e-3
    assert np.linalg.norm(parts.u3.spectrum) < np.linalg.norm(parts.u2.spectrum)
