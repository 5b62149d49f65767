"""Error reports, norms, convergence fits, and amplification probes."""

import numpy as np
import pytest

from fracgls import (CglsParams, ComplexField, GridSpec, Quantity, TimeGrid,
                     amplification_factor, amplification_sweep,
                     conservation_drift, convergence_order, discrete_l2_norm,
                     error_report, probe_amplification,
                     sample_initial_condition, sample_potential,
                     stencil_coefficients, tsfs_solve)


def _grid4() -> GridSpec:
    return GridSpec(a=0.0, b=1.0, m=4)


class TestErrorReport:
    def test_identical_fields_vanish(self, example_grid, example_params):
        psi = sample_initial_condition(example_params, example_grid)
        report = error_report(psi, psi, Quantity.ABS_SQUARED, example_grid)
        assert report.l2 == 0.0
        assert report.linf == 0.0
        assert np.array_equal(report.pointwise.values, np.zeros(50))

    def test_three_four_arithmetic(self):
        # Differences {3, 4} give linf = 4 and mean square 12.5; the
        # minimal grid holds four nodes, so the pair is laid out twice,
        # which leaves both norms unchanged.
        grid = _grid4()
        a = ComplexField([3.0, 4.0, 3.0, 4.0], time=0.5)
        b = ComplexField(np.zeros(4))
        report = error_report(a, b, Quantity.REAL_PART, grid, alpha=1.5)
        assert report.linf == 4.0
        assert report.l2 == pytest.approx(np.sqrt(12.5), rel=1e-15)
        assert report.t == 0.5
        assert report.alpha == 1.5
        assert report.quantity is Quantity.REAL_PART

    def test_symmetry(self, rng):
        grid = GridSpec(a=-1.0, b=1.0, m=16)
        a = ComplexField(rng.standard_normal(16) + 1j * rng.standard_normal(16))
        b = ComplexField(rng.standard_normal(16) + 1j * rng.standard_normal(16))
        for quantity in Quantity:
            ab = error_report(a, b, quantity, grid)
            ba = error_report(b, a, quantity, grid)
            assert ab.l2 == ba.l2
            assert ab.linf == ba.linf
            assert np.array_equal(ab.pointwise.values, ba.pointwise.values)

    def test_triangle_and_l2_bound(self, rng):
        grid = GridSpec(a=-1.0, b=1.0, m=16)
        fields = [ComplexField(rng.standard_normal(16)
                               + 1j * rng.standard_normal(16))
                  for _ in range(3)]
        a, b, c = fields
        ac = error_report(a, c, Quantity.REAL_PART, grid)
        ab = error_report(a, b, Quantity.REAL_PART, grid)
        bc = error_report(b, c, Quantity.REAL_PART, grid)
        assert ac.linf <= ab.linf + bc.linf + 1e-14
        for report in (ac, ab, bc):
            assert report.l2 <= report.linf + 1e-15

    def test_length_mismatch(self, example_grid):
        a = ComplexField(np.ones(50))
        b = ComplexField(np.ones(10))
        with pytest.raises(ValueError):
            error_report(a, b, Quantity.REAL_PART, example_grid)


class TestNormsAndDrift:
    def test_constant_modulus_norm(self, example_grid, example_params):
        # For a constant-modulus field the weighted norm collapses to
        # sqrt(b - a) |psi|.
        psi = sample_initial_condition(example_params, example_grid)
        expected = np.sqrt(10.0) * np.abs(psi.values[0])
        assert discrete_l2_norm(psi, example_grid) == pytest.approx(
            expected, rel=1e-14)

    def test_drift_zero_for_constant_trajectory(self, example_grid,
                                                example_params):
        psi = sample_initial_condition(example_params, example_grid)
        drift = conservation_drift([psi, psi, psi], example_grid)
        assert np.array_equal(drift, np.zeros(3))

    def test_drift_detects_scaling(self, example_grid, example_params):
        psi = sample_initial_condition(example_params, example_grid)
        grown = ComplexField(1.1 * psi.values, time=0.1)
        drift = conservation_drift([psi, grown], example_grid)
        assert drift[1] == pytest.approx(0.1, rel=1e-12)

    def test_eta_zero_trajectory_drift(self, example_grid):
        params = CglsParams(eta=0.0, beta=1.0, eps=1.0, alpha=1.5)
        trajectory = tsfs_solve(params, example_grid,
                                TimeGrid(tau=0.1, n_steps=10))
        drift = conservation_drift(trajectory, example_grid)
        assert np.max(np.abs(drift)) <= 1e-12

    def test_zero_initial_norm_rejected(self, example_grid):
        zero = ComplexField(np.zeros(50))
        with pytest.raises(ValueError):
            conservation_drift([zero, zero], example_grid)
        with pytest.raises(ValueError):
            conservation_drift([], example_grid)


class TestConvergenceOrder:
    def test_exact_powers(self):
        steps = [0.4, 0.2, 0.1]
        for power in (1.0, 2.0):
            pairs = [(h, 3.7 * h ** power) for h in steps]
            assert convergence_order(pairs) == pytest.approx(power,
                                                             abs=1e-10)

    def test_degenerate_inputs(self):
        with pytest.raises(ValueError):
            convergence_order([(0.1, 1.0)])
        with pytest.raises(ValueError):
            convergence_order([(0.1, 1.0), (0.05, 0.0)])
        with pytest.raises(ValueError):
            convergence_order([(0.1, 1.0), (-0.05, 0.5)])


class TestAmplification:
    def test_eta_zero_unit_modulus_random_draws(self, rng):
        # With eta = 0 the numerator and denominator are conjugates, so
        # |xi| = 1 for any omega, tau, V, psi_max.
        stencil = stencil_coefficients(1.5, 49)
        for _ in range(20):
            params = CglsParams(eta=0.0,
                                beta=float(rng.uniform(0.5, 2.0)),
                                eps=float(rng.uniform(0.1, 1.0)),
                                alpha=1.5)
            xi = amplification_factor(
                params, stencil, h=float(rng.uniform(0.05, 0.5)),
                tau=float(rng.uniform(0.01, 1.0)),
                omega=float(rng.uniform(0.1, 10.0)),
                v_frozen=float(rng.uniform(0.0, 2.0)),
                psi_max=float(rng.uniform(0.0, 2.0)))
            assert abs(xi) == pytest.approx(1.0, abs=1e-12)

    def test_contraction_when_potential_balanced(self, example_params):
        stencil = stencil_coefficients(1.5, 49)
        xi = amplification_factor(example_params, stencil, h=0.2, tau=0.1,
                                  omega=np.pi / 0.4, v_frozen=0.9,
                                  psi_max=0.9)
        assert abs(xi) < 1.0

    def test_small_omega_limit(self, example_params):
        # S(omega) -> 0 as omega -> 0, so with the potential balanced the
        # factor approaches 1 from inside the disk.
        stencil = stencil_coefficients(1.5, 10_000)
        xi = amplification_factor(example_params, stencil, h=0.2, tau=0.1,
                                  omega=1e-6, v_frozen=0.9, psi_max=0.9)
        assert abs(xi - 1.0) < 1e-2

    def test_probe_carries_inputs(self, example_params):
        stencil = stencil_coefficients(1.5, 49)
        probe = probe_amplification(example_params, stencil, h=0.2, tau=0.1,
                                    omega=2.0, v_frozen=0.9, psi_max=0.8)
        assert probe.omega == 2.0
        assert probe.v_frozen == 0.9
        assert probe.psi_max == 0.8
        assert probe.r == pytest.approx(0.1 / (2.0 * 0.2 ** 1.5), rel=1e-15)
        assert probe.xi == amplification_factor(
            example_params, stencil, 0.2, 0.1, 2.0, 0.9, 0.8)

    def test_sweep_benchmark_regime(self, example_grid, example_params):
        stencil = stencil_coefficients(1.5, 49)
        v_max = float(np.max(sample_potential(example_params,
                                              example_grid).values))
        worst = amplification_sweep(example_params, stencil, h=0.2, tau=0.1,
                                    omega_count=256, v_frozen=v_max,
                                    psi_max=v_max)
        assert worst <= 1.0 + 1e-12

    def test_sweep_reportable_exceedance(self):
        # Synthetic regime with the frozen potential far above the frozen
        # modulus and a large step: the sweep may exceed one and the value
        # is reported rather than clamped.
        params = CglsParams(eta=1.0, beta=1.0, eps=0.1, alpha=1.5)
        stencil = stencil_coefficients(1.5, 49)
        worst = amplification_sweep(params, stencil, h=0.2, tau=10.0,
                                    omega_count=64, v_frozen=5.0,
                                    psi_max=0.0)
        assert worst > 1.0

    def test_validation(self, example_params):
        stencil = stencil_coefficients(1.5, 49)
        mismatched = stencil_coefficients(1.75, 49)
        with pytest.raises(ValueError):
            amplification_factor(example_params, mismatched, h=0.2, tau=0.1,
                                 omega=1.0, v_frozen=0.0, psi_max=0.0)
        with pytest.raises(ValueError):
            amplification_factor(example_params, stencil, h=0.0, tau=0.1,
                                 omega=1.0, v_frozen=0.0, psi_max=0.0)
        with pytest.raises(ValueError):
            amplification_factor(example_params, stencil, h=0.2, tau=0.0,
                                 omega=1.0, v_frozen=0.0, psi_max=0.0)
        with pytest.raises(ValueError):
            amplification_factor(example_params, stencil, h=0.2, tau=0.1,
                                 omega=1.0, v_frozen=0.0, psi_max=-1.0)
        with pytest.raises(ValueError):
            amplification_sweep(example_params, stencil, h=0.2, tau=0.1,
                                omega_count=1, v_frozen=0.0, psi_max=0.0)
