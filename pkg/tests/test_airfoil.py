import numpy as np
import pytest

from cauchykit import (DomainError, EndpointError, FlowConfig, SheetDensity,
                       chebyshev3_rule, chebyshev4_rule, circulation,
                       far_field_circulation, finite_hilbert_inverse,
                       finite_hilbert_transform, flat_plate_complex_velocity,
                       leading_edge_suction, leading_edge_weight, lift,
                       normal_force, pressure, pressure_jump,
                       sheet_velocity_field, surface_velocities)
from cauchykit.geometry import panels_from_breakpoints

from oracles import gl_panels


@pytest.fixture(scope="module")
def cfg():
    return FlowConfig(1.0, np.pi / 6.0, 1.0)


def test_flow_config_validation():
    with pytest.raises(DomainError):
        FlowConfig(0.0, 0.1)
    with pytest.raises(DomainError):
        FlowConfig(1.0, 0.1, -1.0)
    with pytest.raises(DomainError):
        FlowConfig(1.0, 1.7)


def test_chebyshev_rules_integrate_weights():
    x4, w4 = chebyshev4_rule(64)
    assert w4.sum() == pytest.approx(np.pi, abs=1e-12)
    # int sqrt((1-x)/(1+x)) x dx = -pi/2
    assert np.sum(w4 * x4) == pytest.approx(-np.pi / 2.0, abs=1e-12)
    x3, w3 = chebyshev3_rule(64)
    assert w3.sum() == pytest.approx(np.pi, abs=1e-12)
    assert np.sum(w3 * x3) == pytest.approx(np.pi / 2.0, abs=1e-12)


class TestFiniteHilbertTransform:
    def test_flat_plate_density_gives_constant_downwash(self):
        amp = 0.5
        gamma = SheetDensity(weight_coef=lambda x: 2.0 * amp
                             * np.ones_like(np.asarray(x, dtype=float)))
        x = np.linspace(-0.95, 0.95, 21)
        v = finite_hilbert_transform(gamma, x)
        assert np.max(np.abs(v + amp)) < 1e-13

    def test_zero_density(self):
        gamma = SheetDensity(weight_coef=lambda x: np.zeros_like(
            np.asarray(x, dtype=float)))
        assert np.max(np.abs(finite_hilbert_transform(
            gamma, np.array([0.0, 0.5])))) == 0.0

    def test_semicircle_density(self):
        # gamma = sqrt(1-t^2) = sqrt((1-t)/(1+t)) (1+t):
        # P.V. int sqrt(1-t^2)/(t-x) dt = -pi x, so v(x) = -x/2
        gamma = SheetDensity(weight_coef=lambda x: 1.0 + np.asarray(x))
        x = np.linspace(-0.9, 0.9, 19)
        v = finite_hilbert_transform(gamma, x)
        assert np.max(np.abs(v + x / 2.0)) < 1e-12

    def test_smooth_part_contributes(self):
        # pure smooth density psi = 1: P.V. int dt/(t-x) = log((1-x)/(1+x))
        gamma = SheetDensity(smooth=lambda x: np.ones_like(
            np.asarray(x, dtype=float)))
        x = np.array([0.3, -0.4])
        v = finite_hilbert_transform(gamma, x)
        expect = np.log((1.0 - x) / (1.0 + x)) / (2.0 * np.pi)
        assert np.max(np.abs(v - expect)) < 1e-10

    def test_endpoint_targets_rejected(self):
        gamma = SheetDensity(weight_coef=lambda x: np.ones_like(
            np.asarray(x, dtype=float)))
        with pytest.raises(EndpointError):
            finite_hilbert_transform(gamma, np.array([1.0]))


class TestFiniteHilbertInverse:
    def test_constant_downwash_recovers_plate_density(self):
        amp = 0.5
        dens = finite_hilbert_inverse(
            lambda x: -amp * np.ones_like(np.asarray(x, dtype=float)))
        x = np.linspace(-0.99, 0.99, 30)
        assert np.max(np.abs(dens(x) - 2.0 * amp * leading_edge_weight(x))) \
            < 1e-12

    def test_zero_downwash(self):
        dens = finite_hilbert_inverse(
            lambda x: np.zeros_like(np.asarray(x, dtype=float)))
        assert np.max(np.abs(dens(np.linspace(-0.9, 0.9, 10)))) == 0.0

    def test_round_trip_linear_downwash(self):
        vfun = lambda x: -1.0 + 0.3 * np.asarray(x, dtype=float)
        dens = finite_hilbert_inverse(vfun, n=128)
        x = np.linspace(-0.95, 0.95, 21)
        back = finite_hilbert_transform(dens, x, n=128)
        assert np.max(np.abs(back - vfun(x))) < 1e-8

    def test_kutta_condition(self):
        dens = finite_hilbert_inverse(
            lambda x: -1.0 + 0.3 * np.asarray(x, dtype=float))
        assert dens(1.0) == 0.0
        eps = 10.0 ** (-np.arange(2, 6, dtype=float))
        slope = np.polyfit(np.log(eps), np.log(np.abs(dens(1.0 - eps))), 1)[0]
        assert slope == pytest.approx(0.5, abs=0.02)

    def test_leading_edge_exponent(self):
        dens = finite_hilbert_inverse(
            lambda x: -1.0 + 0.3 * np.asarray(x, dtype=float))
        eps = 10.0 ** (-np.arange(2, 6, dtype=float))
        slope = np.polyfit(np.log(eps), np.log(np.abs(dens(-1.0 + eps))), 1)[0]
        assert slope == pytest.approx(-0.5, abs=0.02)


class TestPlateVelocity:
    def test_zero_incidence(self):
        quiet = FlowConfig(1.0, 0.0)
        z = np.array([2j, 3.0 + 1.0j, -0.5 - 2.0j])
        assert np.max(np.abs(flat_plate_complex_velocity(quiet, z))) == 0.0

    def test_far_field_decay(self, cfg):
        z = 1e3 * np.exp(1j * np.linspace(0.1, 6.0, 7))
        w = flat_plate_complex_velocity(cfg, z)
        bound = 1.1 * cfg.speed * np.sin(cfg.alpha) / 1e3
        assert np.max(np.abs(w)) < bound

    def test_against_independent_quadrature_at_z2(self, cfg):
        # oracle: substitute t = cos(theta) and integrate the smooth
        # integrand (1 + cos theta)/(cos theta - z) with a dense GL rule
        z = 2.0 + 0.0j
        th, w = gl_panels(0.0, np.pi, n_panels=160, order=16)
        base = np.sum((1.0 + np.cos(th)) / (np.cos(th) - z) * w)
        v_down = -cfg.speed * np.sin(cfg.alpha)
        expect = -np.sqrt((z - 1.0) / (z + 1.0)) / (1j * np.pi) * v_down * base
        got = flat_plate_complex_velocity(cfg, z)
        assert abs(got - expect) < 1e-12

    def test_closed_form_everywhere(self, cfg):
        amp = cfg.speed * np.sin(cfg.alpha)
        for z in (2j, 0.5 + 0.2j, -3.0 + 0.1j, 10.0 - 5.0j):
            expect = 1j * amp * (1.0 - np.sqrt((z - 1.0) / (z + 1.0)))
            assert abs(flat_plate_complex_velocity(cfg, z) - expect) < 1e-13

    def test_on_plate_rejected(self, cfg):
        with pytest.raises(DomainError):
            flat_plate_complex_velocity(cfg, 0.5 + 0.0j)

    def test_plemelj_consistency_with_surface(self, cfg):
        # one-sided limits onto the chord reproduce the closed-form surface
        # velocities: w(x + i 0+) = u+ - i v+
        for x in (-0.5, 0.0, 0.3, 0.9):
            w_up = flat_plate_complex_velocity(cfg, x + 1e-9j)
            u, v = surface_velocities(cfg, x, "+")
            assert abs(w_up - (u - 1j * v)) < 1e-7
            w_dn = flat_plate_complex_velocity(cfg, x - 1e-9j)
            u, v = surface_velocities(cfg, x, "-")
            assert abs(w_dn - (u - 1j * v)) < 1e-7


class TestSurfaceQuantities:
    def test_midchord_values(self, cfg):
        u, v = surface_velocities(cfg, 0.0, "+")
        assert u == pytest.approx(0.5) and v == pytest.approx(-0.5)
        u, v = surface_velocities(cfg, 0.0, "-")
        assert u == pytest.approx(-0.5) and v == pytest.approx(-0.5)

    def test_trailing_edge_regular(self, cfg):
        u, v = surface_velocities(cfg, 1.0, "+")
        assert u == 0.0

    def test_zero_incidence(self):
        u, v = surface_velocities(FlowConfig(1.0, 0.0), 0.3, "+")
        assert u == 0.0 and v == 0.0

    def test_leading_edge_rejected(self, cfg):
        with pytest.raises(DomainError):
            surface_velocities(cfg, -1.0, "+")
        with pytest.raises(DomainError):
            pressure(cfg, -1.0, "+")

    def test_pressure_values(self, cfg):
        assert pressure(cfg, 0.0, "+") == pytest.approx(
            0.5 - (np.cos(np.pi / 6.0) + 0.5) ** 2 / 2.0)
        quiet = FlowConfig(1.0, 0.0)
        assert pressure(quiet, 0.2, "+") == 0.0
        assert pressure(quiet, 0.2, "-") == 0.0

    def test_pressure_jump_integrates_to_normal_force(self, cfg):
        _, l_mag = lift(cfg)
        n_f = normal_force(cfg)
        assert n_f == pytest.approx(l_mag * np.cos(cfg.alpha), rel=1e-12)
        assert leading_edge_suction(cfg) == pytest.approx(
            l_mag * np.sin(cfg.alpha), rel=1e-10)


class TestCirculationAndLift:
    def test_flat_plate_circulation(self, cfg):
        assert circulation(cfg) == pytest.approx(np.pi, rel=1e-12)
        assert circulation(FlowConfig(1.0, 0.0)) == 0.0
        assert circulation(FlowConfig(2.0, 0.1)) == pytest.approx(
            4.0 * np.pi * np.sin(0.1), rel=1e-12)

    def test_three_circulation_routes_agree(self, cfg):
        gamma_surface = circulation(cfg)
        dens = finite_hilbert_inverse(
            lambda x: -cfg.speed * np.sin(cfg.alpha)
            * np.ones_like(np.asarray(x, dtype=float)))
        gamma_sheet = dens.total_strength()
        gamma_far = far_field_circulation(cfg)
        assert abs(gamma_surface - gamma_sheet) < 1e-8
        assert abs(gamma_surface - gamma_far) < 1e-8

    def test_lift_magnitude_and_direction(self, cfg):
        l_vec, l_mag = lift(cfg)
        assert l_mag == pytest.approx(np.pi, rel=1e-12)
        u_vec = np.array([np.cos(cfg.alpha), np.sin(cfg.alpha), 0.0])
        assert abs(np.dot(l_vec, u_vec)) / (l_mag * cfg.speed) < 1e-12
        # positive incidence lifts upward
        assert l_vec[1] > 0

    def test_lift_scaling(self):
        _, l_mag = lift(FlowConfig(3.0, 0.2, 2.0))
        assert l_mag == pytest.approx(36.0 * np.pi * np.sin(0.2), rel=1e-12)
        l_vec, l_mag = lift(FlowConfig(1.0, 0.0))
        assert l_mag == 0.0 and np.all(l_vec == 0.0)


class TestSheetVelocityField:
    @staticmethod
    def bump_grid(sigma):
        x_breaks = np.unique(np.concatenate([
            [-1.0], -10.0 ** np.arange(-0.5, -6.5, -0.5), [0.0],
            10.0 ** np.arange(-6.0, -0.4, 0.5), [1.0]]))
        return panels_from_breakpoints((x_breaks + 1.0) / 2.0, order=16)

    def test_point_vortex_far_field(self):
        sigma = 1e-3
        strength = 2.5
        bump = lambda x: strength * np.exp(-0.5 * (np.asarray(x) / sigma) ** 2) \
            / (sigma * np.sqrt(2.0 * np.pi))
        gamma = SheetDensity(smooth=bump)
        z = 0.1 * np.exp(1j * np.array([0.7, 1.7, 2.5, 4.2]))
        w = sheet_velocity_field(None, gamma, z, grid=self.bump_grid(sigma))
        expect = 1j * strength / (2.0 * np.pi * z)
        assert np.max(np.abs(w - expect) / np.abs(expect)) < 1e-3

    def test_point_source_radial_field(self):
        sigma = 1e-3
        strength = 1.7
        bump = lambda x: strength * np.exp(-0.5 * (np.asarray(x) / sigma) ** 2) \
            / (sigma * np.sqrt(2.0 * np.pi))
        q = SheetDensity(smooth=bump)
        r, angle = 0.1, 0.7
        zpt = r * np.exp(1j * angle)
        wbar = np.conj(sheet_velocity_field(q, None, zpt,
                                            grid=self.bump_grid(sigma)))
        radial = np.real(wbar * np.exp(-1j * angle))
        tangential = np.imag(wbar * np.exp(-1j * angle))
        assert radial == pytest.approx(strength / (2.0 * np.pi * r), rel=1e-3)
        assert abs(tangential) < 1e-3 * abs(radial)

    def test_near_sheet_warning(self):
        gamma = SheetDensity(smooth=lambda x: np.ones_like(
            np.asarray(x, dtype=float)))
        with pytest.warns(RuntimeWarning):
            sheet_velocity_field(None, gamma, 0.5 + 1e-3j)

    def test_zero_densities(self):
        assert sheet_velocity_field(None, None, 1.0 + 1.0j) == 0.0

    def test_flat_plate_sheet_matches_plate_velocity(self, cfg):
        # the inverted downwash density must induce the plate's own
        # perturbation field through the vortex-sheet representation
        amp = cfg.speed * np.sin(cfg.alpha)
        dens = finite_hilbert_inverse(
            lambda x: -amp * np.ones_like(np.asarray(x, dtype=float)))
        for z in (2j, 1.5 + 1.0j, -0.7 + 0.4j):
            w_sheet = sheet_velocity_field(None, dens, z)
            w_plate = flat_plate_complex_velocity(cfg, z)
            assert abs(w_sheet - w_plate) < 1e-10
