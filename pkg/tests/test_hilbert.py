import numpy as np
import pytest

from cauchykit import (ContractError, DomainError, InvalidGridError,
                       PeriodicFunction, RealLineFunction, hilbert_circular,
                       hilbert_circular_complementary,
                       hilbert_circular_complementary_inverse,
                       hilbert_circular_inverse, hilbert_complementary,
                       hilbert_complementary_inverse, hilbert_line,
                       hilbert_line_inverse, normalization_check,
                       parseval_check)


def example3_v():
    return RealLineFunction(lambda x: -1.0 / (x ** 2 + 1.0), decay=2,
                            window=50.0)


def example3_u():
    return RealLineFunction(lambda x: x / (x ** 2 + 1.0), decay=1,
                            window=50.0)


class TestLineTransforms:
    def test_example_pole_pair_forward(self):
        xi = np.linspace(-5.0, 5.0, 41)
        res = hilbert_line(example3_v(), xi)
        assert np.max(np.abs(res.values - xi / (xi ** 2 + 1.0))) < 5e-6
        assert np.all(res.truncation_error >= 0.0)

    def test_example_pole_pair_inverse(self):
        x = np.linspace(-5.0, 5.0, 41)
        res = hilbert_line_inverse(example3_u(), x)
        assert np.max(np.abs(res.values + 1.0 / (x ** 2 + 1.0))) < 5e-6

    def test_zero_input(self):
        z = RealLineFunction(lambda x: np.zeros_like(x), decay=2, window=50.0)
        res = hilbert_line(z, np.array([0.0, 1.0, -3.0]))
        assert np.all(res.values == 0.0)

    def test_insufficient_decay_rejected(self):
        slow = RealLineFunction(lambda x: 1.0 / np.sqrt(1.0 + x ** 2),
                                decay=0.5, window=50.0)
        with pytest.raises(ContractError):
            hilbert_line(slow, np.array([0.0]))

    def test_decay_declaration_checked_against_samples(self):
        wrong = RealLineFunction(lambda x: 1.0 / (1.0 + np.abs(x)), decay=3,
                                 window=50.0)
        with pytest.raises(ContractError):
            hilbert_line(wrong, np.array([0.0]))

    def test_far_target_warning_and_domain_error(self):
        res = hilbert_line(example3_v(), np.array([30.0]))
        assert any("window" in note for note in res.notes)
        with pytest.raises(DomainError):
            hilbert_line(example3_v(), np.array([49.9]))

    def test_oscillatory_input_routes_through_period(self):
        vs = RealLineFunction(np.sin, decay=0, period=2.0 * np.pi)
        xi = np.linspace(-5.0, 5.0, 21)
        res = hilbert_line(vs, xi)
        assert np.max(np.abs(res.values - np.cos(xi))) < 1e-12
        assert "periodic route" in res.notes

    def test_complementary_is_exact_negation(self):
        xi = np.linspace(-4.0, 4.0, 17)
        base = hilbert_line(example3_v(), xi)
        comp = hilbert_complementary(example3_v(), xi)
        assert np.max(np.abs(comp.values + base.values)) == 0.0
        inv = hilbert_line_inverse(example3_u(), xi)
        compinv = hilbert_complementary_inverse(example3_u(), xi)
        assert np.max(np.abs(compinv.values + inv.values)) == 0.0

    def test_complementary_equals_inverse_structurally(self):
        # Hbar = -H = H^-1: the complementary transform and the inverse
        # share one code path and agree exactly at every node
        xi = np.linspace(-4.0, 4.0, 17)
        comp = hilbert_complementary(example3_v(), xi)
        inv = hilbert_line_inverse(example3_v(), xi)
        assert np.max(np.abs(comp.values - inv.values)) == 0.0

    def test_complementary_pair_values(self):
        # V = -1/(x^2+1) maps to U = -x/(x^2+1) under the complementary
        # transform (the lower-half-plane pole mirror of the direct pair)
        xi = np.linspace(-5.0, 5.0, 21)
        res = hilbert_complementary(example3_v(), xi)
        assert np.max(np.abs(res.values + xi / (xi ** 2 + 1.0))) < 5e-6

    def test_round_trip_identity(self):
        v = example3_v()
        u_num = RealLineFunction(lambda x: hilbert_line(v, x).values,
                                 decay=1, window=40.0)
        x = np.linspace(-5.0, 5.0, 41)
        rt = hilbert_line_inverse(u_num, x)
        assert np.max(np.abs(rt.values - v(x))) < 5e-6

    def test_round_trip_quartic(self):
        v = RealLineFunction(lambda x: x / (x ** 4 + 1.0), decay=3,
                             window=50.0)
        u_num = RealLineFunction(lambda x: hilbert_line(v, x).values,
                                 decay=1, window=40.0)
        x = np.linspace(-5.0, 5.0, 41)
        rt = hilbert_line_inverse(u_num, x)
        assert np.max(np.abs(rt.values - v(x))) < 5e-6


class TestCircularTransforms:
    def test_sine_maps_to_cosine(self):
        pf = PeriodicFunction.from_function(np.sin, 512)
        u = hilbert_circular(pf)
        assert np.max(np.abs(u.samples - np.cos(pf.thetas))) < 1e-10

    def test_constant_annihilated(self):
        pf = PeriodicFunction(np.full(64, 2.7))
        u = hilbert_circular(pf)
        assert np.max(np.abs(u.samples)) < 1e-13
        assert u.carried_mean == pytest.approx(2.7)

    def test_third_harmonic(self):
        pf = PeriodicFunction.from_function(lambda t: np.cos(3.0 * t), 512)
        u = hilbert_circular(pf)
        assert np.max(np.abs(u.samples + np.sin(3.0 * pf.thetas))) < 1e-12

    def test_inverse_examples(self):
        uf = PeriodicFunction.from_function(np.cos, 512)
        v = hilbert_circular_inverse(uf)
        assert np.max(np.abs(v.samples - np.sin(uf.thetas))) < 1e-10
        zero = PeriodicFunction(np.zeros(64))
        assert np.max(np.abs(hilbert_circular_inverse(zero).samples)) == 0.0

    def test_round_trip_zero_mean(self):
        pf = PeriodicFunction.from_function(
            lambda t: np.sin(t) + 0.5 * np.sin(2.0 * t), 512)
        rt = hilbert_circular_inverse(hilbert_circular(pf))
        assert np.max(np.abs(rt.samples - pf.samples)) < 1e-10

    def test_skew_reciprocity(self):
        rng = np.random.default_rng(23)
        coeffs = rng.standard_normal(5)
        pf = PeriodicFunction.from_function(
            lambda t: sum(c * np.sin((k + 1) * t)
                          for k, c in enumerate(coeffs)), 256)
        twice = hilbert_circular(hilbert_circular(pf))
        assert np.max(np.abs(twice.samples + pf.samples)) < 1e-9

    def test_mean_handling_in_round_trip(self):
        pf = PeriodicFunction.from_function(lambda t: 1.5 + np.sin(t), 128)
        rt = hilbert_circular_inverse(hilbert_circular(pf))
        # the cotangent kernel annihilates the constant mode; the mean is
        # carried as metadata rather than silently restored
        assert np.max(np.abs(rt.samples - np.sin(pf.thetas))) < 1e-10
        assert hilbert_circular(pf).carried_mean == pytest.approx(1.5)

    def test_complementary_negation(self):
        pf = PeriodicFunction.from_function(np.sin, 512)
        u = hilbert_circular(pf)
        uc = hilbert_circular_complementary(pf)
        assert np.max(np.abs(uc.samples + u.samples)) == 0.0
        assert np.max(np.abs(uc.samples + np.cos(pf.thetas))) < 1e-10
        vi = hilbert_circular_inverse(pf)
        vic = hilbert_circular_complementary_inverse(pf)
        assert np.max(np.abs(vic.samples + vi.samples)) == 0.0

    def test_fourier_mode_table(self):
        for k in range(1, 17):
            n = max(4 * k + 8, 64)
            sin_k = PeriodicFunction.from_function(
                lambda t, kk=k: np.sin(kk * t), n)
            got = hilbert_circular(sin_k)
            assert np.max(np.abs(got.samples - np.cos(k * sin_k.thetas))) \
                < 1e-10
            cos_k = PeriodicFunction.from_function(
                lambda t, kk=k: np.cos(kk * t), n)
            got = hilbert_circular(cos_k)
            assert np.max(np.abs(got.samples + np.sin(k * cos_k.thetas))) \
                < 1e-10

    def test_odd_sample_count_rejected(self):
        with pytest.raises(InvalidGridError):
            PeriodicFunction(np.zeros(63))


class TestNormalization:
    def test_fundamental_mode_is_normalized(self):
        th = -np.pi + 2.0 * np.pi * np.arange(512) / 512
        assert abs(normalization_check(np.exp(1j * th))) < 1e-12

    def test_constant_flags_nonzero(self):
        # a constant density integrates to 2*pi*c: reported, not failed
        val = normalization_check(np.full(128, 1.0 + 0.0j))
        assert val == pytest.approx(2.0 * np.pi)

    def test_second_harmonic(self):
        th = -np.pi + 2.0 * np.pi * np.arange(128) / 128
        assert abs(normalization_check(np.exp(2j * th))) < 1e-12


class TestParseval:
    def test_circle_pair(self):
        th = -np.pi + 2.0 * np.pi * np.arange(512) / 512
        lhs, rhs, gap = parseval_check(PeriodicFunction(np.cos(th)),
                                       PeriodicFunction(np.sin(th)), "circle")
        assert lhs == pytest.approx(np.pi, abs=1e-10)
        assert rhs == pytest.approx(np.pi, abs=1e-10)
        assert gap < 1e-8

    def test_line_pair(self):
        lhs, rhs, gap = parseval_check(example3_u(), example3_v(), "line")
        assert lhs == pytest.approx(np.pi / 2.0, abs=1e-7)
        assert rhs == pytest.approx(np.pi / 2.0, abs=1e-7)
        assert gap < 1e-5

    def test_zero_pair(self):
        z = PeriodicFunction(np.zeros(64))
        lhs, rhs, gap = parseval_check(z, z, "circle")
        assert lhs == rhs == gap == 0.0

    def test_non_square_integrable_rejected(self):
        bad = RealLineFunction(lambda x: 1.0 / (1.0 + np.abs(x)) ** 0.4,
                               decay=0.4, window=50.0)
        ok = example3_v()
        with pytest.raises(ContractError):
            parseval_check(bad, ok, "line")


def test_square_integrability_flag():
    assert example3_v().square_integrable
    assert not RealLineFunction(lambda x: x, decay=0.3).square_integrable
