import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convfourier.convolution import (
    EigenFactor,
    approx_analog_convolve,
    derivative,
    discrete_convolve,
    exp_factor_analog,
    exp_factor_discrete,
    exp_factor_periodic_analog,
    exp_factor_periodic_discrete,
    mixed_convolve,
    periodic_convolve_analog,
    periodic_convolve_discrete,
    scale_time,
    shift,
)
from convfourier.fourier import harmonic_signal, sampled_harmonic
from convfourier.generators import pulse
from convfourier.signals import (
    DiscreteSignal,
    GridMismatchError,
    PeriodicDiscreteSignal,
    PeriodicSampledSignal,
    SampledSignal,
    analog_exponent,
    delta_approx,
    delta_signal,
    discrete_base,
    eval_discrete_exponential,
)

from oracles import (
    conv_brute,
    mixed_conv_brute,
    periodic_conv_brute,
    power_factor_brute,
    riemann_factor_brute,
)

finite_complex = st.complex_numbers(
    max_magnitude=1.0, allow_nan=False, allow_infinity=False
)
signal_values = st.lists(finite_complex, min_size=1, max_size=8)
starts = st.integers(-8, 8)


def rand_values(rng, n):
    return rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)


class TestDiscreteConvolve:
    def test_basic_example(self):
        out = discrete_convolve(DiscreteSignal(0, [1, 2, 3]), DiscreteSignal(0, [1, 1]))
        assert out.start == 0
        assert np.allclose(out.samples, [1, 3, 5, 3], atol=0)

    def test_sign_cancellation(self):
        out = discrete_convolve(DiscreteSignal(0, [1, -1]), DiscreteSignal(0, [1, 1]))
        assert np.allclose(out.samples, [1, 0, -1], atol=0)

    def test_delta_identity_exact(self):
        rng = np.random.default_rng(1)
        f = DiscreteSignal(-3, rand_values(rng, 7))
        out = discrete_convolve(f, delta_signal())
        assert out.start == f.start
        assert np.array_equal(out.samples, f.samples)
        out = discrete_convolve(delta_signal(), f)
        assert np.array_equal(out.samples, f.samples)

    def test_empty_input(self):
        out = discrete_convolve(DiscreteSignal(2, []), DiscreteSignal(-1, [1, 2]))
        assert len(out) == 0
        assert out.start == 1

    def test_start_offsets(self):
        f = DiscreteSignal(-2, [1, 2])
        g = DiscreteSignal(3, [4])
        out = discrete_convolve(f, g)
        assert out.start == 1
        assert np.allclose(out.samples, [4, 8], atol=0)

    @settings(max_examples=100, deadline=None)
    @given(fv=signal_values, fs=starts, gv=signal_values, gs=starts)
    def test_matches_brute_force(self, fv, fs, gv, gs):
        out = discrete_convolve(DiscreteSignal(fs, fv), DiscreteSignal(gs, gv))
        start, want = conv_brute(fv, fs, gv, gs)
        assert out.start == start
        assert np.allclose(out.samples, want, atol=1e-12, rtol=0)

    @settings(max_examples=100, deadline=None)
    @given(fv=signal_values, fs=starts, gv=signal_values, gs=starts)
    def test_commutative(self, fv, fs, gv, gs):
        a = discrete_convolve(DiscreteSignal(fs, fv), DiscreteSignal(gs, gv))
        b = discrete_convolve(DiscreteSignal(gs, gv), DiscreteSignal(fs, fv))
        assert a.start == b.start
        assert np.max(np.abs(a.samples - b.samples)) <= 1e-12

    def test_associative_random(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            f = DiscreteSignal(int(rng.integers(-8, 9)), rand_values(rng, int(rng.integers(1, 17))))
            g = DiscreteSignal(int(rng.integers(-8, 9)), rand_values(rng, int(rng.integers(1, 17))))
            h = DiscreteSignal(int(rng.integers(-8, 9)), rand_values(rng, int(rng.integers(1, 17))))
            a = discrete_convolve(discrete_convolve(f, g), h)
            b = discrete_convolve(f, discrete_convolve(g, h))
            scale = max(1.0, np.abs(a.samples).max())
            assert np.max(np.abs(a.samples - b.samples)) <= 1e-10 * scale


class TestApproxAnalogConvolve:
    def test_pulse_triangle(self):
        # unit pulse of width 1 at ts=0.25: peak of the triangle is 1 at lag 3
        p = SampledSignal(0.25, 0, np.ones(4))
        out = approx_analog_convolve(p, p)
        assert np.allclose(out.samples.real, [0.25, 0.5, 0.75, 1.0, 0.75, 0.5, 0.25], atol=0)
        assert out.samples[3] == 1.0

    def test_delta_approx_identity_exact(self):
        rng = np.random.default_rng(2)
        f = SampledSignal(0.25, -2, rand_values(rng, 5))
        out = approx_analog_convolve(f, delta_approx(0.25))
        assert np.array_equal(out.samples, f.samples)

    def test_empty(self):
        f = SampledSignal(0.5, 0, [])
        g = SampledSignal(0.5, 0, [1, 2])
        assert len(approx_analog_convolve(f, g)) == 0

    def test_ts_mismatch_rejected(self):
        f = SampledSignal(0.5, 0, [1])
        g = SampledSignal(0.25, 0, [1])
        with pytest.raises(GridMismatchError):
            approx_analog_convolve(f, g)

    def test_is_scaled_discrete_convolution(self):
        rng = np.random.default_rng(3)
        f = SampledSignal(0.125, -1, rand_values(rng, 6))
        g = SampledSignal(0.125, 2, rand_values(rng, 4))
        out = approx_analog_convolve(f, g)
        _, want = conv_brute(list(f.samples), f.start, list(g.samples), g.start)
        assert np.allclose(out.samples, 0.125 * np.asarray(want), atol=1e-15)


class TestPeriodicConvolveDiscrete:
    def test_small_example(self):
        out = periodic_convolve_discrete(
            PeriodicDiscreteSignal([1, 2]), PeriodicDiscreteSignal([3, 4])
        )
        assert np.allclose(out.samples, [11, 10], atol=0)

    def test_periodic_delta_identity(self):
        rng = np.random.default_rng(4)
        f = PeriodicDiscreteSignal(rand_values(rng, 5))
        d = np.zeros(5, dtype=complex)
        d[0] = 1
        out = periodic_convolve_discrete(f, PeriodicDiscreteSignal(d))
        assert np.allclose(out.samples, f.samples, atol=1e-15)

    def test_harmonic_orthogonality(self):
        # x_m (*) x_n = N delta(m-n) x_n
        n_samples = 8
        for m in range(n_samples):
            for n in range(n_samples):
                out = periodic_convolve_discrete(
                    harmonic_signal(m, n_samples), harmonic_signal(n, n_samples)
                )
                want = (n_samples if m == n else 0) * harmonic_signal(n, n_samples).samples
                assert np.max(np.abs(out.samples - want)) <= 1e-12 * n_samples

    def test_period_mismatch_rejected(self):
        with pytest.raises(GridMismatchError):
            periodic_convolve_discrete(
                PeriodicDiscreteSignal([1, 2]), PeriodicDiscreteSignal([1, 2, 3])
            )

    def test_matches_brute_force(self):
        rng = np.random.default_rng(5)
        for n in (1, 2, 5, 9):
            f = rand_values(rng, n)
            g = rand_values(rng, n)
            out = periodic_convolve_discrete(
                PeriodicDiscreteSignal(f), PeriodicDiscreteSignal(g)
            )
            assert np.allclose(out.samples, periodic_conv_brute(list(f), list(g)), atol=1e-12)


class TestPeriodicConvolveAnalog:
    def test_delta_identity(self):
        rng = np.random.default_rng(6)
        ts = 0.25
        f = PeriodicSampledSignal(ts, rand_values(rng, 6))
        d = np.zeros(6, dtype=complex)
        d[0] = 1.0 / ts
        out = periodic_convolve_analog(f, PeriodicSampledSignal(ts, d))
        assert np.allclose(out.samples, f.samples, atol=1e-15)

    def test_constants_give_period(self):
        ts = 0.125
        ones = PeriodicSampledSignal(ts, np.ones(16))
        out = periodic_convolve_analog(ones, ones)
        assert np.allclose(out.samples, 16 * ts, atol=1e-15)

    def test_eigenrelation_square_wave(self):
        # circular convolution with a sampled harmonic scales it by its factor
        n_samples, ts = 32, 1.0 / 32.0
        samples = np.where(np.arange(n_samples) < 16, 1.0, -1.0).astype(complex)
        f = PeriodicSampledSignal(ts, samples)
        x1 = sampled_harmonic(1, n_samples, ts)
        out = periodic_convolve_analog(f, x1)
        factor = exp_factor_periodic_analog(f, analog_exponent(2j * math.pi)).value
        assert np.max(np.abs(out.samples - factor * x1.samples)) <= 1e-12 * abs(factor)

    def test_grid_mismatch_rejected(self):
        with pytest.raises(GridMismatchError):
            periodic_convolve_analog(
                PeriodicSampledSignal(0.5, [1, 2]), PeriodicSampledSignal(0.25, [1, 2])
            )
        with pytest.raises(GridMismatchError):
            periodic_convolve_analog(
                PeriodicSampledSignal(0.5, [1, 2]), PeriodicSampledSignal(0.5, [1, 2, 3])
            )


class TestMixedConvolve:
    def test_delta_identity(self):
        rng = np.random.default_rng(8)
        f = PeriodicDiscreteSignal(rand_values(rng, 4))
        out = mixed_convolve(delta_signal(), f)
        assert np.allclose(out.samples, f.samples, atol=0)
        fa = PeriodicSampledSignal(0.25, rand_values(rng, 4))
        out = mixed_convolve(delta_approx(0.25), fa)
        assert np.allclose(out.samples, fa.samples, atol=1e-15)

    def test_small_example(self):
        out = mixed_convolve(DiscreteSignal(0, [1, 1]), PeriodicDiscreteSignal([1, 0]))
        assert np.allclose(out.samples, [1, 1], atol=0)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(9)
        h_vals = rand_values(rng, 7)
        h = DiscreteSignal(-3, h_vals)
        f_vals = rand_values(rng, 5)
        out = mixed_convolve(h, PeriodicDiscreteSignal(f_vals))
        want = mixed_conv_brute(list(h_vals), -3, list(f_vals))
        assert np.allclose(out.samples, want, atol=1e-12)

    def test_mixed_associativity(self):
        # (h * f) (*) g == h * (f (*) g) on random instances
        rng = np.random.default_rng(10)
        ts = 1.0 / 16.0
        for _ in range(50):
            h = SampledSignal(ts, int(rng.integers(-4, 5)), rand_values(rng, int(rng.integers(1, 9))))
            f = PeriodicSampledSignal(ts, rand_values(rng, 12))
            g = PeriodicSampledSignal(ts, rand_values(rng, 12))
            a = periodic_convolve_analog(mixed_convolve(h, f), g)
            b = mixed_convolve(h, periodic_convolve_analog(f, g))
            scale = max(1.0, np.abs(b.samples).max())
            assert np.max(np.abs(a.samples - b.samples)) <= 1e-9 * scale

    def test_type_mismatch_rejected(self):
        with pytest.raises(TypeError):
            mixed_convolve(DiscreteSignal(0, [1]), PeriodicSampledSignal(0.5, [1]))

    def test_ts_mismatch_rejected(self):
        with pytest.raises(GridMismatchError):
            mixed_convolve(SampledSignal(0.5, 0, [1]), PeriodicSampledSignal(0.25, [1]))


class TestExpFactorDiscrete:
    def test_delta_gives_one(self):
        for a in (2, -1, 1j, 0.5 + 0.5j):
            assert exp_factor_discrete(delta_signal(), discrete_base(a)).value == 1 + 0j

    def test_two_tap_half(self):
        factor = exp_factor_discrete(DiscreteSignal(0, [1, 1]), discrete_base(2))
        assert factor.value == pytest.approx(1.5)

    def test_two_tap_cancellation(self):
        factor = exp_factor_discrete(DiscreteSignal(0, [1, 1]), discrete_base(-1))
        assert abs(factor.value) <= 1e-15

    def test_matches_brute_force(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            vals = rand_values(rng, int(rng.integers(1, 10)))
            start = int(rng.integers(-6, 7))
            a = complex(rng.uniform(0.5, 2.0) * np.exp(2j * np.pi * rng.uniform()))
            got = exp_factor_discrete(DiscreteSignal(start, vals), discrete_base(a)).value
            want = power_factor_brute(list(vals), start, a)
            assert abs(got - want) <= 1e-10 * max(1.0, abs(want))

    def test_overflow_reported(self):
        # a^(-n) overflows for a far-right tap and a tiny base
        f = DiscreteSignal(400, [1.0])
        with pytest.raises(ValueError, match="ill-defined"):
            exp_factor_discrete(f, discrete_base(1e-3))

    def test_eigenrelation_window(self):
        # direct-sum convolution equals F(a) a^k on a window around the support
        rng = np.random.default_rng(12)
        for _ in range(200):
            length = int(rng.integers(1, 17))
            f = DiscreteSignal(int(rng.integers(-8, 1)), rand_values(rng, length))
            a = complex(rng.uniform(0.5, 2.0) * np.exp(2j * np.pi * rng.uniform()))
            p = discrete_base(a)
            factor = exp_factor_discrete(f, p).value
            ks = range(f.start - 4, f.end + 4)
            lhs = [
                sum(f.value(n) * a ** (k - n) for n in range(f.start, f.end)) for k in ks
            ]
            rhs = [factor * eval_discrete_exponential(p, k) for k in ks]
            scale = max(1.0, max(abs(r) for r in rhs))
            worst = max(abs(l - r) for l, r in zip(lhs, rhs))
            assert worst <= 1e-10 * scale


class TestExpFactorAnalog:
    def test_pulse_at_pi(self):
        # analytic value of the width-1 pulse transform at pi: 2 sin(pi/2)/pi
        p = pulse(1.0 / 512.0)
        factor = exp_factor_analog(p, analog_exponent(1j * math.pi)).value
        assert abs(factor - 2.0 / math.pi) <= 5e-3

    def test_delta_approx_is_one(self):
        factor = exp_factor_analog(delta_approx(0.25), analog_exponent(1j * 3.0)).value
        assert factor == 1.0 + 0j

    def test_empty_is_zero(self):
        factor = exp_factor_analog(SampledSignal(0.5, 0, []), analog_exponent(1j)).value
        assert factor == 0j

    def test_matches_brute_force(self):
        rng = np.random.default_rng(13)
        vals = rand_values(rng, 9)
        f = SampledSignal(0.125, -4, vals)
        a = 0.3 - 1.7j
        got = exp_factor_analog(f, analog_exponent(a)).value
        want = riemann_factor_brute(list(vals), -4, 0.125, a)
        assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


class TestExpFactorPeriodic:
    def test_self_pairing_gives_period(self):
        n_samples, ts = 64, 1.0 / 64.0
        period_t = n_samples * ts
        for n in (1, 5, -8):
            x = sampled_harmonic(n, n_samples, ts)
            factor = exp_factor_periodic_analog(
                x, analog_exponent(1j * n * 2 * math.pi / period_t)
            ).value
            assert abs(factor - period_t) <= 1e-12 * period_t

    def test_cross_pairing_cancels(self):
        n_samples, ts = 64, 1.0 / 64.0
        omega0 = 2 * math.pi / (n_samples * ts)
        for m, n in ((0, 3), (2, 5), (-7, 7)):
            x = sampled_harmonic(m, n_samples, ts)
            factor = exp_factor_periodic_analog(x, analog_exponent(1j * n * omega0)).value
            assert abs(factor) <= 1e-12

    def test_constant_against_fundamental(self):
        ts = 1.0 / 32.0
        f = PeriodicSampledSignal(ts, 3.5 * np.ones(32))
        factor = exp_factor_periodic_analog(f, analog_exponent(2j * math.pi)).value
        assert abs(factor) <= 1e-12

    def test_periodic_discrete_delta(self):
        d = np.zeros(6, dtype=complex)
        d[0] = 1
        factor = exp_factor_periodic_discrete(PeriodicDiscreteSignal(d), discrete_base(0.7j))
        assert factor.value == 1 + 0j

    def test_fourth_roots_cancel(self):
        f = PeriodicDiscreteSignal([1, 1, 1, 1])
        factor = exp_factor_periodic_discrete(f, discrete_base(1j)).value
        assert abs(factor) <= 1e-15

    def test_ones_at_base_one(self):
        f = PeriodicDiscreteSignal([1, 1, 1, 1])
        assert exp_factor_periodic_discrete(f, discrete_base(1)).value == 4 + 0j

    def test_matches_brute_force(self):
        rng = np.random.default_rng(14)
        vals = rand_values(rng, 8)
        f = PeriodicDiscreteSignal(vals)
        a = 1.3 - 0.4j
        got = exp_factor_periodic_discrete(f, discrete_base(a)).value
        want = power_factor_brute(list(vals), 0, a)
        assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


class TestEigenFactor:
    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            EigenFactor(param=discrete_base(2), value=complex(float("inf"), 0))


class TestShift:
    def test_zero_shift_identity(self):
        f = DiscreteSignal(1, [1, 2])
        out = shift(f, 0)
        assert out.start == f.start
        assert np.array_equal(out.samples, f.samples)

    def test_periodic_rotation(self):
        out = shift(PeriodicDiscreteSignal([1, 2, 3]), 1)
        assert np.allclose(out.samples, [3, 1, 2], atol=0)

    def test_sampled_on_grid(self):
        f = SampledSignal(0.25, 0, [1, 2])
        out = shift(f, 0.75)
        assert out.start == 3
        assert np.array_equal(out.samples, f.samples)

    def test_periodic_sampled_rotation(self):
        f = PeriodicSampledSignal(0.25, [1, 2, 3, 4])
        out = shift(f, 0.5)
        assert np.allclose(out.samples, [3, 4, 1, 2], atol=0)
        assert out.ts == f.ts

    def test_off_grid_rejected(self):
        with pytest.raises(GridMismatchError):
            shift(SampledSignal(0.25, 0, [1, 2]), 0.3)

    def test_non_integer_discrete_rejected(self):
        with pytest.raises(ValueError):
            shift(DiscreteSignal(0, [1]), 1.5)

    def test_shift_convolve_commute(self):
        rng = np.random.default_rng(15)
        for _ in range(30):
            f = DiscreteSignal(int(rng.integers(-5, 6)), rand_values(rng, int(rng.integers(1, 9))))
            g = DiscreteSignal(int(rng.integers(-5, 6)), rand_values(rng, int(rng.integers(1, 9))))
            lag = int(rng.integers(-6, 7))
            base = shift(discrete_convolve(f, g), lag)
            left = discrete_convolve(shift(f, lag), g)
            right = discrete_convolve(f, shift(g, lag))
            for other in (left, right):
                assert other.start == base.start
                assert np.max(np.abs(other.samples - base.samples)) <= 1e-12


class TestScaleTime:
    def test_identity(self):
        f = SampledSignal(0.5, -1, [1, 2, 3])
        out = scale_time(f, 1)
        assert out.start == f.start and out.ts == f.ts
        assert np.array_equal(out.samples, f.samples)

    def test_reversal(self):
        f = SampledSignal(0.5, -1, [10, 20, 30, 40])
        out = scale_time(f, -1)
        # g(k) = f(-k): indices -2..1 hold f at 2..-1 reversed
        assert out.start == -2
        assert np.allclose(out.samples, [40, 30, 20, 10], atol=0)
        assert out.ts == 0.5

    def test_decimation(self):
        f = SampledSignal(0.5, -2, [1, 2, 3, 4, 5])
        out = scale_time(f, 2)
        # g(k) = f(2k): valid k = -1, 0, 1 picking indices -2, 0, 2
        assert out.start == -1
        assert np.allclose(out.samples, [1, 3, 5], atol=0)
        assert out.ts == 0.5

    def test_regrid_reciprocal(self):
        f = SampledSignal(0.5, -1, [1, 2, 3])
        out = scale_time(f, Fraction(1, 2))
        # g(t) = f(t/2) carries the same samples on the doubled grid
        assert out.ts == 1.0
        assert out.start == -1
        assert np.array_equal(out.samples, f.samples)

    def test_reind_oracle(self):
        # g(k ts') must equal f evaluated at a * (k ts')
        rng = np.random.default_rng(16)
        f = SampledSignal(0.25, -6, rand_values(rng, 13))
        for a in (2, 3, -2, Fraction(1, 3), Fraction(-2, 3)):
            out = scale_time(f, a)
            frac = Fraction(a)
            for i in range(len(out)):
                k = out.start + i
                src = k * frac.numerator
                assert out.samples[i] == f.value(src)

    def test_empty_signal(self):
        out = scale_time(SampledSignal(0.5, 3, []), 2)
        assert len(out) == 0

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            scale_time(SampledSignal(0.5, 0, [1]), 0)

    def test_non_integral_float_rejected(self):
        with pytest.raises(ValueError):
            scale_time(SampledSignal(0.5, 0, [1]), 0.5)

    def test_reversal_scaling_rule(self):
        # f(-t) * g == time-reverse of f * g(-t), the |a|=1 scaling rule
        rng = np.random.default_rng(17)
        ts = 0.25
        for _ in range(20):
            f = SampledSignal(ts, int(rng.integers(-4, 5)), rand_values(rng, int(rng.integers(1, 9))))
            g = SampledSignal(ts, int(rng.integers(-4, 5)), rand_values(rng, int(rng.integers(1, 9))))
            lhs = approx_analog_convolve(scale_time(f, -1), g)
            rhs = scale_time(approx_analog_convolve(f, scale_time(g, -1)), -1)
            assert lhs.start == rhs.start
            assert np.max(np.abs(lhs.samples - rhs.samples)) <= 1e-12


class TestDerivative:
    def test_constant_gives_zero(self):
        f = SampledSignal(0.1, 0, np.ones(10))
        out = derivative(f)
        assert np.max(np.abs(out.samples)) == 0.0
        assert out.start == 1
        assert len(out) == 8

    def test_linear_exact(self):
        ts = 0.125
        k = np.arange(-4, 5)
        f = SampledSignal(ts, -4, (k * ts).astype(complex))
        out = derivative(f)
        assert np.allclose(out.samples, 1.0, atol=1e-12)

    def test_exponential_second_order(self):
        # derivative of e^{j w t} approaches j w f at second order in ts
        w = 2.0
        errs = []
        for ts in (0.1, 0.05, 0.025):
            k = np.arange(-round(2 / ts), round(2 / ts) + 1)
            t = k * ts
            f = SampledSignal(ts, k[0], np.exp(1j * w * t))
            out = derivative(f)
            want = 1j * w * np.exp(1j * w * out.times())
            errs.append(np.max(np.abs(out.samples - want)))
        assert 3.5 <= errs[0] / errs[1] <= 4.5
        assert 3.5 <= errs[1] / errs[2] <= 4.5

    def test_too_short_rejected(self):
        with pytest.raises(ValueError):
            derivative(SampledSignal(0.5, 0, [1, 2]))

    def test_transfers_across_convolution(self):
        # sampled analytic derivative convolved with g matches the grid
        # derivative of the convolution at second order when ts halves
        def residual(ts):
            k = np.arange(-round(6 / ts), round(6 / ts) + 1)
            t = k * ts
            f = SampledSignal(ts, k[0], np.exp(-t * t))
            fdot = SampledSignal(ts, k[0], -2 * t * np.exp(-t * t))
            kg = np.arange(-round(3 / ts), round(3 / ts) + 1)
            tg = kg * ts
            g = SampledSignal(ts, kg[0], np.exp(-4 * tg * tg))
            lhs = approx_analog_convolve(fdot, g)
            rhs = derivative(approx_analog_convolve(f, g))
            return np.max(np.abs(lhs.samples[1:-1] - rhs.samples))

        r1, r2, r3 = residual(0.1), residual(0.05), residual(0.025)
        assert 3.5 <= r1 / r2 <= 4.5
        assert 3.5 <= r2 / r3 <= 4.5
