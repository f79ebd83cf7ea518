"""Fourier series, DFT and Fourier transform built on convolution eigenfactors.

Each transform is the eigenfactor of convolution with the matching
exponential family: Fourier series coefficients come from the one-period
Riemann factor at a = j n omega0 (divided by T), the DFT is the exact
N-term factor at the N-th roots of unity, and the Fourier transform is the
Riemann factor at a = j omega on a uniform frequency grid.  The forward
DFT is the plain O(N^2) sum; it is the normative reference here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .convolution import _riemann_sum, periodic_convolve_analog, periodic_convolve_discrete
from .signals import (
    AliasingError,
    GridMismatchError,
    PeriodicDiscreteSignal,
    PeriodicSampledSignal,
    SampledSignal,
)

__all__ = [
    "SeriesSpectrum",
    "DftSpectrum",
    "TransformSpectrum",
    "ResidualReport",
    "ComparisonReport",
    "harmonic_signal",
    "sampled_harmonic",
    "fourier_coefficients",
    "series_synthesize",
    "fs_eigencheck",
    "dft",
    "idft",
    "dft_orthogonality",
    "fourier_transform",
    "inverse_fourier_transform",
    "ft_discretize",
    "periodize_spectrum",
    "dft_vs_series",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, eq=False)
class SeriesSpectrum:
    """Fourier series coefficients C_n on the window |n| <= n_max.

    ``coeffs[n_max + n]`` holds C_n; omega0 = 2*pi / period_t is the
    fundamental (rad/s).  The factor picked up by the harmonic e^(j n w0 t)
    under one-period convolution is T * C_n.
    """

    period_t: float
    omega0: float
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        period_t = float(self.period_t)
        omega0 = float(self.omega0)
        if period_t <= 0:
            raise ValueError(f"period must be > 0, got {period_t}")
        if abs(omega0 * period_t - _TWO_PI) > 1e-12 * _TWO_PI:
            raise ValueError(
                f"omega0 * period must equal 2*pi, got {omega0 * period_t}"
            )
        coeffs = np.asarray(self.coeffs, dtype=np.complex128).copy()
        if coeffs.ndim != 1 or coeffs.size % 2 != 1:
            raise ValueError("coefficients must cover a symmetric window -n_max..n_max")
        coeffs.setflags(write=False)
        object.__setattr__(self, "period_t", period_t)
        object.__setattr__(self, "omega0", omega0)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n_max(self) -> int:
        return (self.coeffs.size - 1) // 2

    def harmonics(self) -> np.ndarray:
        return np.arange(-self.n_max, self.n_max + 1)

    def coefficient(self, n: int) -> complex:
        n = int(n)
        if abs(n) > self.n_max:
            return 0j
        return complex(self.coeffs[self.n_max + n])


@dataclass(frozen=True, eq=False)
class DftSpectrum:
    """DFT values F(n), n = 0..N-1, with implied period-N extension."""

    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.complex128).copy()
        if values.ndim != 1 or values.size < 1:
            raise ValueError("spectrum needs at least one value")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def period(self) -> int:
        return self.values.size

    def value(self, n: int) -> complex:
        return complex(self.values[int(n) % self.period])


@dataclass(frozen=True, eq=False)
class TransformSpectrum:
    """Fourier transform samples F(omega) on a uniform frequency grid."""

    omegas: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        omegas = np.asarray(self.omegas, dtype=np.float64).copy()
        values = np.asarray(self.values, dtype=np.complex128).copy()
        if omegas.ndim != 1 or values.shape != omegas.shape:
            raise ValueError("omegas and values must be matching 1-d arrays")
        if omegas.size == 0:
            raise ValueError("spectrum needs at least one frequency")
        if omegas.size > 1:
            steps = np.diff(omegas)
            if np.any(steps <= 0):
                raise ValueError("omegas must be strictly increasing")
            if not np.allclose(steps, steps[0], rtol=1e-9, atol=0):
                raise ValueError("omegas must be uniformly spaced")
        omegas.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "omegas", omegas)
        object.__setattr__(self, "values", values)

    @property
    def delta_omega(self) -> float:
        if self.omegas.size < 2:
            raise ValueError("grid spacing undefined for a single-frequency spectrum")
        return float(self.omegas[1] - self.omegas[0])

    def value(self, omega: float) -> complex:
        """Value at a grid frequency; omega must land on the grid."""
        i = int(np.argmin(np.abs(self.omegas - omega)))
        if not np.isclose(self.omegas[i], omega, rtol=1e-9, atol=1e-12):
            raise KeyError(f"omega={omega} is not on the stored grid")
        return complex(self.values[i])


@dataclass(frozen=True)
class ResidualReport:
    """Max-norm deviation between the two sides of an identity."""

    residual: float
    scale: float


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    """Pointwise comparison of two spectra over a set of harmonic indices."""

    indices: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray
    residual: float
    scale: float


def _compare(indices, lhs, rhs) -> ComparisonReport:
    lhs = np.asarray(lhs, dtype=np.complex128)
    rhs = np.asarray(rhs, dtype=np.complex128)
    diff = np.abs(lhs - rhs)
    return ComparisonReport(
        indices=np.asarray(indices),
        lhs=lhs,
        rhs=rhs,
        residual=float(diff.max()) if diff.size else 0.0,
        scale=float(np.abs(rhs).max()) if rhs.size else 0.0,
    )


def _unit_root_samples(n: int, count: int) -> np.ndarray:
    """e^(j 2 pi n k / count) for k = 0..count-1, with the angle reduced mod count."""
    k = (int(n) * np.arange(count)) % count
    return np.exp(2j * np.pi * k / count)


def harmonic_signal(n: int, period: int) -> PeriodicDiscreteSignal:
    """Periodic discrete exponential x_n(k) = e^(j n (2 pi / N) k)."""
    if period < 1:
        raise ValueError(f"period must be >= 1, got {period}")
    return PeriodicDiscreteSignal(samples=_unit_root_samples(n, period))


def sampled_harmonic(n: int, period: int, ts: float) -> PeriodicSampledSignal:
    """One period of the analog harmonic e^(j n omega0 t) sampled at spacing ts."""
    if period < 1:
        raise ValueError(f"period must be >= 1, got {period}")
    return PeriodicSampledSignal(ts=ts, samples=_unit_root_samples(n, period))


def _check_alias_window(n_max: int, period: int):
    if not 0 <= n_max:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if 2 * n_max >= period:
        raise AliasingError(
            f"harmonic window |n| <= {n_max} exceeds the alias-free range for "
            f"{period} samples per period (need |n| < N/2)"
        )


def fourier_coefficients(f: PeriodicSampledSignal, n_max: int) -> SeriesSpectrum:
    """Series coefficients C_n = F(n)/T from the one-period Riemann factor.

    F(n) is the eigenfactor of f at a = j n omega0; harmonics are limited to
    |n| <= n_max < N/2 so the sampled grid resolves them without aliasing.
    """
    n_max = int(n_max)
    _check_alias_window(n_max, f.period_samples)
    period_t = f.period_t
    omega0 = _TWO_PI / period_t
    times = f.times()
    coeffs = np.empty(2 * n_max + 1, dtype=np.complex128)
    for n in range(-n_max, n_max + 1):
        factor = _riemann_sum(f.samples, times, f.ts, 1j * n * omega0)
        coeffs[n_max + n] = factor / period_t
    return SeriesSpectrum(period_t=period_t, omega0=omega0, coeffs=coeffs)


def series_synthesize(
    spectrum: SeriesSpectrum, ts: float, start: int, count: int
) -> SampledSignal:
    """Truncated synthesis sum_{|n| <= n_max} C_n e^(j n omega0 t) on a grid."""
    count = int(count)
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    t = (int(start) + np.arange(count)) * float(ts)
    acc = np.zeros(count, dtype=np.complex128)
    for n in range(-spectrum.n_max, spectrum.n_max + 1):
        acc += spectrum.coeffs[spectrum.n_max + n] * np.exp(1j * n * spectrum.omega0 * t)
    return SampledSignal(ts=ts, start=start, samples=acc)


def fs_eigencheck(f: PeriodicSampledSignal, n: int) -> ResidualReport:
    """Residual of the series eigenrelation (f (*) x_n)(t) = F(n) x_n(t).

    The left side goes through the circular convolution, the right side
    through the one-period Riemann factor; both are evaluated on f's grid.
    """
    n = int(n)
    _check_alias_window(abs(n), f.period_samples)
    x = sampled_harmonic(n, f.period_samples, f.ts)
    lhs = periodic_convolve_analog(f, x).samples
    factor = _riemann_sum(f.samples, f.times(), f.ts, 1j * n * (_TWO_PI / f.period_t))
    rhs = factor * x.samples
    return ResidualReport(
        residual=float(np.abs(lhs - rhs).max()),
        scale=float(np.abs(rhs).max()),
    )


def _dft_matrix(period: int, sign: float) -> np.ndarray:
    k = np.arange(period)
    reduced = np.outer(k, k) % period
    return np.exp(sign * 2j * np.pi * reduced / period)


def dft(f: PeriodicDiscreteSignal) -> DftSpectrum:
    """Plain-sum DFT: F(n) = sum_m f(m) e^(-j m (2 pi / N) n)."""
    return DftSpectrum(values=_dft_matrix(f.period, -1.0) @ f.samples)


def idft(spectrum: DftSpectrum) -> PeriodicDiscreteSignal:
    """Inverse DFT: f(k) = (1/N) sum_m F(m) e^(j m (2 pi / N) k)."""
    n = spectrum.period
    return PeriodicDiscreteSignal(samples=(_dft_matrix(n, 1.0) @ spectrum.values) / n)


def dft_orthogonality(m: int, n: int, period: int) -> ResidualReport:
    """Residual of x_m (*) x_n against N * delta(m - n) * x_n."""
    m, n, period = int(m), int(n), int(period)
    if not (0 <= m < period and 0 <= n < period):
        raise ValueError(f"need 0 <= m, n < N, got m={m}, n={n}, N={period}")
    xm = harmonic_signal(m, period)
    xn = harmonic_signal(n, period)
    lhs = periodic_convolve_discrete(xm, xn).samples
    rhs = (period if m == n else 0.0) * xn.samples
    return ResidualReport(
        residual=float(np.abs(lhs - rhs).max()),
        scale=float(period),
    )


def fourier_transform(f: SampledSignal, omegas) -> TransformSpectrum:
    """Riemann-sum Fourier transform of a finite-support signal.

    F(omega) = ts * sum_k f(k ts) e^(-j omega k ts), evaluated at every
    frequency of the (uniform) grid.
    """
    omegas = np.atleast_1d(np.asarray(omegas, dtype=np.float64))
    if len(f) == 0:
        return TransformSpectrum(omegas=omegas, values=np.zeros(omegas.size, dtype=np.complex128))
    kernel = np.exp(-1j * np.outer(omegas, f.times()))
    return TransformSpectrum(omegas=omegas, values=f.ts * (kernel @ f.samples))


def inverse_fourier_transform(
    spectrum: TransformSpectrum, ts: float, start: int, count: int
) -> SampledSignal:
    """Band-and-grid-truncated inverse: (1/2pi) * dw * sum F(w) e^(j w t)."""
    count = int(count)
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    dw = spectrum.delta_omega
    t = (int(start) + np.arange(count)) * float(ts)
    kernel = np.exp(1j * np.outer(t, spectrum.omegas))
    return SampledSignal(ts=ts, start=start, samples=(dw / _TWO_PI) * (kernel @ spectrum.values))


def _support_extent(f: SampledSignal) -> int:
    """Number of grid steps spanned by f's nonzero samples."""
    nz = np.nonzero(f.samples)[0]
    if nz.size == 0:
        return 0
    return int(nz[-1] - nz[0] + 1)


def ft_discretize(
    spectrum: TransformSpectrum,
    periodized: PeriodicSampledSignal,
    source: SampledSignal,
) -> ComparisonReport:
    """Compare F(n omega0) against T * C_n of the periodized signal.

    ``spectrum`` must be sampled on the omega0 lattice of the period
    T = N * ts, ``periodized`` is the source folded into one period, and
    ``source`` must fit inside T (otherwise folding aliases in time and the
    comparison is rejected).
    """
    if source.ts != periodized.ts:
        raise GridMismatchError(f"ts mismatch: {source.ts} != {periodized.ts}")
    n_samples = periodized.period_samples
    if _support_extent(source) > n_samples:
        raise AliasingError(
            f"source support spans {_support_extent(source)} samples, more than the "
            f"{n_samples}-sample period; periodization would alias in time"
        )
    period_t = periodized.period_t
    omega0 = _TWO_PI / period_t
    ratio = spectrum.omegas / omega0
    harmonics = np.round(ratio).astype(int)
    if not np.allclose(ratio, harmonics, rtol=0, atol=1e-9):
        raise GridMismatchError(
            "spectrum frequencies do not sit on the omega0 lattice of the period"
        )
    n_max = int(np.abs(harmonics).max()) if harmonics.size else 0
    _check_alias_window(n_max, n_samples)
    coeffs = fourier_coefficients(periodized, n_max)
    rhs = np.asarray(
        [period_t * coeffs.coefficient(n) for n in harmonics], dtype=np.complex128
    )
    return _compare(harmonics, spectrum.values, rhs)


def periodize_spectrum(
    spectrum: TransformSpectrum, omega_s: float, replicas: int
) -> TransformSpectrum:
    """Sum shifted replicas F(omega - r * omega_s) for |r| <= replicas.

    omega_s must be an integer number of grid steps so the replicas land on
    the stored grid; values outside the grid count as zero.
    """
    replicas = int(replicas)
    if replicas < 1:
        raise ValueError(f"replicas must be >= 1, got {replicas}")
    omega_s = float(omega_s)
    if omega_s <= 0:
        raise ValueError(f"omega_s must be > 0, got {omega_s}")
    dw = spectrum.delta_omega
    step = round(omega_s / dw)
    if step == 0 or not np.isclose(step * dw, omega_s, rtol=1e-9, atol=0):
        raise GridMismatchError(
            f"omega_s={omega_s} is not an integer multiple of the grid step {dw}"
        )
    size = spectrum.values.size
    out = np.zeros(size, dtype=np.complex128)
    for r in range(-replicas, replicas + 1):
        shifted = np.zeros(size, dtype=np.complex128)
        lo = max(0, r * step)
        hi = min(size, size + r * step)
        if lo < hi:
            shifted[lo:hi] = spectrum.values[lo - r * step : hi - r * step]
        out += shifted
    return TransformSpectrum(omegas=spectrum.omegas, values=out)


def dft_vs_series(f_d: PeriodicDiscreteSignal, spectrum: SeriesSpectrum) -> ComparisonReport:
    """Compare the DFT of one period of samples against N * C_n.

    ``f_d`` must hold the N per-period samples of the analog signal whose
    series coefficients are in ``spectrum``; harmonics above the alias
    window are rejected.
    """
    n = f_d.period
    _check_alias_window(spectrum.n_max, n)
    transform = dft(f_d)
    harmonics = spectrum.harmonics()
    lhs = np.asarray([transform.value(h) for h in harmonics], dtype=np.complex128)
    rhs = n * spectrum.coeffs
    return _compare(harmonics, lhs, rhs)
