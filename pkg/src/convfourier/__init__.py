"""Convolution calculus with exponential eigensignals.

Convolving any signal with an exponential returns the same exponential
scaled by a constant factor; this package builds the Fourier series, the
DFT and the Fourier transform out of that single fact, and ships a
harness that re-derives every identity numerically.
"""

from .convolution import (
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
from .fourier import (
    ComparisonReport,
    DftSpectrum,
    ResidualReport,
    SeriesSpectrum,
    TransformSpectrum,
    dft,
    dft_orthogonality,
    dft_vs_series,
    fourier_coefficients,
    fourier_transform,
    fs_eigencheck,
    ft_discretize,
    harmonic_signal,
    idft,
    inverse_fourier_transform,
    periodize_spectrum,
    sampled_harmonic,
    series_synthesize,
)
from .generators import cosine, gaussian, pulse, square
from .harness import (
    GridParams,
    IdentityCheck,
    Report,
    check_fs_conv_freq,
    check_fs_conv_time,
    check_fs_mixed,
    check_ft_properties,
    run_all,
)
from .io import SignalFormatError, read_signal, read_signal_text, signal_text, write_signal
from .signals import (
    AliasingError,
    DiscreteSignal,
    ExpKind,
    ExpParam,
    GridMismatchError,
    PeriodicDiscreteSignal,
    PeriodicSampledSignal,
    SampledSignal,
    analog_exponent,
    delta_approx,
    delta_signal,
    discrete_base,
    eval_analog_exponential,
    eval_discrete_exponential,
    periodic_delta,
    periodize,
    sample_function,
)

__version__ = "0.1.0"
