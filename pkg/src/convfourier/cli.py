"""Command-line interface: convolve signal files, run transforms, verify identities.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 grid or
period mismatch, 4 alias-window or precondition violation.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import convolution as conv
from . import fourier as four
from . import generators as gen
from .harness import GridParams, run_all
from .io import (
    SignalFormatError,
    read_signal_text,
    series_table_text,
    signal_kind,
    signal_text,
    transform_table_text,
)
from .signals import AliasingError, GridMismatchError, PeriodicDiscreteSignal

_GENERATORS = ("pulse", "cos", "square")


def _read_input(path: str):
    if path == "-":
        return read_signal_text(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SignalFormatError(f"cannot read {path}: {exc}") from None
    return read_signal_text(text)


def _write_output(text: str, path: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _generate(args):
    if args.ts is None:
        raise SignalFormatError("--gen requires --ts")
    if args.gen == "pulse":
        return gen.pulse(args.ts, width=args.width)
    if args.n is None:
        raise SignalFormatError(f"--gen {args.gen} requires --n")
    if args.gen == "cos":
        return gen.cosine(args.n, args.ts)
    return gen.square(args.n, args.ts)


def _single_input(args):
    if getattr(args, "gen", None):
        return _generate(args)
    if args.input is None:
        raise SignalFormatError("provide an input file or --gen NAME")
    return _read_input(args.input)


_CONV_OPS = {
    "discrete": conv.discrete_convolve,
    "analog": conv.approx_analog_convolve,
    "periodic-discrete": conv.periodic_convolve_discrete,
    "periodic-analog": conv.periodic_convolve_analog,
}


def _cmd_conv(args) -> int:
    f = _read_input(args.first)
    g = _read_input(args.second)
    kind_f, kind_g = signal_kind(f), signal_kind(g)
    mode = args.mode or kind_f
    if kind_f != mode or kind_g != mode:
        raise GridMismatchError(
            f"mode={mode} but inputs have kind={kind_f} and kind={kind_g}"
        )
    result = _CONV_OPS[mode](f, g)
    _write_output(signal_text(result, args.format), args.out)
    return 0


def _require_kind(signal, wanted: str, what: str):
    kind = signal_kind(signal)
    if kind != wanted:
        raise SignalFormatError(f"{what} must be a {wanted} signal, got kind={kind}")


def _cmd_dft(args) -> int:
    f = _single_input(args)
    _require_kind(f, "periodic-discrete", "dft input")
    spectrum = four.dft(f)
    _write_output(signal_text(PeriodicDiscreteSignal(spectrum.values), args.format), args.out)
    return 0


def _cmd_idft(args) -> int:
    f = _single_input(args)
    _require_kind(f, "periodic-discrete", "idft input")
    result = four.idft(four.DftSpectrum(values=f.samples))
    _write_output(signal_text(result, args.format), args.out)
    return 0


def _cmd_series(args) -> int:
    f = _single_input(args)
    _require_kind(f, "periodic-analog", "series input")
    spectrum = four.fourier_coefficients(f, args.nmax)
    _write_output(series_table_text(spectrum, args.format), args.out)
    return 0


def _cmd_ft(args) -> int:
    f = _single_input(args)
    _require_kind(f, "analog", "ft input")
    if args.omega_step <= 0:
        raise SignalFormatError(f"--omega-step must be > 0, got {args.omega_step}")
    if args.omega_max < args.omega_min:
        raise SignalFormatError("--omega-max must be >= --omega-min")
    count = int(round((args.omega_max - args.omega_min) / args.omega_step)) + 1
    omegas = args.omega_min + np.arange(count) * args.omega_step
    spectrum = four.fourier_transform(f, omegas)
    _write_output(transform_table_text(spectrum, args.format), args.out)
    return 0


def _cmd_verify(args) -> int:
    grid = GridParams(n=args.n, ts=args.ts, n_max=args.nmax)
    report = run_all(grid=grid, seed=args.seed, tol_scale=args.tol_scale)
    _write_output(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
    if args.out != "-":
        for c in report.checks:
            status = "skip" if c.skipped else ("pass" if c.passed else "FAIL")
            print(f"{status}  {c.id}", file=sys.stderr)
    if report.passed:
        return 0
    failing = ", ".join(c.id for c in report.checks if not c.passed and not c.skipped)
    print(f"verification failed: {failing}", file=sys.stderr)
    return 1


def _add_io_flags(p, with_gen: bool):
    p.add_argument("--out", default="-", help="output path ('-' for stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    if with_gen:
        p.add_argument("--gen", choices=_GENERATORS, help="use a built-in test signal as input")
        p.add_argument("--ts", type=float, help="grid spacing for --gen")
        p.add_argument("--n", type=int, help="samples per period for --gen cos/square")
        p.add_argument("--width", type=float, default=1.0, help="pulse width for --gen pulse")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convfourier",
        description="Convolution, Fourier series, DFT and Fourier transform on signal files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conv", help="convolve two signal files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument(
        "--mode",
        choices=tuple(_CONV_OPS),
        help="convolution flavour; defaults to the kind of the inputs",
    )
    _add_io_flags(p, with_gen=False)
    p.set_defaults(func=_cmd_conv)

    p = sub.add_parser("dft", help="discrete Fourier transform of a periodic-discrete file")
    p.add_argument("input")
    _add_io_flags(p, with_gen=False)
    p.set_defaults(func=_cmd_dft)

    p = sub.add_parser("idft", help="inverse DFT of a periodic-discrete spectrum file")
    p.add_argument("input")
    _add_io_flags(p, with_gen=False)
    p.set_defaults(func=_cmd_idft)

    p = sub.add_parser("series", help="Fourier series coefficients of a periodic-analog file")
    p.add_argument("input", nargs="?")
    p.add_argument("--nmax", type=int, required=True, help="largest harmonic |n| to compute")
    _add_io_flags(p, with_gen=True)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("ft", help="Fourier transform of a finite analog file")
    p.add_argument("input", nargs="?")
    p.add_argument("--omega-min", type=float, required=True)
    p.add_argument("--omega-max", type=float, required=True)
    p.add_argument("--omega-step", type=float, required=True)
    _add_io_flags(p, with_gen=True)
    p.set_defaults(func=_cmd_ft)

    p = sub.add_parser("verify", help="run the full identity catalog and emit a JSON report")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--n", type=int, default=64, help="samples per period")
    p.add_argument("--ts", type=float, default=1.0 / 64.0, help="grid spacing (seconds)")
    p.add_argument("--nmax", type=int, default=8, help="harmonic window for random signals")
    p.add_argument("--tol-scale", type=float, default=1.0, help="multiply every tolerance")
    p.add_argument("--out", default="-", help="report path ('-' for stdout)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SignalFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GridMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except AliasingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def entry_point():
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
