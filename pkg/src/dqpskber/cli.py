"""Command-line front end emitting deterministic CSV.

Subcommands: ``table {1|2|3}`` (reference tables on the integer SNR grid
1..12), ``sweep`` (arbitrary SNR grids for figure data), ``mc`` (the
Monte-Carlo oracle vs the exact value), and ``constants`` (the root and
sharp constant behind the best upper bound). ``--out PATH`` writes the
CSV atomically instead of printing it.

Note on the table grid: the reference tabulation these tables reproduce
indexes rows by LINEAR SNR 1..12 even though its grid column is
conventionally labeled in dB; the ``table`` commands follow that
convention (column name ``gamma_db``, rows evaluated at linear SNR).
``sweep`` applies its ``--scale`` honestly.

CSV dialect: comma-separated, ``.`` decimal point, LF line endings,
header always present, 6 significant digits in lowercase scientific
notation. Exit status: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile

from . import approx, bounds, montecarlo, specfun

_SWEEP_COLUMNS = (
    "exact",
    "l1",
    "l2",
    "u1",
    "u2",
    "u3",
    "ber1",
    "ber2",
    "ber3",
    "ber4",
    "ber5",
    "ber6",
    "ber7",
    "eps5",
    "eps6",
    "eps7",
    "w5",
    "w6",
    "w7",
)
_WEIGHT_COLUMNS = {"w5": approx.omega5, "w6": approx.omega6, "w7": approx.omega7}
_MAX_GRID_POINTS = 10**7

# Guard for the mc subcommand: vanishingly small linear SNR (e.g. -300 dB)
# is rejected rather than simulated.
_MC_GAMMA_FLOOR = 1e-12


def _fmt(x: float) -> str:
    return f"{x:.5e}"


def _fmt_gamma(x: float) -> str:
    return f"{x:.6g}"


class _Row:
    """Lazy per-grid-point evaluation shared across requested columns."""

    def __init__(self, gamma_lin: float):
        self.gamma_lin = gamma_lin
        self._snr = None
        self._bounds = None
        self._exact = None

    def snr(self) -> bounds.SnrPoint:
        if self._snr is None:
            self._snr = bounds.SnrPoint.from_linear(self.gamma_lin)
        return self._snr

    def bound_set(self) -> bounds.BoundSet:
        if self._bounds is None:
            self._bounds = bounds.bound_set(self.snr())
        return self._bounds

    def exact(self) -> float:
        if self._exact is None:
            self._exact = bounds.exact_ber(self.snr())
        return self._exact

    def value(self, column: str) -> float:
        if column in _WEIGHT_COLUMNS:
            return _WEIGHT_COLUMNS[column](self.gamma_lin)
        if column == "exact":
            return self.exact()
        if column in ("l1", "l2", "u1", "u2", "u3"):
            return getattr(self.bound_set(), column)
        if column.startswith("ber"):
            return getattr(approx, column)(self.snr())
        if column.startswith("eps"):
            approximation = getattr(approx, "ber" + column[3:])(self.snr())
            return approx.relative_error(approximation, self.exact())
        raise ValueError(f"unknown column {column!r}")


def cmd_table(which: int) -> str:
    """Reference table CSV over linear SNR 1..12."""
    lines = []
    if which == 1:
        lines.append("gamma_db,ber,ber1,ber2,ber3")
    elif which == 2:
        lines.append("gamma_db,ber4,ber5,ber6,ber7")
    else:
        lines.append("gamma_db,eps5,eps6,eps7")
    for k in range(1, 13):
        snr = bounds.SnrPoint.from_linear(float(k))
        aset = approx.approx_set(snr)
        if which == 1:
            vals = [bounds.exact_ber(snr), aset.ber1, aset.ber2, aset.ber3]
        elif which == 2:
            vals = [aset.ber4, aset.ber5, aset.ber6, aset.ber7]
        else:
            vals = [aset.eps5, aset.eps6, aset.eps7]
        lines.append(",".join([str(k)] + [_fmt(v) for v in vals]))
    return "\n".join(lines) + "\n"


def cmd_sweep(start: float, stop: float, step: float, scale: str, columns: list[str]) -> str:
    """CSV over an inclusive SNR grid; scale selects db or linear grid values."""
    if not columns:
        raise ValueError("column list must not be empty")
    if not start < stop:
        raise ValueError("start must be < stop")
    if not step > 0.0:
        raise ValueError("step must be > 0")
    span = (stop - start) / step
    if span > _MAX_GRID_POINTS:
        raise ValueError("grid would exceed the 1e7-point guard")
    count = int(math.floor(span + 1e-9)) + 1

    weights_only = all(c in _WEIGHT_COLUMNS for c in columns)
    lines = [",".join(["gamma_db" if scale == "db" else "gamma_lin"] + columns)]
    for i in range(count):
        grid_value = start + i * step
        gamma_lin = 10.0 ** (grid_value / 10.0) if scale == "db" else grid_value
        if gamma_lin <= 0.0 and not (weights_only and gamma_lin == 0.0 and "w5" not in columns):
            raise ValueError(f"grid contains gamma = {gamma_lin:g}, not valid for requested columns")
        row = _Row(gamma_lin)
        lines.append(",".join([_fmt_gamma(grid_value)] + [_fmt(row.value(c)) for c in columns]))
    return "\n".join(lines) + "\n"


def cmd_mc(snr_db: float, symbols: int, seed: int) -> str:
    """One Monte-Carlo run against the exact value; inside_ci is 0/1."""
    snr = bounds.SnrPoint.from_db(snr_db)
    if snr.gamma_lin < _MC_GAMMA_FLOOR:
        raise ValueError("gamma must be positive and not vanishingly small (>= 1e-12 linear)")
    result = montecarlo.simulate(montecarlo.McConfig(snr=snr, num_symbols=symbols, seed=seed))
    exact = bounds.exact_ber(snr)
    inside = int(abs(result.ber_estimate - exact) <= result.ci_half_width)
    fields = [
        _fmt_gamma(snr_db),
        _fmt(result.ber_estimate),
        _fmt(result.ci_half_width),
        _fmt(exact),
        str(inside),
    ]
    return "gamma_db,ber_mc,ci_half_width,ber_exact,inside_ci\n" + ",".join(fields) + "\n"


def cmd_constants() -> str:
    """The root, the sharp constant, and the defining-equation residual."""
    consts = bounds.solve_rho0()
    residual = abs(
        (consts.rho0 + 1.0) * specfun.bessel_i1(consts.rho0)
        - consts.rho0 * specfun.bessel_i0(consts.rho0)
    )
    lines = [
        "name,value",
        f"rho0,{consts.rho0:.14e}",
        f"lambda0,{consts.lambda0:.14e}",
        f"residual,{residual:.14e}",
    ]
    return "\n".join(lines) + "\n"


def _parse_columns(text: str) -> list[str]:
    columns = [c.strip() for c in text.split(",") if c.strip()]
    if not columns:
        raise argparse.ArgumentTypeError("column list must not be empty")
    unknown = [c for c in columns if c not in _SWEEP_COLUMNS]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown columns {unknown!r}; valid: {', '.join(_SWEEP_COLUMNS)}"
        )
    deduped = list(dict.fromkeys(columns))
    return deduped


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dqpsk-ber",
        description="Exact DQPSK/AWGN bit error rate, bounds, approximations, and a Monte-Carlo oracle (CSV output).",
    )
    parser.add_argument("--out", metavar="PATH", default=None, help="write CSV to PATH (atomic) instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="reference tables on the integer SNR grid 1..12")
    p_table.add_argument("which", type=int, choices=(1, 2, 3))

    p_sweep = sub.add_parser("sweep", help="evaluate selected columns over an SNR grid")
    p_sweep.add_argument("--start", type=float, required=True)
    p_sweep.add_argument("--stop", type=float, required=True)
    p_sweep.add_argument("--step", type=float, required=True)
    p_sweep.add_argument("--scale", choices=("db", "linear"), required=True)
    p_sweep.add_argument("--cols", type=_parse_columns, required=True, metavar="LIST")

    p_mc = sub.add_parser("mc", help="run the Monte-Carlo oracle at one SNR")
    p_mc.add_argument("--snr-db", type=float, required=True)
    p_mc.add_argument("--symbols", type=int, required=True)
    p_mc.add_argument("--seed", type=int, required=True)

    sub.add_parser("constants", help="emit the root and sharp constant with residual")
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".dqpskber-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp_path, out_path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            text = cmd_table(args.which)
        elif args.command == "sweep":
            text = cmd_sweep(args.start, args.stop, args.step, args.scale, args.cols)
        elif args.command == "mc":
            text = cmd_mc(args.snr_db, args.symbols, args.seed)
        else:
            text = cmd_constants()
        _emit(text, args.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
