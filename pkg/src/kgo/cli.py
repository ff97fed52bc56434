"""Command-line surface: energy tables, single levels, wavefunction samples,
finite-difference cross-checks and effective-potential profiles.

All data rows go to standard output in csv, tsv or json; diagnostics go to
standard error.  Exit codes: 0 success, 1 runtime/numeric error, 2 usage
error.  Runs are deterministic: identical argv produces identical bytes.
Rows are fully computed before anything is printed, so a failing run emits
no partial data.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import oracle, spectrum, wavefn
from .errors import KgoError, UsageError
from .params import from_b

FORMATS = ("csv", "tsv", "json")

TABLE_FORMULA_WARNING = (
    "formula 'table' uses sqrt(1 + 2b(n+1)), the law inferred from the "
    "tabulated reference values; the derived spectrum is sqrt(1 + 2b(n+1/2)) "
    "(formula 'eq21') and the finite-difference oracle agrees with the latter"
)

VEFF_DEFAULT_EXTENT_FACTOR = 2.5  # default x_max as a multiple of the V_eff zero


@dataclass(frozen=True)
class Command:
    """One validated invocation: subcommand, parsed options, output format."""

    subcommand: str
    options: dict
    output_format: str


@dataclass(frozen=True)
class RunReport:
    rows_emitted: int
    warnings: Tuple[str, ...]
    exit_code: int


@dataclass
class _Emission:
    columns: List[str]
    int_columns: set
    rows: List[List[str]]     # cells already formatted
    warnings: List[str]
    comments: List[str]       # non-warning trailing comment lines
    json_extra: dict


class _Parser(argparse.ArgumentParser):
    # raise instead of sys.exit so parse_args stays an ordinary function
    def error(self, message):
        raise UsageError(message)


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}")
    if not (math.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"must be positive and finite, got {text!r}")
    return v


def _finite_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}")
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite, got {text!r}")
    return v


def _positive_float_list(text: str) -> List[float]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of numbers")
    return [_positive_float(t) for t in items]


def _nonnegative_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text!r}")
    return v


def _positive_int(text: str) -> int:
    v = _nonnegative_int(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be >= 1, got '0'")
    return v


def _odd_points(text: str) -> int:
    v = _nonnegative_int(text)
    if v < 3 or v % 2 == 0:
        raise argparse.ArgumentTypeError(f"must be an odd integer >= 3, got {text!r}")
    return v


def _add_output_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=FORMATS, default="csv",
                     help="output encoding (default: csv)")
    sub.add_argument("--decimals", type=_nonnegative_int, default=None, metavar="K",
                     help="fixed K-decimal rounding (half to even) instead of "
                          "the default 6 significant digits")


def build_parser() -> _Parser:
    parser = _Parser(prog="kgo",
                     description="Spectral toolkit for the one-dimensional "
                                 "Klein-Gordon oscillator.")
    sub = parser.add_subparsers(dest="subcommand", metavar="command")
    sub.required = True

    table = sub.add_parser("table", help="dimensionless energy table over n and b")
    table.add_argument("--b", type=_positive_float_list, required=True, metavar="LIST",
                       help="comma-separated strength parameters, e.g. 0.1,0.001")
    table.add_argument("--n-max", type=_nonnegative_int, required=True, metavar="N",
                       help="emit levels n = 0..N")
    table.add_argument("--formula", choices=spectrum.FORMULA_CHOICES, default="eq21",
                       help="relativistic column law: derived 'eq21' "
                            "sqrt(1+2b(n+1/2)) or 'table' sqrt(1+2b(n+1)) "
                            "(default: eq21)")
    _add_output_options(table)

    spec = sub.add_parser("spectrum", help="one energy level")
    spec.add_argument("--b", type=_positive_float, required=True,
                      help="strength parameter")
    spec.add_argument("--n", type=_nonnegative_int, required=True,
                      help="level index within the chosen parity family")
    spec.add_argument("--parity", choices=("even", "odd", "combined"),
                      default="combined")
    spec.add_argument("--expansion", choices=("exact", "second-order"),
                      default="exact")
    spec.add_argument("--binding", action="store_true",
                      help="also emit the binding energy (energy - 1)")
    _add_output_options(spec)

    wf = sub.add_parser("wavefn", help="sample one stationary state")
    wf.add_argument("--n", type=_nonnegative_int, required=True)
    wf.add_argument("--lambda", dest="lam", type=_positive_float, required=True,
                    help="width parameter m*omega/hbar")
    wf.add_argument("--x-max", type=_positive_float, default=None,
                    help="half extent of the symmetric grid "
                         "(default: twice the turning point plus tail padding)")
    wf.add_argument("--points", type=_odd_points, default=801)
    _add_output_options(wf)

    orc = sub.add_parser("oracle",
                         help="finite-difference eigenvalues vs the closed form")
    orc.add_argument("--b", type=_positive_float, required=True)
    orc.add_argument("--count", type=_positive_int, required=True,
                     help="number of lowest levels to verify")
    orc.add_argument("--points", type=_odd_points, default=oracle.DEFAULT_POINTS)
    orc.add_argument("--tol", type=_positive_float, default=1e-10,
                     help="bisection bracket width on k^2 (default: 1e-10)")
    _add_output_options(orc)

    veff = sub.add_parser("veff", help="vector-coupling effective potential profile")
    veff.add_argument("--b", type=_positive_float, required=True)
    veff.add_argument("--energy", type=_finite_float, required=True,
                      help="total energy in units of m c^2")
    veff.add_argument("--x-max", type=_positive_float, default=None,
                      help="half extent of the symmetric grid "
                           "(default: 2.5x the potential zero)")
    veff.add_argument("--points", type=_odd_points, default=201)
    _add_output_options(veff)

    return parser


def parse_args(argv: Sequence[str]) -> Command:
    ns = build_parser().parse_args(list(argv))
    options = vars(ns).copy()
    subcommand = options.pop("subcommand")
    output_format = options.pop("format")
    return Command(subcommand=subcommand, options=options,
                   output_format=output_format)


def _fmt(v: float, decimals: Optional[int]) -> str:
    if v == 0.0:
        v = 0.0  # canonicalise -0.0
    if decimals is None:
        return f"{v:.6g}"
    return f"{v:.{decimals}f}"


def _build_table(opts: dict) -> _Emission:
    rows = spectrum.generate_table(opts["b"], range(opts["n_max"] + 1),
                                   formula=opts["formula"])
    d = opts["decimals"]
    cells = [[str(r.n), _fmt(r.b, None), _fmt(r.e_rel, d), _fmt(r.e_nr_plus_one, d)]
             for r in rows]
    warnings = [TABLE_FORMULA_WARNING] if opts["formula"] == "table" else []
    return _Emission(columns=["n", "b", "e_rel", "e_nr_plus_one"],
                     int_columns={"n"}, rows=cells, warnings=warnings,
                     comments=[], json_extra={})


def _build_spectrum(opts: dict) -> _Emission:
    n, b = opts["n"], opts["b"]
    parity = opts["parity"]
    # the parity families interleave into the combined index
    combined_index = {"combined": n, "even": 2 * n, "odd": 2 * n + 1}[parity]
    if opts["expansion"] == "second-order":
        energy = spectrum.energy_second_order(combined_index, b)
    else:
        energy = spectrum.energy_combined(combined_index, b).value
    d = opts["decimals"]
    row = [str(n), _fmt(b, None), parity, _fmt(energy, d)]
    columns = ["n", "b", "parity", "energy"]
    if opts["binding"]:
        columns.append("binding")
        row.append(_fmt(energy - 1.0, d))
    return _Emission(columns=columns, int_columns={"n"}, rows=[row],
                     warnings=[], comments=[], json_extra={})


def _build_wavefn(opts: dict) -> _Emission:
    n, lam = opts["n"], opts["lam"]
    extent = opts["x_max"] if opts["x_max"] is not None else wavefn.default_extent(n, lam)
    grid = wavefn.GridSpec.symmetric(extent, opts["points"])
    sampled = wavefn.sample(n, grid, lam)
    d = opts["decimals"]
    cells = [[_fmt(float(x), d), _fmt(float(v), d)]
             for x, v in zip(grid.nodes(), sampled.values)]
    return _Emission(columns=["x", "psi"], int_columns=set(), rows=cells,
                     warnings=[], comments=[], json_extra={})


def _build_oracle(opts: dict) -> _Emission:
    params = from_b(opts["b"])
    grid = wavefn.GridSpec.symmetric(oracle.default_box(params, opts["count"]),
                                     opts["points"])
    results = oracle.oracle_energies(params, opts["count"], grid, opts["tol"])
    d = opts["decimals"]
    cells = []
    for r in results:
        reference = spectrum.energy_combined(r.index, opts["b"]).value
        rel_diff = abs(r.energy_dimensionless - reference) / reference
        cells.append([str(r.index), _fmt(r.k_squared, d),
                      _fmt(r.energy_dimensionless, d), _fmt(reference, d),
                      _fmt(rel_diff, d)])
    return _Emission(columns=["n", "k_squared", "e_oracle", "e_eq21", "rel_diff"],
                     int_columns={"n"}, rows=cells, warnings=[], comments=[],
                     json_extra={})


def _build_veff(opts: dict) -> _Emission:
    params = from_b(opts["b"])
    if opts["x_max"] is not None:
        extent = opts["x_max"]
    else:
        xstar = oracle.veff_zero_crossing(params, opts["energy"])
        extent = VEFF_DEFAULT_EXTENT_FACTOR * xstar if xstar > 0 else 5.0
    grid = wavefn.GridSpec.symmetric(extent, opts["points"])
    profile = oracle.profile_effective_potential(params, opts["energy"], grid)
    d = opts["decimals"]
    cells = [[_fmt(float(x), d), _fmt(float(v), d)] for x, v in profile.samples]
    flag = profile.unbounded_below_detected
    return _Emission(columns=["x", "v_eff"], int_columns=set(), rows=cells,
                     warnings=[],
                     comments=[f"unbounded_below_detected: {str(flag).lower()}"],
                     json_extra={"unbounded_below_detected": flag})


_BUILDERS = {
    "table": _build_table,
    "spectrum": _build_spectrum,
    "wavefn": _build_wavefn,
    "oracle": _build_oracle,
    "veff": _build_veff,
}


def _json_cell(column: str, cell: str, int_columns: set):
    if column in int_columns:
        return int(cell)
    try:
        return float(cell)
    except ValueError:
        return cell


def _render(emission: _Emission, output_format: str) -> str:
    if output_format == "json":
        rows = [{col: _json_cell(col, cell, emission.int_columns)
                 for col, cell in zip(emission.columns, row)}
                for row in emission.rows]
        payload = {"rows": rows, "warnings": list(emission.warnings)}
        payload.update(emission.json_extra)
        return json.dumps(payload, separators=(",", ":")) + "\n"
    sep = "," if output_format == "csv" else "\t"
    lines = [sep.join(emission.columns)]
    lines.extend(sep.join(row) for row in emission.rows)
    lines.extend(f"# {c}" for c in emission.comments)
    lines.extend(f"# {w}" for w in emission.warnings)
    return "\n".join(lines) + "\n"


def run(cmd: Command) -> RunReport:
    """Execute a validated command, writing rows to standard output."""
    emission = _BUILDERS[cmd.subcommand](cmd.options)
    sys.stdout.write(_render(emission, cmd.output_format))
    return RunReport(rows_emitted=len(emission.rows),
                     warnings=tuple(emission.warnings), exit_code=0)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = sys.argv[1:] if argv is None else list(argv)
    try:
        report = run(parse_args(args))
    except UsageError as exc:
        print(f"kgo: error: {exc}", file=sys.stderr)
        return 2
    except (KgoError, OverflowError) as exc:
        print(f"kgo: error: {exc}", file=sys.stderr)
        return 1
    return report.exit_code
