import json
import math
import subprocess
import sys

import pytest

from kgo.cli import Command, main, parse_args, run
from kgo.errors import UsageError


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_args_table_happy_path():
    cmd = parse_args(["table", "--b", "0.1", "--n-max", "3"])
    assert isinstance(cmd, Command)
    assert cmd.subcommand == "table"
    assert cmd.options["b"] == [0.1]
    assert cmd.options["n_max"] == 3
    assert cmd.options["formula"] == "eq21"
    assert cmd.output_format == "csv"


def test_parse_args_b_list():
    cmd = parse_args(["table", "--b", "0.1,0.001,0.0001", "--n-max", "1"])
    assert cmd.options["b"] == [0.1, 0.001, 0.0001]


def test_parse_args_rejects_bad_formula():
    with pytest.raises(UsageError) as err:
        parse_args(["table", "--b", "0.1", "--n-max", "3", "--formula", "bogus"])
    assert "bogus" in str(err.value)


def test_parse_args_rejects_nonpositive_b():
    with pytest.raises(UsageError) as err:
        parse_args(["spectrum", "--b", "-1", "--n", "0"])
    assert "positive" in str(err.value)


def test_parse_args_rejects_unknown_flag_and_subcommand():
    with pytest.raises(UsageError):
        parse_args(["table", "--b", "0.1", "--n-max", "1", "--frobnicate"])
    with pytest.raises(UsageError):
        parse_args(["transmogrify"])
    with pytest.raises(UsageError):
        parse_args(["oracle", "--b", "0.1"])  # missing --count
    with pytest.raises(UsageError):
        parse_args(["oracle", "--b", "0.1", "--count", "2", "--points", "100"])


def test_main_usage_error_exit_code(capsys):
    code, out, err = _run(capsys, "spectrum", "--b", "-1", "--n", "0")
    assert code == 2
    assert out == ""
    assert "error" in err


def test_main_runtime_error_exit_code_and_no_partial_output(capsys):
    # grid ends inside the potential zero -> runtime failure, nothing emitted
    code, out, err = _run(capsys, "veff", "--b", "1", "--energy", "1",
                          "--x-max", "1")
    assert code == 1
    assert out == ""
    assert err.strip().startswith("kgo: error:")


def test_table_golden_first_row_and_warning(capsys):
    code, out, err = _run(capsys, "table", "--b", "0.1", "--n-max", "3",
                          "--formula", "table", "--decimals", "5")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "n,b,e_rel,e_nr_plus_one"
    assert lines[1] == "0,0.1,1.09545,1.05000"
    assert lines[4] == "3,0.1,1.34164,1.35000"
    assert any(line.startswith("#") for line in lines)


def test_table_eq21_has_no_warning(capsys):
    code, out, _ = _run(capsys, "table", "--b", "0.1", "--n-max", "0",
                        "--decimals", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "0,0.1,1.04881,1.05000"
    assert not any(line.startswith("#") for line in lines)


def test_output_is_deterministic(capsys):
    argv = ["table", "--b", "0.1,0.001", "--n-max", "5", "--formula", "table"]
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)
    assert first == second


def _numbers_from_csvish(text, sep):
    values = []
    for line in text.splitlines():
        if line.startswith("#"):
            continue
        for cell in line.split(sep):
            try:
                values.append(float(cell))
            except ValueError:
                pass
    return values


def test_format_equivalence(capsys):
    base = ["table", "--b", "0.1,0.001", "--n-max", "4", "--formula", "table"]
    _, csv_out, _ = _run(capsys, *base, "--format", "csv")
    _, tsv_out, _ = _run(capsys, *base, "--format", "tsv")
    _, json_out, _ = _run(capsys, *base, "--format", "json")

    csv_vals = _numbers_from_csvish(csv_out, ",")
    tsv_vals = _numbers_from_csvish(tsv_out, "\t")
    payload = json.loads(json_out)
    json_vals = [float(row[c]) for row in payload["rows"]
                 for c in ("n", "b", "e_rel", "e_nr_plus_one")]

    canon = lambda vals: [repr(v) for v in vals]
    assert canon(csv_vals) == canon(tsv_vals) == canon(json_vals)
    assert payload["warnings"]  # formula=table carries the warning in json too


def test_wavefn_odd_state_vanishes_at_origin(capsys):
    code, out, _ = _run(capsys, "wavefn", "--n", "1", "--lambda", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,psi"
    row = [line for line in lines[1:] if line.split(",")[0] == "0"]
    assert row and row[0] == "0,0"


def test_wavefn_respects_extent_and_points(capsys):
    code, out, _ = _run(capsys, "wavefn", "--n", "0", "--lambda", "1",
                        "--x-max", "4", "--points", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[1].split(",")[0] == "-4"
    assert lines[-1].split(",")[0] == "4"


def test_oracle_reports_small_relative_difference(capsys):
    code, out, _ = _run(capsys, "oracle", "--b", "0.001", "--count", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,k_squared,e_oracle,e_eq21,rel_diff"
    rel_diff = float(lines[1].split(",")[-1])
    assert rel_diff <= 2e-3


def test_spectrum_row_values(capsys):
    code, out, _ = _run(capsys, "spectrum", "--b", "0.1", "--n", "0")
    assert code == 0
    assert out.splitlines()[1] == "0,0.1,combined,1.04881"

    _, out, _ = _run(capsys, "spectrum", "--b", "0.1", "--n", "0",
                     "--parity", "odd")
    energy = float(out.splitlines()[1].split(",")[3])
    # default output carries 6 significant digits
    assert energy == pytest.approx(math.sqrt(1.3), abs=5e-6)

    _, out, _ = _run(capsys, "spectrum", "--b", "0.1", "--n", "0",
                     "--expansion", "second-order")
    assert out.splitlines()[1] == "0,0.1,combined,1.04875"


def test_spectrum_binding_column(capsys):
    _, out, _ = _run(capsys, "spectrum", "--b", "0.1", "--n", "0", "--binding")
    header, row = out.splitlines()[:2]
    assert header == "n,b,parity,energy,binding"
    cells = row.split(",")
    assert float(cells[4]) == pytest.approx(math.sqrt(1.1) - 1.0, rel=1e-5)


def test_veff_flag_in_comment_and_json(capsys):
    code, out, _ = _run(capsys, "veff", "--b", "1", "--energy", "1",
                        "--x-max", "5", "--points", "11")
    assert code == 0
    assert "# unbounded_below_detected: true" in out.splitlines()

    _, out, _ = _run(capsys, "veff", "--b", "1", "--energy", "1",
                     "--x-max", "5", "--points", "11", "--format", "json")
    payload = json.loads(out)
    assert payload["unbounded_below_detected"] is True
    assert {"x", "v_eff"} == set(payload["rows"][0])


def test_run_report_counts_rows(capsys):
    report = run(parse_args(["table", "--b", "0.1,0.001", "--n-max", "2",
                             "--formula", "table"]))
    capsys.readouterr()
    assert report.rows_emitted == 6
    assert report.exit_code == 0
    assert len(report.warnings) == 1


def test_module_entry_point_help():
    proc = subprocess.run([sys.executable, "-m", "kgo", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "kgo" in proc.stdout
    assert "table" in proc.stdout


def test_module_entry_point_exit_codes():
    proc = subprocess.run([sys.executable, "-m", "kgo", "nonsense"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert proc.stdout == ""
