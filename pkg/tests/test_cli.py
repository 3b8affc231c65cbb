import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from logint import basis, catalog, cli

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv,name", [
    (("list",), "list.txt"),
    (("show", "4.231.7"), "show_4.231.7.txt"),
    (("verify", "4.231.1"), "verify_4.231.1.txt"),
])
def test_golden_outputs(argv, name):
    first = run(*argv)
    second = run(*argv)
    assert first == second
    assert first[0] == 0
    assert first[1] == (GOLDEN / name).read_text()


def test_console_entry_point_matches_in_process_run():
    proc = subprocess.run([sys.executable, "-m", "logint", "verify", "4.231.1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "verify_4.231.1.txt").read_text()


def test_list_json_validates():
    code, out, _ = run("list", "--json")
    assert code == 0
    jsonschema.validate(json.loads(out), catalog.SCHEMA)


def test_verify_all_summary_line():
    code, out, _ = run("verify", "--all")
    assert code == 0
    n = len(catalog.entries())
    assert out.splitlines()[-1] == f"{n} passed, 0 failed, 6 errata flagged"
    assert out.count("     erratum: printed=") == 6


def test_verify_all_json():
    code, out, _ = run("verify", "--all", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n_fail"] == 0 and doc["n_errata"] == 6


def test_verify_tight_tolerance_fails_loudly():
    code, out, _ = run("verify", "--all", "--tol", "1e-30")
    assert code in (1, 3)
    assert "FAIL" in out
    assert "reason:" in out


def test_eval_parameters_bit_for_bit():
    code, out, _ = run("eval", "4.231.7", "--param", "n=1", "--param", "a=3", "--param", "b=2", "--json")
    assert code == 0
    assert json.loads(out)["value"] == basis.entry_42317(1, 3.0, 2.0)


def test_eval_angle_parameter():
    code, out, _ = run("eval", "4.227.1", "--param", "u=pi/8")
    assert code == 0
    assert out.startswith("4.227.1(u=0.392699081698724) = ")


def test_reduce_plain_and_explain():
    code, out, _ = run("reduce", "ln(x)/(x+1)", "--upper", "1")
    assert (code, out) == (0, "-0.822467033424113\n")
    code, out, _ = run("reduce", "ln(x)/((x+1)*(x^2+1))", "--upper", "inf", "--explain")
    assert code == 0
    assert "[half-line]" in out
    assert out.splitlines()[-1].startswith("value = ")


def test_reduce_json():
    code, out, _ = run("reduce", "x*ln(x)/(x+1)", "--upper", "1", "--json")
    doc = json.loads(out)
    assert code == 0
    assert [t["call"] for t in doc["terms"]] == ["poly_log", "h1"]


def test_quad_command():
    code, out, _ = run("quad", "ln(x)/(x+1)", "--upper", "1")
    assert code == 0
    assert out.startswith("value=-0.822467033424113 ")
    assert out.rstrip().endswith("converged=yes")


def test_constants_command():
    code, out, _ = run("constants")
    assert code == 0
    assert any(line.startswith("G ") for line in out.splitlines())


@pytest.mark.parametrize("argv", [
    ("show", "9.9.9"),
    ("reduce", "ln(x)/(x-1)", "--upper", "1"),
    ("reduce", "ln(x)/(x+1", "--upper", "1"),
    ("reduce", "ln(x)/(x+1)", "--upper", "inf"),
    ("reduce", "ln(x)/(x+1)", "--upper", "-2"),
    ("eval", "4.231.7", "--param", "n=-1"),
    ("verify",),
    ("frobnicate",),
    (),
])
def test_usage_errors_exit_2(argv):
    code, _, err = run(*argv)
    assert code == 2
    assert "error" in err


def test_parse_error_points_at_column():
    code, _, err = run("reduce", "ln(x)/(x+1", "--upper", "1")
    assert code == 2
    assert "^" in err
