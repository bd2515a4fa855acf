import json
import subprocess
import sys

import pytest

from xipos.cli import build_parser, run
from xipos.zero_catalog import fixture_path

ZEROS100 = str(fixture_path("zeros100.txt"))
ZEROS1000 = str(fixture_path("zeros1000.txt"))


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else None)


def strip_time(report):
    report = dict(report)
    report.pop("wall_time_ms")
    return report


def test_report_shape(capsys):
    code, rep = invoke(capsys, "verify", "thresholds")
    assert code == 0
    assert rep["schema"] == "1"
    assert rep["command"] == "verify thresholds"
    assert rep["passed"] + rep["failed"] == len(rep["checks"]) == 4
    assert isinstance(rep["wall_time_ms"], int)


def test_counting_sweep(capsys):
    code, rep = invoke(capsys, "verify", "lemma2", "--zeros", ZEROS100, "--t-max", "100", "--step", "0.5")
    assert code == 0 and rep["failed"] == 0 and rep["passed"] == 195


def test_kernel_positivity_value(capsys):
    code, rep = invoke(capsys, "verify", "lemma3", "--t", "23")
    assert code == 0
    assert abs(rep["values"]["F"] - 0.00092) <= 5e-5


@pytest.mark.parametrize("check", ["lemma4", "lemma5", "lemma6"])
def test_envelope_checks(capsys, check):
    code, rep = invoke(capsys, "verify", check)
    assert code == 0 and rep["failed"] == 0


def test_sum_containment_and_upper_bound(capsys):
    assert invoke(capsys, "verify", "lemma8", "--zeros", ZEROS1000, "--t", "500", "--a", "1", "--b", "2")[0] == 0
    code, rep = invoke(
        capsys, "verify", "theorem1-upper", "--zeros", ZEROS1000, "--sigma", "0.55,0.99", "--t", "20,1000"
    )
    assert code == 0 and rep["passed"] == 4


def test_check_failure_exit_code(capsys):
    # kappa too small: F(23) turns negative
    code, rep = invoke(capsys, "verify", "lemma3", "--t", "23", "--kappa", "0.1")
    assert code == 1 and rep["failed"] == 1


def test_eval(capsys):
    code, rep = invoke(capsys, "eval", "xi", "--sigma", "0.5", "--t", "0")
    assert code == 0 and abs(rep["values"]["re"] - 0.4971207781883141) < 1e-13
    code, rep = invoke(capsys, "eval", "xilogderiv", "--sigma", "2", "--t", "30", "--route", "zerosum", "--zeros", ZEROS100)
    zs = rep["values"]
    _, rep = invoke(capsys, "eval", "xilogderiv", "--sigma", "2", "--t", "30")
    d = rep["values"]
    assert abs(complex(zs["re"], zs["im"]) - complex(d["re"], d["im"])) <= zs["tail_bound"]


def test_ingest(capsys, tmp_path):
    code, rep = invoke(capsys, "ingest", "--zeros", ZEROS100)
    assert code == 0 and rep["values"]["count"] == 100 and rep["values"]["flagged"] == []
    bad = tmp_path / "bad.txt"
    bad.write_text("14.134725\n15.0\n21.022040\n")
    code, rep = invoke(capsys, "ingest", "--zeros", str(bad))
    assert code == 1 and rep["values"]["flagged"][0]["index"] == 1


def test_env_default_table(capsys, monkeypatch, tmp_path):
    bad = tmp_path / "broken.txt"
    bad.write_text("21.0\n14.1\n")
    monkeypatch.setenv("XIPOS_ZEROS", str(bad))
    assert run(["ingest"]) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["ingest", "--zeros", "/nonexistent/zeros.txt"],
        ["eval", "xilogderiv", "--sigma", "2", "--t", "500", "--route", "zerosum", "--zeros", ZEROS100],
        ["eval", "xi", "--sigma", "0.5", "--t", "5000"],
    ],
)
def test_data_errors(capsys, argv):
    assert run(argv) == 3


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["verify", "lemma9"],
        ["eval", "xi", "--sigma", "x", "--t", "1"],
        ["region", "--format", "csv", "--out", "x.csv"],
        ["region", "--preset", "one-zero", "--grid", "1,2,3", "--format", "csv", "--out", "x.csv"],
    ],
)
def test_usage_errors(capsys, argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert run(argv) == 2


def test_region(capsys, tmp_path):
    out = tmp_path / "r.csv"
    code, rep = invoke(capsys, "region", "--preset", "one-zero", "--format", "csv", "--out", str(out))
    assert code == 0 and out.exists()
    assert len(out.read_text().splitlines()) == 100 * 100 + 1
    assert rep["values"]["unsatisfied_components"] == 1


def test_region_inline(capsys, tmp_path):
    out = tmp_path / "r.svg"
    code, rep = invoke(
        capsys, "region", "--zeros-inline", "0.8,3000;0.7,3100", "--grid", "0.52,0.98,2900,3200,40,60",
        "--c", "0.7", "--format", "svg", "--out", str(out),
    )
    assert code == 0 and rep["parameters"]["scenario"] == "finite"
    assert out.read_text().count("<rect") == 40 * 60 + 1


def test_deterministic(capsys):
    _, a = invoke(capsys, "verify", "lemma5", "--t", "1000")
    _, b = invoke(capsys, "verify", "lemma5", "--t", "1000")
    assert strip_time(a) == strip_time(b)


def _subcommand_paths():
    parser = build_parser()
    yield []
    for action in parser._subparsers._group_actions:
        for name, sub in action.choices.items():
            yield [name]
            if sub._subparsers is not None:
                for sa in sub._subparsers._group_actions:
                    for inner in sa.choices:
                        yield [name, inner]


@pytest.mark.parametrize("path", list(_subcommand_paths()), ids=lambda p: " ".join(p) or "root")
def test_help(capsys, path):
    assert run(path + ["--help"]) == 0
    assert "usage:" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "xipos", "verify", "thresholds"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"] == 4
