import csv
import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from mckay.cli import main, parse_spec, parse_spec_text
from mckay.errors import SpecSyntaxError
from mckay.report import dumps

from conftest import GOLDEN

SPECS = Path(__file__).parent / "specs"


# -- spec parsing ----------------------------------------------------------------

def test_parse_spec_examples():
    spec = parse_spec_text("kind=cyclic n=3 r=3 weights=1,1,1")
    assert (spec.kind, spec.n, spec.r, spec.weights) == ("cyclic", 3, 3, (1, 1, 1))
    spec = parse_spec_text("kind=table path=data/binary_icosahedral.tbl")
    assert spec.path == "data/binary_icosahedral.tbl"
    spec = parse_spec(SPECS / "not_sl.spec")  # multi-line with a comment
    assert spec.weights == (1, 1, 2)


@pytest.mark.parametrize("text", ["kind=cyclic n=3 r=3", "kind=cyclic n=3 r=x weights=1,1,1",
                                  "n=3", "kind=cyclic kind=table", "kind=cyclic n=3 r=3 weights=1,,1",
                                  "kind=cyclic bogus"])
def test_parse_spec_errors(text):
    with pytest.raises(SpecSyntaxError):
        parse_spec_text(text)


# -- report and golden files --------------------------------------------------------

@pytest.mark.parametrize("name", ["z3_111", "binary_icosahedral"])
def test_report_matches_golden(name, tmp_path, capsys):
    assert main(["report", str(SPECS / f"{name}.spec"), "-o", str(tmp_path)]) == 0
    for fname in ("report.json", "quiver.dot"):
        assert (tmp_path / fname).read_bytes() == (GOLDEN / name / fname).read_bytes()


def test_golden_z3_audit():
    # hand-checked values; the golden file itself must carry them
    d = json.loads((GOLDEN / "z3_111" / "report.json").read_text())
    assert d["pairing_matrix"] == [["0", "-1/3"], ["1/3", "0"]]
    assert d["cartan"]["extended"] == [["0", "3", "-3"], ["-3", "0", "3"], ["3", "-3", "0"]]
    assert d["eta"]["table"][0] == ["0", "1/9", "-1/9"]
    assert d["eta"]["per_irrep"] == ["0", "-1/9", "1/9"]
    assert d["eta"]["chain_matches"] is True
    assert d["eta"]["chain"][1][1] == "-2/3" and d["eta"]["chain"][1][2] == "1/3"
    assert d["adjacency"]["a"] == [[0, 3, 0], [0, 0, 3], [3, 0, 0]]
    assert d["kappa"]["zero_border"] is True and d["kappa"]["sign"] in (1, -1)
    assert d["free"] is True and d["ade"] is None


def test_golden_icosahedral_audit():
    d = json.loads((GOLDEN / "binary_icosahedral" / "report.json").read_text())
    assert d["ade"] == "E8"
    assert d["group"]["order"] == 120
    assert sorted(d["group"]["dims"]) == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    assert d["eta"] is None and d["adjacency"]["b"] is None
    assert '"ade": "E8"' in (GOLDEN / "binary_icosahedral" / "report.json").read_text()


def test_report_is_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    main(["report", str(SPECS / "z3_111.spec"), "-o", str(a)])
    main(["report", str(SPECS / "z3_111.spec"), "-o", str(b)])
    assert (a / "report.json").read_bytes() == (b / "report.json").read_bytes()


def test_report_n2_cyclic(tmp_path):
    assert main(["report", str(SPECS / "z2_11.spec"), "-o", str(tmp_path)]) == 0
    d = json.loads((tmp_path / "report.json").read_text())
    assert d["ade"] == "A1"
    assert d["pairing_matrix"] == [["1/2"]]


# -- exit codes -----------------------------------------------------------------------

@pytest.mark.parametrize("args,code,message", [
    (["report", str(SPECS / "not_sl.spec")], 3, "not in SL"),
    (["report", str(SPECS / "non_isolated.spec")], 3, "non-isolated singularity"),
    (["eta", str(SPECS / "non_isolated.spec")], 3, "non-isolated singularity"),
    (["report", str(SPECS / "bad_syntax.spec")], 2, "must be an integer"),
    (["report", str(SPECS / "missing.spec")], 2, "cannot read spec"),
    (["cartan", "kind=table path=nowhere.tbl"], 3, "not found"),
    (["spectrum", "-n", "2", "--cutoff", "abc"], 2, ""),
    (["frobnicate"], 2, ""),
])
def test_error_exit_codes(args, code, message, tmp_path, capsys):
    assert main(args + (["-o", str(tmp_path)] if args[0] == "report" else [])) == code
    assert message in capsys.readouterr().err


def test_flow_nonconvergence_exit_code(tmp_path, capsys):
    code = main(["flow", str(SPECS / "z2_11.spec"), "--max-iters", "1", "--target", "50",
                 "-o", str(tmp_path)])
    assert code == 4
    assert "did not converge" in capsys.readouterr().err


def test_invariant_violation_exit_code(monkeypatch, capsys):
    from mckay import cli
    from mckay.errors import InvariantViolation

    def broken(_):
        raise InvariantViolation("singular Cartan matrix")
    monkeypatch.setattr(cli, "cartan_section", broken)
    assert main(["cartan", str(SPECS / "z3_111.spec")]) == 5
    assert "singular Cartan matrix" in capsys.readouterr().err


def test_console_script_exit_code():
    proc = subprocess.run([sys.executable, "-m", "mckay.cli", "report", str(SPECS / "not_sl.spec")],
                          capture_output=True, text=True)
    assert proc.returncode == 3
    assert "not in SL" in proc.stderr


# -- other subcommands --------------------------------------------------------------------

def test_quiver_dot(capsys):
    assert main(["quiver", str(SPECS / "z2_11.spec"), "--dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph") and out.count("->") == 4


def test_eta_and_cartan_output(capsys):
    assert main(["eta", str(SPECS / "z3_111.spec")]) == 0
    eta = json.loads(capsys.readouterr().out)
    assert eta["table"][0] == ["0", "1/9", "-1/9"]
    assert main(["cartan", str(SPECS / "z3_111.spec")]) == 0
    assert json.loads(capsys.readouterr().out)["inverse"] == [["0", "-1/3"], ["1/3", "0"]]


def test_spectrum(tmp_path, capsys):
    out_json = tmp_path / "spec.json"
    assert main(["spectrum", "-n", "2", "--cutoff", "5/2", "--json", str(out_json)]) == 0
    rows = [line.split("\t") for line in capsys.readouterr().out.strip().splitlines()]
    assert rows == [["-5/2", "6"], ["-3/2", "2"], ["3/2", "2"], ["5/2", "6"]]
    payload = json.loads(out_json.read_text())
    assert {f["family"] for f in payload["families"]} == {1, 2, 3}


@pytest.mark.parametrize("spec,dim", [("z2_11", 4), ("z3_111", 6)])
def test_flow(spec, dim, tmp_path, capsys):
    assert main(["flow", str(SPECS / f"{spec}.spec"), "-o", str(tmp_path)]) == 0
    payload = json.loads((tmp_path / "flow.json").read_text())
    assert payload["quotient_dim"] == dim and payload["dim_matches"]
    assert payload["residual"] <= 1e-10
    with open(tmp_path / "flow.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["iteration", "mu_error", "n_residual", "step"]
    assert int(rows[-1][0]) == payload["iterations"]


def test_flow_seeded_start_reproducible(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert main(["flow", str(SPECS / "z3_111.spec"), "--seed", "7", "-o", str(out)]) == 0
    assert (a / "flow.csv").read_bytes() == (b / "flow.csv").read_bytes()


def test_mckay_data_override(tmp_path, monkeypatch, capsys):
    from mckay.groups import data_dir

    shutil.copy(data_dir() / "binary_tetrahedral.tbl", tmp_path / "custom.tbl")
    monkeypatch.setenv("MCKAY_DATA", str(tmp_path))
    assert main(["cartan", "kind=table path=custom.tbl"]) == 0
    assert json.loads(capsys.readouterr().out)["mode"] == "classical-n2"


def test_dumps_float_format():
    text = dumps({"x": 0.1, "y": float("inf"), "z": [1.0, "0.5"]})
    d = json.loads(text)
    assert '"x": 0.10000000000000001' in text
    assert d["y"] is None and d["z"] == [1, "0.5"]
