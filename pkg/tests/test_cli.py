"""Command-line behavior: output formats, exit codes, determinism."""

import json
import subprocess
import sys
from pathlib import Path

from scrollcalc import cli
from scrollcalc.chow import ChowClass
from scrollcalc.cohomology import FormalSheaf

GOLDEN = Path(__file__).parent / "golden"


def run_cli(args):
    proc = subprocess.run(
        [sys.executable, "-m", "scrollcalc", *args],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def run_json(args, capsys):
    code = cli.main([*args, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_chi_line_bundle(capsys):
    assert cli.main(["chi", "--e", "0", "--a", "2", "--b", "2"]) == 0
    assert "18" in capsys.readouterr().out


def test_chi_instanton(capsys):
    code, data = run_json(
        ["chi", "--e", "1", "--a", "-1", "--b", "0", "--alpha", "3", "--beta", "2"],
        capsys,
    )
    assert code == 0 and data["chi"] == -3


def test_chow_subcommand_json(capsys):
    code, data = run_json(["chow", "--e", "2", "--a", "1", "--b", "-2"], capsys)
    assert code == 0
    assert data["delta_H"] == 1
    k = ChowClass.from_dict(data["constants"]["canonical"])
    assert k == ChowClass(2, xi=-2, f=-1)
    assert ChowClass.from_dict(data["divisor"]) == ChowClass(2, xi=1, f=-2)


def test_coh_subcommand(capsys):
    code, data = run_json(["coh", "--e", "1", "--a", "1", "--b", "0"], capsys)
    assert code == 0 and data["h"] == [4, 0, 0, 0] and data["chi"] == 4
    code, data = run_json(["coh", "--e", "2", "--a", "0", "--b", "0", "--omega"], capsys)
    assert code == 0 and data["h"] == [0, 1, 0, 0]
    sheaf = FormalSheaf.from_dict(data["sheaf"])
    assert sheaf.rank() == 2


def test_monad_json_checks(capsys):
    code, data = run_json(
        ["monad", "--e", "1", "--alpha", "1", "--beta", "2", "--variant", "1"], capsys
    )
    assert code == 0
    assert data["checks"] == {"rank": True, "c1": True, "c2": True, "chi": True}
    assert {t["kind"] for t in data["B"]} == {"line", "omega"}


def test_monad_golden_display():
    code, out, _ = run_cli(
        ["monad", "--e", "1", "--alpha", "1", "--beta", "2", "--variant", "1"]
    )
    assert code == 0
    assert out == (GOLDEN / "monad_e1_v1.txt").read_text()


def test_table_golden_display():
    code, out, _ = run_cli(
        ["table", "--e", "1", "--alpha", "1", "--beta", "2", "--variant", "1"]
    )
    assert code == 0
    assert out == (GOLDEN / "table_e1_v1.txt").read_text()


def test_existence_subcommand(capsys):
    code, data = run_json(["existence", "--e", "2", "--alpha", "3", "--beta", "0"], capsys)
    assert code == 0
    assert data["status"] == "exists" and data["ext1"] == 26


def test_stability_subcommand(capsys):
    code, data = run_json(
        ["stability", "--e", "0", "--window", "0", "0", "0", "0"], capsys
    )
    assert code == 0 and data["region"] == [[0, 0]]


def test_curves_subcommand(capsys):
    code, data = run_json(["curves", "--e", "2"], capsys)
    assert code == 0
    by_class = {c["class"]: c for c in data["curves"]}
    assert by_class["xif"]["degree_H"] == 3
    assert by_class["ff"]["hilbert_dim"] == 2


def test_inadmissible_parameters_exit_2():
    code, out, err = run_cli(
        ["monad", "--e", "0", "--alpha", "0", "--beta", "0", "--variant", "1"]
    )
    assert code == 2
    assert "violated bound" in err


def test_bad_flags_exit_2():
    code, _, _ = run_cli(["monad", "--e", "1", "--alpha", "1", "--beta", "1", "--variant", "9"])
    assert code == 2
    code, _, _ = run_cli(["nonsense"])
    assert code == 2


def test_ascii_fallback():
    code, out, _ = run_cli(
        ["monad", "--e", "1", "--alpha", "1", "--beta", "2", "--ascii"]
    )
    assert code == 0
    assert "Omega" in out and "Ω" not in out and "ξ" not in out


def test_verify_runs_clean_and_deterministic():
    code1, out1, _ = run_cli(["verify"])
    code2, out2, _ = run_cli(["verify"])
    assert code1 == code2 == 0
    assert out1 == out2
    assert "seed=" in out1 and "all suites passed" in out1


def test_verify_json_shape(capsys):
    code, data = run_json(["verify"], capsys)
    assert code == 0 and data["passed"] is True
    names = {s["name"] for s in data["suites"]}
    assert "chow-riemann-roch-cross" in names and "serialization-roundtrip" in names
