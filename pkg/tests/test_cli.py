import json
import subprocess
import sys

import pytest

from latprim.cli import main
from latprim.constructors import load, to_text, zn_ideal_lattice
from latprim.maps import DELTA0, DELTA1, NONE, PHI0, PHI2, PHIOMEGA, radical, residual
from latprim.predicates import holds, is_prime_element, potent_holds


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_example_holds(capsys):
    code, out, _ = run(capsys, "check", "--lattice", "zn:24", "--b", "(2)", "--p", "(4)",
                       "--phi", "phi2", "--delta", "delta1")
    assert code == 0
    doc = json.loads(out)
    assert doc["holds"] is True and doc["phi"] == "phi2" and doc["delta"] == "delta1"


def test_check_false_exits_one_with_witnesses(capsys):
    code, out, _ = run(capsys, "check", "--lattice", "zn:24", "--b", "(2)", "--p", "(4)", "--phi", "phi2")
    assert code == 1
    doc = json.loads(out)
    assert doc["holds"] is False and doc["witnesses"] == ["(2)", "(6)"]


def test_check_npotent_and_pretty(capsys):
    code, out, _ = run(capsys, "check", "--lattice", "zn:30", "--b", "(3)", "--p", "(6)",
                       "--npotent", "2", "--pretty")
    assert code == 1
    assert out == "(3) 2-potent-delta0-primary to (6): fails (witnesses: (2), (10))\n"
    code, out, _ = run(capsys, "check", "--lattice", "zn:8", "--b", "(2)", "--p", "(4)", "--npotent", "2")
    assert code == 0 and json.loads(out)["npotent"] == 2


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--lattice", "zn:24", "--map", "phiomega", "--at", "(4)")
    assert code == 0 and json.loads(out)["result"] == "(8)"
    code, out, _ = run(capsys, "eval", "--lattice", "zn:24", "--residual", "(4),(2)", "--pretty")
    assert code == 0 and out == "(2)\n"
    code, out, _ = run(capsys, "eval", "--lattice", "zn:8", "--radical", "(4)", "--pretty")
    assert out == "(2)\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--lattice", "zn:24", "--b", "(5)", "--p", "(4)"],
        ["check", "--lattice", "zn:24", "--b", "(2)", "--p", "(1)"],
        ["check", "--lattice", "zn:24", "--b", "(2)", "--p", "(4)", "--phi", "phiX"],
        ["check", "--lattice", "zn:24", "--b", "(2)", "--p", "(4)", "--delta", "phi2"],
        ["check", "--lattice", "zn:24", "--b", "(2)", "--p", "(4)", "--npotent", "1"],
        ["check", "--lattice", "zn:24", "--b", "(2)", "--p", "(4)", "--npotent", "2", "--phi", "phi2"],
        ["check", "--lattice", "nowhere.lat", "--b", "(2)", "--p", "(4)"],
        ["eval", "--lattice", "zn:24", "--map", "phi2"],
        ["eval", "--lattice", "zn:24", "--residual", "(4)"],
        ["eval", "--lattice", "zn:24", "--radical", "(4)", "--map", "phi2", "--at", "(4)"],
        ["suite", "--family", "zn:0..3"],
        ["suite", "--family", "zn:2..5", "--deltas", "none"],
        ["suite", "--family", "zn:2..5", "--phis", ""],
        ["search", "--family", "zn:2..5", "--claim", "converse of NOTHING"],
        ["validate", "nowhere.lat"],
        ["build", "zn:1"],
        ["frobnicate"],
        ["check", "--lattice", "zn:24", "--bogus"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("latprim: error: ") and err.count("\n") == 1


def test_build_and_validate_round_trip(tmp_path, capsys):
    path = tmp_path / "z24.lat"
    code, out, _ = run(capsys, "build", "zn:24", "-o", str(path))
    assert code == 0 and json.loads(out)["order"] == 8
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0 and json.loads(out)["ok"] is True

    mem, disk = zn_ideal_lattice(24), load(str(path))
    E = mem.elements
    for a in E:
        assert radical(mem, a) == radical(disk, a)
        for b in E:
            assert residual(mem, a, b) == residual(disk, a, b)
            for p in E:
                if p == mem.top:
                    continue
                for phi in (NONE, PHI0, PHI2, PHIOMEGA):
                    for delta in (DELTA0, DELTA1):
                        assert holds(mem, a, p, phi, delta) == holds(disk, a, p, phi, delta)
                assert potent_holds(mem, a, p, 2, DELTA0) == potent_holds(disk, a, p, 2, DELTA0)
        if a != mem.top:
            assert is_prime_element(mem, a).holds == is_prime_element(disk, a).holds


def test_build_to_stdout(capsys):
    code, out, _ = run(capsys, "build", "zn:8")
    assert code == 0 and out.startswith("LATTICE 4\n")


def test_validate_reports_axiom_failure(tmp_path, capsys):
    L = zn_ideal_lattice(6)
    rows = [[L.names[v] for v in r] for r in L.mul_table]
    i, j = L.index("(2)"), L.index("(3)")
    rows[i][j] = rows[j][i] = "(1)"
    doc = to_text(L).split("MUL\n")[0] + "MUL\n" + "".join(" ".join(r) + "\n" for r in rows)
    path = tmp_path / "bad.lat"
    path.write_text(doc)
    code, out, err = run(capsys, "validate", str(path))
    assert code == 2
    assert err.startswith("latprim: error: ") and err.count("\n") == 1
    report = json.loads(out)
    assert report["ok"] is False
    assert {f["axiom"] for f in report["failures"]} >= {"mul-associative", "ab ≤ a∧b"}
    assert all(f["witness"] for f in report["failures"])
    code, out, _ = run(capsys, "validate", str(path), "--pretty")
    assert out.startswith(f"{path}: INVALID\n")


@pytest.mark.parametrize(
    "doc, needle",
    [("LATTICE 2\nELEMENTS\n0\n", "ELEMENTS"), ("LATTICE two\n", "line 1")],
)
def test_validate_parse_error_exits_two(tmp_path, capsys, doc, needle):
    path = tmp_path / "broken.lat"
    path.write_text(doc)
    code, out, err = run(capsys, "validate", str(path))
    assert code == 2 and out == ""
    assert needle in err and err.count("\n") == 1


def test_suite_json_out(tmp_path, capsys):
    out_path = tmp_path / "suite.json"
    code, out, _ = run(capsys, "suite", "--family", "zn:2..12", "--json-out", str(out_path))
    assert code == 0
    summary = json.loads(out)
    assert "verdicts" not in summary and summary["ok"] is True
    full = json.loads(out_path.read_text())
    assert full["lattices"] == 11 and full["verdicts"]


def test_suite_pretty(capsys):
    code, out, _ = run(capsys, "suite", "--family", "zn:8..9", "--phis", "phi0,phi2,none", "--pretty")
    assert code == 0
    assert out.startswith("family zn:8..9: 2 lattices, OK\n")
    assert "QUASILOCAL-MSQUARE" in out


def test_search_cli(capsys):
    code, out, _ = run(capsys, "search", "--claim", "converse of IDEMPOTENT-VACUOUS",
                       "--family", "zn:2..8", "--phis", "phi2", "--deltas", "delta1")
    assert code == 0
    doc = json.loads(out)
    assert doc["found"] and doc["hits"][-1]["lattice"] == "zn:8"
    code, out, _ = run(capsys, "search", "--claim", "CHARACTERIZATION", "--family", "zn:2..10")
    assert code == 0 and json.loads(out)["found"] is False


def test_outputs_are_byte_deterministic(capsys):
    argv = ["suite", "--family", "zn:20..30", "--phis", "phi0,phi2,phiN:3,phiomega,none"]
    first = run(capsys, *argv)
    assert first == run(capsys, *argv)
    argv = ["search", "--claim", "REMARK-NPOTENT-PROBE", "--family", "zn:2..20"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "latprim", "eval", "--lattice", "zn:24", "--map", "phiomega", "--at", "(4)", "--pretty"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "(8)\n"
