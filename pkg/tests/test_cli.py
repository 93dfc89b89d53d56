import csv
import io
import json
import subprocess
import sys

import pytest

from genphi.cli import main
from genphi.conjecture import BUILTIN, perturbed


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_compute_twelve():
    code, text = run("compute", "--e", "12", "24")
    assert code == 0
    assert "phi=1" in text


def test_compute_all_methods_agree():
    code, text = run("compute", "--e", "8", "15", "--all-methods")
    assert code == 0
    assert "Definition=1 MobiusSum=1 ClosedForm=1" in text
    assert "parity=Odd" in text


def test_compute_brute_limit_skips_counting():
    code, text = run("compute", "--e", "3", "1000003", "--all-methods", "--brute-limit", "10")
    assert code == 0
    assert "Definition=skipped" in text


def test_compute_large_n():
    code, text = run("compute", "--e", "12", str(2**61 - 1))
    assert code == 0
    assert "phi=" in text


def test_table_csv():
    code, text = run("table", "--e", "8", "--from", "1", "--to", "20")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["n", "phi", "parity", "rule", "branch"]
    assert len(rows) == 20
    by_n = {int(r["n"]): r for r in rows}
    assert by_n[8]["phi"] == "1" and by_n[8]["parity"] == "Odd"
    assert by_n[15]["phi"] == "1"
    assert by_n[7]["phi"] == "0"


def test_table_tsv_and_json_agree():
    _, tsv = run("table", "--e", "12", "--from", "10", "--to", "30", "--format", "tsv")
    _, js = run("table", "--e", "12", "--from", "10", "--to", "30", "--format", "json")
    tsv_rows = list(csv.DictReader(io.StringIO(tsv), delimiter="\t"))
    js_rows = json.loads(js)
    assert [int(r["phi"]) for r in tsv_rows] == [r["phi"] for r in js_rows]
    assert [r["n"] for r in js_rows] == list(range(10, 31))


def test_table_is_bit_stable():
    assert run("table", "--e", "12", "--to", "200") == run("table", "--e", "12", "--to", "200")


def test_table_empty_range():
    code, text = run("table", "--e", "8", "--from", "5", "--to", "4")
    assert code == 0
    assert text.strip() == "n,phi,parity,rule,branch"


def test_table_bad_range():
    code, _ = run("table", "--e", "8", "--from", "10", "--to", "3")
    assert code == 2


@pytest.mark.parametrize("e", [8, 12])
def test_verify_ok(e):
    code, text = run("verify", "--e", str(e), "--max", "3000")
    assert code == 0
    assert "mismatches: 0" in text
    assert "branch coverage:" in text


def test_verify_jobs_matches_serial():
    _, one = run("verify", "--e", "12", "--max", "4000", "--oracle", "mobius")
    code, two = run("verify", "--e", "12", "--max", "4000", "--oracle", "mobius", "--jobs", "2")
    assert code == 0
    strip = lambda s: [ln for ln in s.splitlines() if not ln.startswith("verify ")]
    assert strip(one) == strip(two)


def test_verify_other_e():
    code, text = run("verify", "--e", "5", "--max", "2000", "--oracle", "brute")
    assert code == 0
    assert "2000 vs Definition" in text


def test_conjecture_builtin():
    code, text = run("conjecture", "--e", "8", "--d-max", "10000")
    assert code == 0
    assert "built-in representation e=8" in text


def test_conjecture_rep_file_failure(tmp_path):
    path = tmp_path / "rep.json"
    path.write_text(perturbed(BUILTIN[8], a2=-3).to_json(), encoding="utf-8")
    code, text = run("conjecture", "--e", "8", "--d-max", "100", "--rep-file", str(path))
    assert code == 1
    assert "file representation" in text


def test_conjecture_search():
    code, text = run("conjecture", "--e", "8", "--search", "--max-terms", "1", "--d-max", "5000")
    assert code == 0
    assert "search e=8: found" in text


def test_conjecture_without_builtin():
    code, text = run("conjecture", "--e", "5")
    assert code == 0
    assert "no built-in" in text


def test_conjecture_small_e_is_usage_error():
    assert run("conjecture", "--e", "1")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--e", "0", "5"],
        ["compute", "--e", "8", "-3"],
        ["table", "--e", "8", "--to", "x"],
        ["verify", "--e", "8", "--max", "10", "--oracle", "guess"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "genphi", "compute", "--e", "12", "12"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "phi=1" in proc.stdout
