import csv
import io
import json
import subprocess
import sys

import pytest

from cccspectra.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectra_examples(capsys):
    assert run(capsys, "spectra", "--family", "d2n", "--n", "5", "--matrix", "A") == (
        0, "1^1, 0^1, -1^1 | AGREE\n", "")
    assert run(capsys, "spectra", "--family", "q4m", "--m", "2", "--matrix", "L")[:2] == (
        0, "0^3 | AGREE\n")


def test_spectra_abelian_is_invalid(capsys):
    code, out, err = run(capsys, "spectra", "--family", "u", "--n", "2", "--m", "2")
    assert code == 2 and out == ""
    assert "abelian" in err


def test_spectra_disagreement_exits_3(capsys):
    code, out, _ = run(capsys, "spectra", "--family", "u", "--n", "2", "--m", "6")
    assert code == 3
    assert out.count("DISAGREE") == 3


@pytest.mark.parametrize("argv", [
    ["spectra", "--family", "d2n", "--n", "2"],
    ["spectra", "--family", "q4m", "--n", "3"],
    ["energies", "--family", "xyz", "--n", "3"],
    ["energies", "--family", "u", "--n", "3"],
    ["verify", "--families", "d2n,nope"],
])
def test_invalid_input_exits_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectra", "--family", "d2n", "--n", "5", "--matrix", "Z"])
    assert exc.value.code == 2


def test_energies_examples(capsys):
    code, out, _ = run(capsys, "energies", "--family", "sd8n", "--n", "2")
    assert code == 0
    assert "E: 4\n" in out and "LE: 36/5\n" in out and "LE+: 28/5\n" in out
    code, out, _ = run(capsys, "energies", "--family", "v8n", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["E"] == doc["LE"] == doc["LE_plus"] == "6"
    assert doc["ordering"] == "AllEqual"
    code, out, _ = run(capsys, "energies", "--family", "d2n", "--n", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["E"] == doc["LE"] == doc["LE_plus"] == "0"


def test_energies_reports_published_classification_disagreement(capsys):
    code, out, _ = run(capsys, "energies", "--family", "d2n", "--n", "7")
    assert code == 3
    assert "classification: borderL" in out
    assert "DISAGREE: classification" in out


def test_no_decimals_unless_approx(capsys):
    _, out, _ = run(capsys, "energies", "--family", "d2n", "--n", "10", "--format", "json")
    assert "." not in out
    _, out, _ = run(capsys, "energies", "--family", "d2n", "--n", "10", "--approx",
                    "--format", "json")
    doc = json.loads(out)
    assert doc["LE_plus"] == "22/3" and doc["LE_plus_approx"] == "7.333333"


def test_json_round_trip(capsys):
    for argv in (["energies", "--family", "q4m", "--m", "5", "--format", "json"],
                 ["spectra", "--family", "sd8n", "--n", "3", "--format", "json"],
                 ["verify", "--families", "v8n", "--max-n", "4", "--format", "json"],
                 ["table", "--family", "d2n", "--n-from", "3", "--n-to", "6", "--format", "json"],
                 ["graph", "--family", "d2n", "--n", "6"]):
        _, out, _ = run(capsys, *argv)
        assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--families", "d2n", "--max-n", "3")
    assert code == 0 and out.startswith("instances checked: 1\n")
    code, out, _ = run(capsys, "verify", "--families", "d2n", "--max-n", "8")
    assert code == 3 and "Classification" in out


def test_table_examples(capsys):
    code, out, _ = run(capsys, "table", "--family", "d2n", "--n-from", "3", "--n-to", "14",
                       "--format", "md")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2 + 12
    assert lines[0].startswith("| group | n | m | shape |")

    code, out, _ = run(capsys, "table", "--family", "q4m", "--m-from", "2", "--m-to", "8",
                       "--format", "csv")
    assert "\r" not in out
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 7 and rows[0]["group"] == "Q8"

    code, out, _ = run(capsys, "table", "--family", "sd8n", "--n-from", "2", "--n-to", "5",
                       "--format", "csv")
    rows = {r["group"]: r for r in csv.DictReader(io.StringIO(out))}
    assert rows["SD40"]["classification"] == "hyperL,borderQ"


def test_table_empty_range(capsys):
    assert run(capsys, "table", "--family", "d2n", "--n-from", "9", "--n-to", "4")[0] == 2
    assert run(capsys, "table", "--family", "u", "--n-from", "2", "--n-to", "3")[0] == 2


def test_table_approx_and_text(capsys):
    _, out, _ = run(capsys, "table", "--family", "v8n", "--n-from", "2", "--n-to", "3", "--approx")
    header = out.splitlines()[0].split("\t")
    assert header[-3:] == ["E_approx", "LE_approx", "LE_plus_approx"]


def test_graph_export(capsys):
    code, out, _ = run(capsys, "graph", "--family", "q4m", "--m", "3", "--export", "edges")
    assert (code, out) == (0, "0 2\n1 3\n")
    code, out, _ = run(capsys, "graph", "--family", "v8n", "--n", "2")
    assert len(json.loads(out)["vertices"]) == 6


def test_output_deterministic(capsys):
    argv = ["table", "--family", "u", "--n-from", "2", "--n-to", "3", "--m-from", "3",
            "--m-to", "5", "--format", "csv"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cccspectra.cli", "spectra", "--family",
                           "d2n", "--n", "5", "--matrix", "A"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "1^1, 0^1, -1^1 | AGREE\n"
