import csv
import io
import json
from fractions import Fraction

import pytest

from degbell.cli import main, stirling_rows, triangle_from_csv, triangle_from_json, triangle_to_csv, triangle_to_json
from degbell.exact import LambdaPoly
from degbell.stirling import SYMBOLIC

SMALL = ["--samples", "2", "--nmax", "2", "--r", "1", "--order", "10"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_examples(capsys):
    assert run(capsys, "eval", "bell", "--n", "1", "--lambda", "1/2", "--x", "1")[:2] == (0, "2/3\n")
    assert run(capsys, "eval", "phi", "--n", "3", "--x", "1")[:2] == (0, "5\n")
    code, _, err = run(capsys, "eval", "bell", "--n", "2", "--lambda", "-1", "--x", "1")
    assert code == 2 and "pole" in err


def test_eval_prefactor_note_and_json(capsys):
    code, out, _ = run(capsys, "eval", "bell-two-var", "--n", "2", "--lambda", "1/2", "--y", "3")
    assert code == 0 and "omitted prefactor" in out
    code, out, _ = run(capsys, "eval", "fubini", "--n", "3", "--lambda", "0", "--y", "0", "--format", "json")
    doc = json.loads(out)
    assert doc["value"] == "13" and doc["params"]["lambda"] == "0"


def test_parse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "bell", "--n", "1", "--x", "1/0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["stirling", "--nmax", "-1"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_stirling_examples(capsys):
    code, out, _ = run(capsys, "stirling", "--nmax", "3")
    assert code == 0
    row3 = list(csv.reader(io.StringIO(out)))[4]
    assert row3 == ["3", "[0]", "[1,-3,2]", "[3,-3]", "[1]"]
    _, out, _ = run(capsys, "stirling", "--nmax", "0")
    assert out.splitlines()[1:] == ["0,[1]"]
    _, out, _ = run(capsys, "stirling", "--nmax", "4", "--lambda", "0")
    assert out.splitlines()[5] == "4,0,1,7,6,1"


@pytest.mark.parametrize("lam", [SYMBOLIC, Fraction(2, 3), Fraction(-5)])
@pytest.mark.parametrize("r", [0, 2])
def test_triangle_round_trip(lam, r):
    rows = stirling_rows(9, r, lam)
    assert triangle_from_csv(triangle_to_csv(rows)) == rows
    assert triangle_from_json(triangle_to_json(rows, r, lam)) == rows
    if lam is SYMBOLIC:
        assert all(isinstance(v, LambdaPoly) for v in triangle_from_csv(triangle_to_csv(rows))[3])


def test_stirling_out_file(tmp_path, capsys):
    path = tmp_path / "t.json"
    assert run(capsys, "stirling", "--nmax", "5", "--r", "1", "--lambda", "1/2", "--format", "json", "--out", str(path))[0] == 0
    assert triangle_from_json(path.read_text()) == stirling_rows(5, 1, Fraction(1, 2))


def test_verify_is_byte_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "verify", *SMALL, "--seed", "3", "--out", str(a))[0] == 0
    assert run(capsys, "verify", *SMALL, "--seed", "3", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(json.loads(a.read_text())["reports"]) >= 9


def test_verify_mutation_exits_1(tmp_path, capsys):
    out = tmp_path / "m.json"
    code, summary, _ = run(capsys, "verify", *SMALL, "--inject-mutation", "stirling-sign", "--out", str(out))
    assert code == 1
    doc = json.loads(out.read_text())
    failed = [r for r in doc["reports"] if r["status"] == "fail"]
    assert failed and all(r["counterexample"] for r in failed)
    assert "FAIL" in summary


def test_dobinski_demo(capsys):
    code, out, _ = run(capsys, "dobinski-demo", "--n", "3", "--lambda", "0", "--x", "1", "--K", "60")
    assert code == 0 and "within" in out
    assert run(capsys, "dobinski-demo", "--n", "0", "--lambda", "1/3")[0] == 0
    assert run(capsys, "dobinski-demo", "--n", "2", "--lambda", "1/2", "--K", "120")[0] == 0
    assert run(capsys, "dobinski-demo", "--n", "2", "--lambda", "1", "--x", "1")[0] == 2
