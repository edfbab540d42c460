import json
import subprocess
import sys

import pytest

from qaknots.cli import parse_range, run, UsageError

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def out(capsys, argv, code=0):
    assert run(argv) == code
    return capsys.readouterr()


def test_det_family(capsys):
    assert out(capsys, ["det", "--family", "L(a=1,b=1,c=1:*,*,*)"]).out.strip() == "400"
    r = out(capsys, ["det", "--json", "--family", "L(a=2,b=1,c=1:0,*,*)"])
    assert json.loads(r.out) == {"det": 2 * 3 * 29}


def test_det_pd_both_colours(capsys):
    for colour in "AB":
        assert out(capsys, ["det", "--pd", TREFOIL, "--color", colour]).out.strip() == "3"


def test_homology(capsys):
    r = out(capsys, ["homology", "--pretzel", "3,3,3", "--json"])
    assert json.loads(r.out)["invariant_factors"] == [3, 9]
    assert "Z/3 + Z/9" in out(capsys, ["homology", "--pretzel", "3,3,3"]).out


def test_generate_then_det(tmp_path, capsys):
    path = tmp_path / "g.json"
    out(capsys, ["generate", "--a", "1", "--b", "2", "--c", "1", "-o", str(path)])
    assert out(capsys, ["det", "--graph", str(path)]).out.strip() == str(29 ** 2)


def test_resolve_outputs_graph(capsys):
    r = out(capsys, ["resolve", "--family", "L(a=1,b=1,c=1:inf,inf,inf)"])
    assert json.loads(r.out)["vertices"] == 7


def test_certify_and_verify(tmp_path, capsys):
    path = tmp_path / "cert.json"
    out(capsys, ["certify", "--guided", "--family", "L(a=2,b=1,c=1:*,*,*)", "-o", str(path)])
    r = out(capsys, ["verify-cert", str(path), "--json"])
    assert json.loads(r.out)["valid"] is True

    doc = json.loads(path.read_text())
    doc["root"]["det"] += 1
    path.write_text(json.dumps(doc))
    r = out(capsys, ["verify-cert", str(path)], code=2)
    assert r.out.startswith("INVALID: AdditivityViolation")


def test_certify_unguided_pd(capsys):
    r = out(capsys, ["certify", "--pd", TREFOIL])
    assert json.loads(r.out)["root"]["kind"] == "alternating"


def test_certify_failure_exit_code(capsys):
    r = out(capsys, ["certify", "--family", "L(a=1,b=1,c=1:*,*,*)", "--max-nodes", "1"], code=2)
    assert json.loads(r.err)["reason"] == "BudgetExhausted"


def test_tables_and_lemma52(capsys):
    r = out(capsys, ["tables", "--range", "1..2", "--json"])
    doc = json.loads(r.out)
    assert doc["all_match"] and len(doc["rows"]) == 16 * 4
    assert "confirmed" in out(capsys, ["lemma52", "--range", "1..2"]).out


def test_range_cap(capsys):
    r = out(capsys, ["tables", "--range", "1..9"], code=1)
    assert "cap" in r.err
    assert parse_range("2..4") == [2, 3, 4] and parse_range("5") == [5]
    with pytest.raises(UsageError):
        parse_range("4..2")


def test_pd2graph(capsys):
    g = json.loads(out(capsys, ["pd2graph", TREFOIL, "--color", "B"]).out)
    assert g["vertices"] == 2 and len(g["edges"]) == 3


def test_usage_errors(capsys):
    out(capsys, ["det"], code=1)
    out(capsys, ["det", "--family", "L(a=0,b=1,c=1)"], code=1)
    out(capsys, ["det", "--pd", "X(1,2,3)"], code=1)
    out(capsys, ["certify", "--guided", "--pretzel", "3,3,3"], code=1)
    out(capsys, ["bogus"], code=1)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qaknots.cli", "det", "--pretzel", "3,3,3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "27"
