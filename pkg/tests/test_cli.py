import json

import pytest

from qfib.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_nf(capsys):
    assert run(capsys, "nf", "b*a") == (0, "b*a\n", "")
    code, out, _ = run(capsys, "nf", "a*d - q^-1*b*c")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "nf", "a*b", "--convention", "q")
    assert out == "q*b*a\n"
    code, out, _ = run(capsys, "nf", "a*b", "--q", "3/2")
    assert out == "(2/3)*b*a\n"


def test_nf_parse_error(capsys):
    code, out, err = run(capsys, "nf", "a*(b")
    assert code == 64
    assert "^" in err


def test_usage_errors(capsys):
    assert run(capsys, "check", "pair", "--model", "torus(1)")[0] == 64
    assert run(capsys, "check", "hopf", "--model", "so5")[0] == 64
    assert run(capsys, "check", "hopf", "--q", "1")[0] == 64
    assert run(capsys, "check", "hopf", "--cap", "1")[0] == 64
    assert run(capsys, "catalog", "--series", "X")[0] == 64
    assert run(capsys)[0] == 64
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64


def test_check_hopf(capsys):
    code, out, _ = run(capsys, "check", "hopf", "--cap", "3", "--output", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == "pass"
    assert {e["name"] for e in rep["entries"]} >= {"coassociativity", "counit law", "antipode law"}
    assert run(capsys, "check", "hopf", "--model", "torus(2)")[0] == 0


def test_check_lmap_specialized(capsys):
    code, out, _ = run(capsys, "check", "lmap", "--q", "2/1", "--cap", "4", "--window", "1")
    assert code == 0
    assert "pass" in out


def test_check_pair_small(capsys):
    code, out, _ = run(capsys, "check", "pair", "--cap", "4", "--window", "1", "--output", "json")
    assert code == 0
    assert json.loads(out)["meta"]["cap"] == 4


def test_inconclusive_exit(capsys):
    code, _, err = run(capsys, "check", "noncleft", "--model", "su3", "--cap", "2")
    assert code == 2
    assert "--cap" in err


def test_model_file(capsys, tmp_path, su2):
    path = tmp_path / "su2.txt"
    path.write_text(su2.hopf.dumps())
    assert run(capsys, "check", "hopf", "--model-file", str(path), "--cap", "2")[0] == 0
    assert run(capsys, "check", "hopf", "--model-file", str(tmp_path / "missing.txt"))[0] == 64


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--output", "json", "--series", "E")
    assert code == 0
    (entry,) = json.loads(out)
    assert entry["base"] == "𝕆P^2"
    code, out, _ = run(capsys, "catalog", "--family", "A Stiefel")
    assert code == 0 and "S^5" in out


def test_irreducible(capsys):
    code, out, _ = run(capsys, "irreducible", "--series", "C", "--rank", "3")
    assert (code, out) == (0, "C3: irreducible for S^c = {3}\n")
    code, out, _ = run(capsys, "irreducible", "A3:c={2}")
    assert code == 0 and out.endswith(": irreducible\n")
    assert run(capsys, "irreducible")[0] == 64


def test_output_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("QFIB_OUTPUT_DIR", str(tmp_path / "out"))
    code, out, _ = run(capsys, "catalog", "--output", "json")
    assert code == 0
    assert (tmp_path / "out" / "catalog.json").read_text() == out
