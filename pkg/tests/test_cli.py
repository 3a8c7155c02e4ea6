import csv
import io
import json

import pytest

from dlspec.cli import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, EXIT_USAGE, exit_status, main, parse_range
from dlspec.errors import ParseError
from dlspec.lemmas import LemmaVerdict, Status
from dlspec.spectra import cycle_radius_closed_form


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("6..9") == [6, 7, 8, 9]
    assert parse_range("5") == [5]
    with pytest.raises(ParseError):
        parse_range("9..6")
    with pytest.raises(ParseError):
        parse_range("a..b")


def test_spectrum_family_json(capsys):
    code, out, _ = run(capsys, "spectrum", "kite:n=6", "--format", "json")
    d = json.loads(out)
    assert code == EXIT_PASS
    assert abs(d["radius"] - 18.7130) <= 5e-4
    assert d["transmissions"] == [8, 11, 11, 8, 10, 14]
    assert d["residual"] < 1e-8


def test_spectrum_graph6(capsys):
    code, out, _ = run(capsys, "spectrum", "--graph6", "A_", "--format", "json")
    assert code == EXIT_PASS
    assert json.loads(out)["eigenvalues"] == pytest.approx([2, 0], abs=1e-12)


def test_spectrum_cycle_table(capsys):
    code, out, _ = run(capsys, "spectrum", "cycle:n=5")
    assert code == EXIT_PASS
    radius = float(next(l for l in out.splitlines() if l.startswith("radius")).split()[1])
    assert abs(radius - 8.6180) <= 5e-4


def test_spectrum_csv_matrix(capsys):
    code, out, _ = run(capsys, "spectrum", "path:n=3", "--format", "csv")
    assert out.splitlines() == ["3,-1,-2", "-1,2,-1", "-2,-1,3"]


def test_spectrum_errors(capsys):
    assert run(capsys, "spectrum", "--graph6", "A?")[0] == EXIT_USAGE  # disconnected
    assert run(capsys, "spectrum", "nonsense:1")[0] == EXIT_USAGE
    assert run(capsys, "spectrum", "--graph6", "A")[0] == EXIT_USAGE
    assert run(capsys, "spectrum")[0] == EXIT_USAGE


def test_verify_dl1(capsys):
    code, out, _ = run(capsys, "verify", "dl1", "--n", "6..9")
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == EXIT_PASS
    assert [l["status"] for l in lines] == ["PASS"] * 4
    quoted = {6: (17.6056, 18.7130), 7: (21.5311, 26.4296), 8: (30.0271, 35.3836), 9: (39.8211, 45.5731)}
    for l in lines:
        h, k = quoted[int(l["instance"][2:])]
        assert abs(l["margin"] - (k - h)) <= 1e-3


def test_verify_theorem(capsys):
    code, out, _ = run(capsys, "verify", "theorem", "--n", "3..8")
    assert code == EXIT_PASS
    for l in map(json.loads, out.splitlines()):
        assert l["status"] == "PASS"
        assert l["details"]["argmax_is_kite"] is True
        assert l["details"]["certificate"]["argmax"] == l["details"]["argmax"]


def test_verify_edge_add(capsys):
    code, out, _ = run(capsys, "verify", "edge-add", "--seed", "7", "--trials", "100")
    assert code == EXIT_PASS
    assert json.loads(out)["instances"] == 100


@pytest.mark.parametrize("lemma, rng", [("bound", "3..7"), ("path-shift", "5..9"), ("clique-shift", "5..9"),
                                        ("dl2", "4..8"), ("lambda-n-1", "3..5")])
def test_verify_other_lemmas(capsys, lemma, rng):
    code, out, _ = run(capsys, "verify", lemma, "--n", rng, "--format", "table")
    assert code == EXIT_PASS
    assert out.splitlines()[0].split()[:2] == ["lemma", "instance"]
    assert all(l.endswith("PASS") for l in out.splitlines()[1:])


def test_verify_out_file(capsys, tmp_path):
    p = tmp_path / "v.jsonl"
    code, out, _ = run(capsys, "verify", "dl2", "--n", "4..6", "--out", str(p))
    assert code == EXIT_PASS
    assert len(p.read_text().splitlines()) == 3
    assert "dl2" in out


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "nope")[0] == EXIT_USAGE
    assert run(capsys, "verify", "theorem", "--n", "3..20")[0] == EXIT_USAGE
    assert run(capsys, "verify", "dl1", "--n", "4..6")[0] == EXIT_USAGE
    assert run(capsys, "verify", "dl1", "--strict", "-1")[0] == EXIT_USAGE
    assert run(capsys, "bogus")[0] == EXIT_USAGE


def test_verify_inconclusive_with_huge_threshold(capsys):
    # a strict threshold larger than every gap turns PASS into INCONCLUSIVE, never FAIL
    code, out, _ = run(capsys, "verify", "dl1", "--n", "6", "--strict", "100")
    assert code == EXIT_INCONCLUSIVE
    assert json.loads(out)["status"] == "INCONCLUSIVE"


def test_exit_status_mapping():
    mk = lambda s: LemmaVerdict("x", "i", s, 0.0)
    assert exit_status([mk(Status.PASS)]) == EXIT_PASS
    assert exit_status([mk(Status.PASS), mk(Status.INCONCLUSIVE)]) == EXIT_INCONCLUSIVE
    assert exit_status([mk(Status.FAIL), mk(Status.INCONCLUSIVE)]) == EXIT_FAIL


def test_enumerate(capsys, tmp_path):
    code, out, err = run(capsys, "enumerate", "--n", "5")
    assert code == EXIT_PASS and len(out.splitlines()) == 5 and "5 unicyclic" in err
    assert run(capsys, "enumerate", "--n", "3")[1] == "Bw\n"
    a, b = tmp_path / "a.g6", tmp_path / "b.g6"
    run(capsys, "enumerate", "--n", "8", "--out", str(a))
    run(capsys, "enumerate", "--n", "8", "--shards", "4", "--out", str(b))
    assert a.read_bytes() == b.read_bytes() and len(a.read_bytes().splitlines()) == 89
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--format", "json")
    assert json.loads(out)["count"] == 13
    assert run(capsys, "enumerate", "--n", "13")[0] == EXIT_USAGE


def test_ceiling_env_override(capsys, monkeypatch):
    monkeypatch.setenv("DLSPEC_CEILING", "5")
    assert run(capsys, "enumerate", "--n", "6")[0] == EXIT_USAGE
    assert run(capsys, "enumerate", "--n", "5")[0] == EXIT_PASS


def test_plotdata(capsys):
    code, out, _ = run(capsys, "plotdata", "--n", "4..8")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_PASS and len(rows) == 5
    six = next(r for r in rows if r["n"] == "6")
    assert abs(float(six["lambda_kite"]) - 18.7130) <= 5e-4
    assert abs(float(six["lambda_h"]) - 17.6056) <= 5e-4
    for r in rows:
        assert float(r["lambda_cycle_closed_form"]) == float(f"{cycle_radius_closed_form(int(r['n'])):.12g}")
        assert r["max_over_enumeration"] == r["lambda_kite"]
    assert next(r for r in rows if r["n"] == "4")["lambda_h"] == ""
