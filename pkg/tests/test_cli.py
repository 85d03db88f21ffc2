from __future__ import annotations

import json

from hopfsperner.cli import main
from hopfsperner.io import load_triangulation


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_mu(capsys):
    code, out = run(capsys, "mu", "--d", "2")
    assert code == 0
    assert (out["lower"], out["upper"], out["exact"]) == (9, 9, 9)


def test_generate_then_hopf(capsys, tmp_path):
    path = tmp_path / "h1.json"
    code, _ = run(capsys, "generate", "h1", "--out", str(path))
    assert code == 0 and path.exists()
    code, out = run(capsys, "hopf", str(path), "--manifest", str(tmp_path / "m.json"))
    assert code == 0 and out["H"] == 1
    manifest = json.loads((tmp_path / "m.json").read_text())
    assert str(path) in manifest["inputs"]


def test_garbage_input(capsys, tmp_path):
    bad = tmp_path / "garbage.json"
    bad.write_text("{not json")
    code, out = run(capsys, "validate", str(bad))
    assert code == 2 and "error" in out


def test_usage_error(capsys):
    code, out = run(capsys, "nonsense")
    assert code == 2 and out["kind"] == "usage"
    code, out = run(capsys, "generate", "hd")
    assert code == 2 and out["kind"] == "usage"


def test_random_disc_round_trip(capsys, tmp_path):
    path = tmp_path / "disc.json"
    code, _ = run(capsys, "generate", "randdisc", "--boundary", "ABCABCABC", "--seed", "3", "--steps", "20", "--out", str(path))
    assert code == 0
    lt = load_triangulation(path)
    assert lt.complex.dimension == 2
    code, out = run(capsys, "theoremA", str(path))
    assert code == 0 and out["invariant"] == 3 and out["observed"] >= 3


def test_consum_and_preimage(capsys, tmp_path):
    path = tmp_path / "s.json"
    run(capsys, "generate", "consum", "--left", "h1", "--right", "mirror:h1", "--out", str(path))
    code, out = run(capsys, "hopf", str(path))
    assert code == 0 and out["H"] == 0
    code, out = run(capsys, "preimage", str(path), "--facet", "ABC")
    assert code == 0 and out["facet"] == "ABC"


def test_info_and_degree(capsys, tmp_path):
    path = tmp_path / "h2.json"
    run(capsys, "generate", "h2", "--out", str(path))
    code, out = run(capsys, "info", str(path))
    assert code == 0 and out["euler_characteristic"] == 0
    assert out["homology"] == ["Z", "0", "0", "Z"]
    code, out = run(capsys, "degree", str(path))
    assert code == 2 and out["kind"] == "DimensionMismatch"
