import csv
import json

import pytest

from dynforge.cli import EXIT_CONFIG, EXIT_MISMATCH, EXIT_OK, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.strip()]


def test_verify_orbit_ratio(capsys):
    code, (rec,) = run_cli(
        capsys, "verify-orbit", "--degree", "2", "--map-type", "poly", "--orbit", "0,-2,1,-3",
        "--expect-map", "1/6z^2 - 7/6z - 2", "--expect-score", "0.006604",
    )
    assert code == EXIT_OK and rec["verified"]
    assert rec["classification"]["status"] == "wandering"
    assert rec["dynamical_compression"] is False


def test_verify_orbit_preperiodic(capsys):
    code, (rec,) = run_cli(
        capsys, "verify-orbit", "--degree", "2", "--map-type", "polynomial", "--orbit", "[0,1,-1,2]",
        "--target", "preperiodic", "--expect-count", "9", "--expect-mn", "2,3",
    )
    assert code == EXIT_OK
    assert rec["score"] == -9
    assert rec["census"]["complete"]
    assert rec["canonical_height"]["value"] == 0.0


def test_verify_orbit_mismatch_exits_3(capsys):
    code, (rec,) = run_cli(
        capsys, "verify-orbit", "--degree", "2", "--map-type", "poly", "--orbit", "0,1,-1,2", "--expect-mn", "1,3",
    )
    assert code == EXIT_MISMATCH
    assert not rec["verified"] and rec["mismatches"]


def test_verify_orbit_bad_orbit(capsys):
    code, (rec,) = run_cli(capsys, "verify-orbit", "--degree", "2", "--map-type", "poly", "--orbit", "0,1,0,2")
    assert code == EXIT_MISMATCH
    assert rec["error"]["reason"]


def test_census_by_map(capsys):
    code, (rec,) = run_cli(capsys, "census", "--map", "z^2")
    assert code == EXIT_OK
    assert rec["count"] == 4 and rec["certified"]


def test_census_by_orbit(capsys):
    code, (rec,) = run_cli(capsys, "census", "--degree", "4", "--map-type", "poly", "--orbit", "0,-4,1,-3,-1,-5")
    assert code == EXIT_OK and rec["count"] == 7


def test_census_needs_input(capsys):
    assert main(["census"]) == EXIT_CONFIG


CONFIG = """map_type = 'poly'
degree = 2
population = 30
generations = 6
reset_interval = 3
bound = 8
target = 'cycle'
hall_of_fame_size = 4
"""


@pytest.fixture
def cfg_file(tmp_path):
    p = tmp_path / "small.cfg"
    p.write_text(CONFIG)
    return p


def _records(path):
    return [json.loads(line) for line in path.read_text().splitlines()]


def test_search_is_reproducible(cfg_file, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(["search", "--config", str(cfg_file), "--seed", "11", "--out", str(a)]) == EXIT_OK
    assert main(["search", "--config", str(cfg_file), "--seed", "11", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    recs = _records(a)
    assert [r["type"] for r in recs[:2]] == ["config", "generation"]
    assert [r["type"] for r in recs[-2:]] == ["hall_of_fame", "summary"]
    assert all(r["schema"] == 1 for r in recs)
    gens = [r for r in recs if r["type"] == "generation"]
    scores = [g["best_score"] for g in gens]
    assert scores == sorted(scores, reverse=True)
    assert recs[-1]["seed"] == 11 and recs[0]["config"]["seed"] == 11


def test_baseline_csv(cfg_file, tmp_path):
    out = tmp_path / "b.csv"
    assert main(["baseline", "--config", str(cfg_file), "--out", str(out)]) == EXIT_OK
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["evaluations", "ga_best", "random_best"]
    ga = [float(r[1]) for r in rows[1:]]
    rnd = [float(r[2]) for r in rows[1:] if r[2]]
    assert ga == sorted(ga, reverse=True)
    assert rnd == sorted(rnd, reverse=True)


def test_config_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("populaton = 5\n")
    assert main(["search", "--config", str(bad), "--out", str(tmp_path / "x.jsonl")]) == EXIT_CONFIG
    assert "populaton" in capsys.readouterr().err
    bad.write_text("survival = 0\n")
    assert main(["search", "--config", str(bad), "--out", str(tmp_path / "x.jsonl")]) == EXIT_CONFIG
