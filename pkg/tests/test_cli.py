import json
import subprocess
import sys

import pytest

from linedyn.cli import CASES, EXIT_PASS, EXIT_USAGE, main, orbit_lengths, run_case
from linedyn.errors import UnknownCase


def _lines(capsys):
    return [json.loads(l) for l in capsys.readouterr().out.splitlines() if l.strip()]


def test_unknown_case_raises():
    with pytest.raises(UnknownCase):
        run_case("nonexistent")


def test_unknown_case_exit_code(capsys):
    assert main(["verify", "--case", "nonexistent"]) == EXIT_USAGE


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as e:
        main(["verify", "--seed", "x"])
    assert e.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == EXIT_USAGE


def test_list(capsys):
    assert main(["verify", "--list"]) == EXIT_PASS
    ids = [l.split("\t")[0] for l in capsys.readouterr().out.splitlines()]
    assert ids == list(CASES)


@pytest.mark.parametrize("case", ["branch7", "tvectors7", "periodic8", "modular7", "multiplier8"])
def test_cases_pass(case):
    rep = run_case(case)
    assert rep["status"] == "pass", rep


def test_seed_determinism(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path in (a, b):
        assert main(["verify", "--case", "tvectors8", "--case", "multiplier7", "--seed", "5",
                     "--jobs", "1", "--json", str(path)]) in (0, 1)
    assert a.read_bytes() == b.read_bytes()
    reps = [json.loads(l) for l in a.read_text().splitlines()]
    assert [r["seed"] for r in reps] == [5, 5]


def test_failing_case_exit_code(monkeypatch, capsys):
    monkeypatch.setitem(CASES, "always_fails", (lambda rng: (False, {}), "fails"))
    assert main(["verify", "--case", "always_fails", "--jobs", "1"]) == 1
    assert _lines(capsys)[0]["status"] == "fail"


def test_dump(capsys):
    assert main(["dump", "--n", "8", "--what", "weierstrass"]) == EXIT_PASS
    out = _lines(capsys)[0]
    assert set(out) == {"a2", "a4", "a6"}
    assert main(["dump", "--n", "8", "--what", "sigma"]) == EXIT_USAGE


def test_orbit_of_the_periodic_point(capsys):
    assert main(["orbit", "--n", "8", "--p", "1013", "--point", "794,582,116"]) == EXIT_PASS
    rec = _lines(capsys)[0]
    assert rec["period"] == 1 and rec["reason"] == "periodic"


def test_orbit_rejects_points_off_the_surface(capsys):
    assert main(["orbit", "--n", "8", "--p", "1013", "--point", "1,2,3"]) == EXIT_USAGE


def test_scan_small_field(capsys):
    assert main(["scan", "--n", "8", "--p", "31"]) == EXIT_PASS
    out = _lines(capsys)[0]
    assert sum(int(k) * v for k, v in out["histogram"].items()) == out["domain"]


def test_orbit_lengths_cover_every_point():
    from linedyn.families import enumerate_surface_points

    rows = orbit_lengths(7, 13)
    assert sum(r["count"] for r in rows) == len(enumerate_surface_points(7, 13))


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "linedyn", "verify", "--list"], capture_output=True, text=True)
    assert r.returncode == 0 and "semiconj7" in r.stdout
