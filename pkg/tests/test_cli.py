import json
import os
import subprocess
import sys

import pytest

from mincuts.cli import main
from mincuts.constructions import seymour


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    g6 = seymour(2).g.to_graph6().decode()
    assert run(capsys, "count", g6, "0", "1") == (0, "9\n", "")
    assert run(capsys, "count", "Bw", "0", "1")[1] == "0\n"  # K3


def test_count_list(capsys):
    code, out, _ = run(capsys, "count", "Ch", "0", "3", "--list")  # path 0-1-2-3
    assert code == 0
    assert out.splitlines() == ["2", "1", "2"]


@pytest.mark.parametrize("argv", [["count", "C!", "0", "1"], ["count", "Ch", "0", "9"], ["count", "Ch", "1", "1"]])
def test_count_bad_input(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and len(err.strip().splitlines()) == 1


def test_count_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(seymour(3).g.to_graph6().decode() + "\n"))
    assert run(capsys, "count", "-", "0", "1")[1] == "27\n"


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "seymour", "1")
    assert code == 0 and out == seymour(1).g.to_graph6().decode() + "\n"
    assert len(out.strip()) == 3 and out[0] == "D"
    assert run(capsys, "construct", "named", "complete", "4")[1] == "C~\n"
    assert run(capsys, "construct", "seymour", "2", "--terminals")[1].endswith(" 0 1\n")
    assert run(capsys, "construct", "seymour", "0")[0] == 2
    assert run(capsys, "construct", "named", "nonsense", "3")[0] == 2


def test_construct_glue(capsys, tmp_path):
    a = tmp_path / "a.g6"
    a.write_text(seymour(1).g.to_graph6().decode() + " 0 1\n")
    code, out, _ = run(capsys, "construct", "glue", str(a), str(a))
    assert code == 0 and out.strip() == seymour(2).g.to_graph6().decode()


@pytest.mark.parametrize("m", range(1, 9))
def test_construct_then_count(capsys, m):
    g6 = run(capsys, "construct", "seymour", str(m))[1].strip()
    assert run(capsys, "count", g6, "0", "1")[1] == f"{3**m}\n"


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "10", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 11 and lines[0].startswith("n,lower")
    assert lines[3].split(",")[:2] == ["3", "3"]
    rows = json.loads(run(capsys, "bounds", "60", "--format", "json")[1])
    # the polynomial factor keeps the root above 2 up to n = 13
    assert [r["n"] for r in rows if r["root_upper"] >= 2][-1] == 13
    assert all(r["root_upper"] < 2 for r in rows if r["n"] >= 14)
    assert run(capsys, "bounds", "0")[0] == 2


def test_bounds_with_census(capsys, tmp_path):
    out = tmp_path / "g.jsonl"
    assert run(capsys, "census", "g", "1-3", "--out", str(out))[0] == 0
    rows = json.loads(run(capsys, "bounds", "4", "--format", "json", "--census", str(out))[1])
    assert [r["exact_g"] for r in rows] == [1, 2, 3, None]


def test_census_stdout(capsys):
    code, out, _ = run(capsys, "census", "g", "5")
    rec = json.loads(out)
    assert code == 0 and rec["value"] == 6 and rec["graphs_examined"] == 1044
    code, out, _ = run(capsys, "census", "c", "5")
    assert json.loads(out)["value"] == 5


def test_census_workers_identical(capsys, tmp_path):
    run(capsys, "census", "g", "5", "--out", str(tmp_path / "a"), "--workers", "1")
    run(capsys, "census", "g", "5", "--out", str(tmp_path / "b"), "--workers", "2")
    a = json.loads((tmp_path / "a").read_text())
    b = json.loads((tmp_path / "b").read_text())
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b


def test_census_profile_cap(capsys):
    code, _, err = run(capsys, "census", "g", "8")
    assert code == 2 and "--allow-large" in err


def test_verify_conjecture(capsys):
    code, out, _ = run(capsys, "verify-conjecture", "4")
    assert code == 0 and len(out.splitlines()) == 4 and "VIOLATION" not in out


def test_invariant_violation_exit_code(capsys, monkeypatch):
    import mincuts.cli as cli

    monkeypatch.setattr(cli, "is_minimal_separator_full", lambda *a: False)
    assert run(capsys, "count", "Ch", "0", "3", "--list")[0] == 3


def test_module_entry_point_and_interpreted_backend():
    env = dict(os.environ, MINCUTS_JIT="0")
    g6 = seymour(3).g.to_graph6().decode()
    proc = subprocess.run([sys.executable, "-m", "mincuts", "count", g6, "0", "1"],
                          capture_output=True, text=True, env=env, timeout=120)
    assert proc.returncode == 0 and proc.stdout == "27\n"
    probe = ("from mincuts._jit import USE_NUMBA; from mincuts.canon import level_codes;"
             "print(USE_NUMBA, len(level_codes(5)))")
    proc = subprocess.run([sys.executable, "-c", probe], capture_output=True, text=True, env=env, timeout=300)
    assert proc.stdout.split() == ["False", "34"]
