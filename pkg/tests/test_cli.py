import json
import subprocess
import sys

import pytest

from edgeflip.cli import run
from edgeflip.corpus import complete, cycle, paw
from edgeflip.graph import load_graph


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in [("k3", complete(3)), ("c4", cycle(4)), ("c5", cycle(5)), ("paw", paw())]:
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(g.to_json()))
        out[name] = str(p)
    txt = tmp_path / "k3.txt"
    txt.write_text("3 3\n0 1\n0 2\n1 2\n")
    out["k3txt"] = str(txt)
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "edges": [[0, 0]]}')
    out["bad"] = str(bad)
    return out


def call(capsys, *argv):
    code = run(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def payload(capsys, *argv):
    code, out, _ = call(capsys, *argv)
    return code, json.loads(out)


def test_text_and_json_graphs_agree(files):
    assert load_graph(files["k3"]) == load_graph(files["k3txt"])


def test_classify(capsys, files):
    code, out = payload(capsys, "classify", "--graph", files["k3"], "--config", "0-1")
    assert code == 0
    assert out == {"class": "full", "coset_rep": [[1, 2]], "orbit_size": 4}
    code, out = payload(capsys, "classify", "--graph", files["k3"], "--from", "-")
    assert out["class"] == "SW(0)" and out["orbit_size"] == 1


def test_solve(capsys, files):
    code, out = payload(capsys, "solve", "--graph", files["k3"], "--from", "0-1", "--to", "0-1,0-2,1-2")
    assert code == 0 and out == {"solvable": True, "moves": "0-1", "length": 1}
    code, out = payload(capsys, "solve", "--graph", files["k3"], "--from", "-", "--to", "0-1")
    assert code == 2 and out["solvable"] is False
    assert out["certificate"]["from"]["class"] == "SW(0)"
    code, out, err = call(capsys, "solve", "--graph", files["c5"], "--from", "0-1",
                          "--to", "0-1,1-2,2-3", "--cap", "1")
    assert code == 3
    assert json.loads(err)["error"] == "CapExceeded"


def test_orbits(capsys, files):
    code, out = payload(capsys, "orbits", "--graph", files["c4"])
    assert code == 0
    assert out["orbit_count"] == 5 and out["configurations"] == 16
    assert sorted(r["orbit_size"] for r in out["orbits"]) == [1, 3, 4, 4, 4]
    assert all(r["members"] == r["orbit_size"] for r in out["orbits"])
    code, _, err = call(capsys, "orbits", "--graph", files["c4"], "--cap", "3")
    assert code == 3


def test_order_and_isomorphic(capsys, files):
    code, out = payload(capsys, "order", "--graph", files["k3"])
    assert out == {"branch": "odd", "k": 2, "m": 3, "n": 3, "order": "24"}
    code, out = payload(capsys, "isomorphic", "--graph", files["c4"], "--graph", files["paw"])
    assert out["isomorphic"] is True
    code, out = payload(capsys, "isomorphic", "--graph", files["c4"], "--graph", files["c5"])
    assert out["isomorphic"] is False
    code, _, err = call(capsys, "isomorphic", "--graph", files["c4"])
    assert code == 1 and json.loads(err)["error"] == "UsageError"


def test_verify(capsys, files):
    code, out = payload(capsys, "verify", "--graph", files["c4"])
    assert code == 0 and out["ok"] is True and out["bfs_order"] == "96"


def test_pi1(capsys):
    code, out = payload(capsys, "pi1", "--m", "5", "--attach", "2,4")
    assert code == 0
    assert out == {"pi1": 2, "classification": "(Z/2Z)^4 x| S_5", "order": "1920"}
    code, out = payload(capsys, "pi1", "--m", "6", "--attach", "3")
    assert out == {"pi1": 3, "classification": "unclassified (pi1=3)"}
    code, _, err = call(capsys, "pi1", "--m", "5", "--attach", "4,2")
    assert code == 1 and json.loads(err)["error"] == "InvalidSpec"


def test_linegraph(capsys, files):
    code, out = payload(capsys, "linegraph", "--graph", files["k3"])
    assert out == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}


def test_errors(capsys, files, tmp_path):
    code, _, err = call(capsys, "order", "--graph", files["bad"])
    assert code == 1 and json.loads(err)["error"] == "NotSimple"
    code, _, err = call(capsys, "order", "--graph", str(tmp_path / "missing.json"))
    assert code == 1 and json.loads(err)["error"] == "FileNotFoundError"
    code, _, err = call(capsys, "classify", "--graph", files["k3"], "--config", "0-9")
    assert code == 1
    code, _, err = call(capsys, "nonsense")
    assert code == 1 and json.loads(err)["error"] == "UsageError"


def test_human_format(capsys, files):
    code, out, _ = call(capsys, "order", "--graph", files["k3"], "--human")
    assert out.splitlines()[0] == 'branch: "odd"'


def test_output_is_byte_deterministic(capsys, files):
    runs = [call(capsys, "orbits", "--graph", files["paw"])[1] for _ in range(3)]
    assert runs[0] == runs[1] == runs[2]


def test_selfcheck_subprocess():
    proc = subprocess.run([sys.executable, "-m", "edgeflip.cli", "selfcheck"],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["ok"] and report["failures"] == []
