import io
import json

import numpy as np
import pytest

from activerank.cli import main, run_interactive
from activerank.datasets import gen_unit_cube, write_embedding, write_matrix, synthetic_similarity
from activerank.errors import SessionAborted
from activerank.geom import Embedding


class ScriptedPerson(io.StringIO):
    """stdin that answers each prompt truthfully for a hidden reference."""

    def __init__(self, emb, r, out):
        super().__init__()
        self.emb, self.r, self.out = emb, np.asarray(r), out
        self.names = [emb.name(k) for k in range(emb.n)]

    def readline(self):
        prompt = self.out.getvalue().rsplit("Is ", 1)[1]
        a, b = prompt.split(" closer/preferred over ")
        b = b.split("?")[0]
        i, j = self.names.index(a), self.names.index(b)
        return "y\n" if np.linalg.norm(self.emb.points[i] - self.r) < np.linalg.norm(self.emb.points[j] - self.r) else "n\n"


def _named(n, d, seed):
    emb, r = gen_unit_cube(n, d, seed)
    return Embedding(emb.points, tuple(f"item{k}" for k in range(n))), r


@pytest.mark.parametrize("n,limit", [(3, 3), (8, 24)])
def test_interactive_consistent_session(tmp_path, n, limit):
    emb, r = _named(n, 2, n)
    out = io.StringIO()
    doc = run_interactive(emb, mode="errorfree", stdin=ScriptedPerson(emb, r, out), stdout=out,
                          transcript_path=tmp_path / "t.jsonl")
    assert doc["order"] == [int(k) for k in np.argsort(emb.distances(r))]
    assert doc["questions"] <= limit
    assert "Final ranking: " + " > ".join(doc["names"]) in out.getvalue()
    assert len((tmp_path / "t.jsonl").read_text().splitlines()) == doc["questions"]


def test_interactive_prints_running_ranking():
    emb, r = _named(5, 2, 1)
    out = io.StringIO()
    run_interactive(emb, stdin=ScriptedPerson(emb, r, out), stdout=out)
    assert "Current ranking: " in out.getvalue()


def test_interactive_abort(tmp_path):
    emb, _ = _named(6, 2, 0)
    path = tmp_path / "t.jsonl"
    with pytest.raises(SessionAborted):
        run_interactive(emb, stdin=io.StringIO("y\nn\n"), stdout=io.StringIO(), transcript_path=path)
    assert len(path.read_text().splitlines()) == 2


def test_interactive_robust_mode():
    emb, r = _named(6, 2, 2)
    out = io.StringIO()
    doc = run_interactive(emb, mode="robust", R=1, stdin=ScriptedPerson(emb, r, out), stdout=out)
    truth = list(np.argsort(emb.distances(r)))
    assert [truth.index(k) for k in doc["order"]] == sorted(truth.index(k) for k in doc["order"])
    with pytest.raises(ValueError):
        run_interactive(emb, mode="robust", stdin=io.StringIO(), stdout=io.StringIO())


def test_cli_interactive_abort_exit_code(tmp_path, monkeypatch):
    emb, _ = _named(4, 2, 0)
    write_embedding(tmp_path / "e.csv", emb)
    monkeypatch.setattr("sys.stdin", io.StringIO("y\n"))
    code = main(["interactive", "--embedding", str(tmp_path / "e.csv"), "--transcript", str(tmp_path / "t.jsonl")])
    assert code == 1
    assert len((tmp_path / "t.jsonl").read_text().splitlines()) == 1


def test_count(capsys):
    assert main(["count", "100", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == "4951" and doc["lower_bound_bits"] == pytest.approx(12.2735, abs=1e-4)


def test_rank_from_file(tmp_path, capsys):
    emb, r = gen_unit_cube(12, 2, 0)
    write_embedding(tmp_path / "e.csv", emb)
    ref = ",".join(repr(float(v)) for v in r)
    assert main(["rank", "--embedding", str(tmp_path / "e.csv"), "--reference", ref, "--out", str(tmp_path / "o.json")]) == 0
    doc = json.loads((tmp_path / "o.json").read_text())
    assert doc["order"] == [int(k) for k in np.argsort(emb.distances(r))]


def test_rank_from_matrix(tmp_path, capsys):
    S, emb = synthetic_similarity(10, 2, 0.0, 1)
    write_matrix(tmp_path / "s.csv", S)
    write_embedding(tmp_path / "e.csv", emb)
    assert main(["rank", "--embedding", str(tmp_path / "e.csv"), "--matrix", str(tmp_path / "s.csv"), "--row", "0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["order"]) == 9


def test_robust_cli(tmp_path, capsys):
    assert main(["robust", "--n", "30", "--p", "0.1", "--R", "4", "--log", str(tmp_path / "l.jsonl")]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert sorted(doc["completed"]) == list(range(30))
    assert (tmp_path / "l.jsonl").exists()


def test_experiment_cli_writes_files(tmp_path, capsys):
    stem = tmp_path / "para"
    assert main(["experiment", "parabola", "--ns", "5", "--out", str(stem)]) == 0
    assert (tmp_path / "para.json").exists() and (tmp_path / "para.csv").exists()
    assert main(["experiment", "fig3", "--n", "15", "--dims", "1", "--trials", "2"]) == 0
    assert main(["experiment", "first-skip", "--n", "200", "--trials", "5"]) == 0
    assert main(["experiment", "table1", "--n", "12", "--rows", "0", "1", "--R", "2"]) == 0
    assert main(["experiment", "majority", "--n", "10", "--trials", "2"]) == 0


def test_cli_errors(tmp_path, capsys):
    assert main(["rank", "--embedding", str(tmp_path / "missing.csv"), "--reference", "0,0"]) == 2
    assert "missing.csv" in capsys.readouterr().err
    bad = tmp_path / "s.csv"
    bad.write_text("0,1\n2,0\n")
    assert main(["experiment", "table1", "--matrix", str(bad), "--embeddings", str(bad)]) == 2
