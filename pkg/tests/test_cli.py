import json
import subprocess
import sys

import pytest

from hamtpath.cli import main
from hamtpath.timegraph import complete_time_graph, paper_s5_graph, parse_timegraph, serialize_timegraph


@pytest.fixture
def s5_file(tmp_path):
    path = tmp_path / "s5.tg"
    path.write_text(serialize_timegraph(paper_s5_graph()))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_complete(capsys):
    code, out, _ = run(capsys, "gen", "complete", "2")
    assert code == 0 and parse_timegraph(out) == complete_time_graph(2)


def test_gen_fixture(capsys):
    code, out, _ = run(capsys, "gen", "fixture", "paper-s5")
    assert code == 0 and parse_timegraph(out) == paper_s5_graph()
    assert run(capsys, "gen", "fixture", "--fixture", "paper-s5")[1] == out


def test_gen_random_is_deterministic(capsys):
    first = run(capsys, "gen", "random", "4", "0.5", "--seed", "7")
    second = run(capsys, "gen", "random", "4", "0.5", "--seed", "7")
    assert first[0] == 0 and first[1] == second[1]


@pytest.mark.parametrize(
    "argv",
    [("gen", "complete", "0"), ("gen", "random", "3", "1.5"), ("gen", "complete", "x"), ("frobnicate",)],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_prune_s5(capsys, s5_file):
    code, out, err = run(capsys, "prune", s5_file)
    assert code == 1
    assert len(json.loads(out)["removals"]) == 11
    assert "NotHamiltonian" in err


def test_prune_single_pass(capsys, s5_file):
    order = "0 1 0,1 2 1,1 3 1,2 4 2,3 5 2,4 5 3,5 4 3,5 2 4,4 3 4,2 0 5,3 0 5"
    code, out, _ = run(capsys, "prune", s5_file, "--single-pass", order)
    assert code == 0 and json.loads(out)["final_edges"] == [[0, 1, 0]]


def test_prune_k2_and_empty(capsys, tmp_path):
    k2 = tmp_path / "k2.tg"
    k2.write_text(serialize_timegraph(complete_time_graph(2)))
    code, out, _ = run(capsys, "prune", str(k2), "--trace")
    assert code == 0 and json.loads(out)["removals"] == [] and len(json.loads(out)["trace"]) == 6
    empty = tmp_path / "empty.tg"
    empty.write_text("n 3\n")
    assert run(capsys, "prune", str(empty))[0] == 1


def test_oracle(capsys, s5_file, tmp_path):
    code, out, _ = run(capsys, "oracle", s5_file)
    assert code == 1 and json.loads(out)["htp_count"] == 0
    k3 = tmp_path / "k3.tg"
    k3.write_text(serialize_timegraph(complete_time_graph(3)))
    code, out, _ = run(capsys, "oracle", str(k3))
    assert code == 0 and json.loads(out)["htp_count"] == 6


def test_lp(capsys, s5_file):
    code, out, _ = run(capsys, "lp", s5_file, "0", "1", "0", "--dump")
    payload = json.loads(out)
    assert code == 0 and payload["feasible"] and len(payload["instance"]["rows"]) == 33
    code, out, _ = run(capsys, "lp", s5_file, "1", "2", "1")
    assert code == 1 and json.loads(out)["certificate"]
    assert run(capsys, "lp", s5_file, "0", "2", "0")[0] == 2


def test_lp_reports_failed_verification(capsys, s5_file, monkeypatch):
    import hamtpath.cli as cli

    monkeypatch.setattr(cli, "verify_certificate", lambda lp, r: False)
    assert run(capsys, "lp", s5_file, "0", "1", "0")[0] == 3


def test_reduce(capsys, tmp_path):
    d = tmp_path / "chain.dg"
    d.write_text("d 2\ne S 1\ne 1 2\ne 2 T\n")
    code, out, _ = run(capsys, "reduce", str(d))
    assert code == 0 and out == "n 2\ne 0 1 0\ne 1 2 1\ne 2 0 2\n"


def test_parse_error_is_usage_error(capsys, tmp_path):
    bad = tmp_path / "bad.tg"
    bad.write_text("n 2\ne 1 1 1\n")
    code, _, err = run(capsys, "oracle", str(bad))
    assert code == 2 and "line 2" in err


def test_search_flags_and_spec_file(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--kind", "exhaustive-tiny", "--n", "2", "--no-timing")
    assert code == 0
    report = json.loads(out)
    assert report["instances"] == 64 and "wall_time" not in report
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"kind": "random-subgraph", "n": 3, "p": 0.5, "seed": 9, "count": 20,
                                "fixtures": ["paper-s5"]}))
    code, first, _ = run(capsys, "search", "--spec", str(spec), "--no-timing")
    code2, second, _ = run(capsys, "search", "--spec", str(spec), "--no-timing")
    assert code == code2 == 0 and first == second
    assert json.loads(first)["instances"] == 21


def test_stdin_and_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hamtpath", "oracle", "-"],
        input=serialize_timegraph(complete_time_graph(2)),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["htp_count"] == 2
