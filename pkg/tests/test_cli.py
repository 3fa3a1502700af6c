import csv
import io
import json
import subprocess
import sys

import pytest

from parakit.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_caps, UsageError


@pytest.fixture(scope="session")
def corpus_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("corpus") / "n7.g6"
    assert main(["-q", "corpus", "--max-n", "7", "-o", str(path)]) == EXIT_OK
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("n,count", [(1, 1), (4, 18), (7, 1252)])
def test_corpus_cumulative_counts(capsys, n, count):
    code, out, _ = run(capsys, "corpus", "--max-n", str(n))
    assert code == EXIT_OK
    assert len(out.splitlines()) == count


def test_corpus_exact_order_four(capsys):
    code, out, _ = run(capsys, "corpus", "--max-n", "4", "--exact")
    assert code == EXIT_OK and len(out.splitlines()) == 11


def test_corpus_zero_warns(capsys):
    code, out, err = run(capsys, "corpus", "--max-n", "0")
    assert code == EXIT_OK and out == ""
    assert "WARNING" in err


def test_corpus_is_deterministic(capsys):
    _, a, _ = run(capsys, "corpus", "--max-n", "6")
    _, b, _ = run(capsys, "corpus", "--max-n", "6")
    assert a == b


def test_verify_lattice_passes(capsys, corpus_file):
    code, out, _ = run(capsys, "-q", "verify", "lattice", "--corpus", str(corpus_file))
    assert code == EXIT_OK
    reports = json.loads(out)
    assert {r["status"] for r in reports} == {"pass"}


def test_injected_fault_exits_one(capsys, corpus_file):
    code, out, err = run(capsys, "verify", "lemma2", "--corpus", str(corpus_file), "--inject-fault")
    assert code == EXIT_FAIL
    failing = [r for r in json.loads(out) if r["status"] == "fail"]
    assert [r["id"] for r in failing] == ["lemma2:fixture:coherence-break"]
    assert failing[0]["witnesses"]
    assert "coherence-break" in err


def test_json_key_order_and_determinism(capsys, corpus_file):
    _, a, _ = run(capsys, "-q", "verify", "facts", "--corpus", str(corpus_file))
    _, b, _ = run(capsys, "-q", "verify", "facts", "--corpus", str(corpus_file), "--jobs", "4")
    assert a == b
    for report in json.loads(a):
        assert list(report) == ["id", "status", "witnesses", "tables", "millis"]
        assert report["millis"] == 0


def test_csv_format(capsys, corpus_file):
    code, out, _ = run(capsys, "-q", "verify", "closure", "--corpus", str(corpus_file), "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["id", "status", "inconclusive", "witnesses", "first_witness", "millis"]
    assert all(r[1] == "pass" and r[2] == "false" for r in rows[1:])


def test_inconclusive_is_flagged_not_failed(capsys, corpus_file):
    code, out, err = run(capsys, "verify", "facts", "--corpus", str(corpus_file), "--format", "csv")
    assert code == EXIT_OK
    rows = {r[0]: r for r in csv.reader(io.StringIO(out))}
    assert rows["facts:non-equiv:degeneracy~const1"][1] == "pass"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nope", "--corpus", "x"],
        ["verify", "lattice", "--corpus", "/does/not/exist"],
        ["budget", "tsp", "--corpus", "x"],
        ["verify", "lattice"],
        ["frobnicate"],
        ["corpus", "--max-n", "-1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE


def test_bad_caps_and_slack(capsys, corpus_file):
    assert main(["verify", "lattice", "--corpus", str(corpus_file), "--caps", "n=x"]) == EXIT_USAGE
    assert main(["verify", "lattice", "--corpus", str(corpus_file), "--slack", "0.5"]) == EXIT_USAGE


def test_malformed_corpus_reports_position(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("A_\nD\n")
    code, _, err = run(capsys, "verify", "lattice", "--corpus", str(bad))
    assert code == EXIT_USAGE
    assert ":2:" in err and "byte 1" in err


def test_caps_parsing(monkeypatch):
    assert parse_caps("n=5, index=2") == {"n": 5, "param": 6, "index": 2}
    with pytest.raises(UsageError):
        parse_caps("depth=3")
    from parakit.cli import resolve_caps

    monkeypatch.setenv("PARAKIT_CAPS", "n=5,param=3")
    assert resolve_caps(None) == {"n": 5, "param": 3, "index": 4}
    assert resolve_caps("n=6") == {"n": 6, "param": 3, "index": 4}


def test_env_caps_reach_the_suite(capsys, corpus_file, monkeypatch):
    monkeypatch.setenv("PARAKIT_CAPS", "index=2")
    _, out, _ = run(capsys, "-q", "verify", "lemma1", "--corpus", str(corpus_file))
    table = next(r for r in json.loads(out) if r["id"] == "lemma1:nonuniform")
    assert [row["slice"] for row in table["tables"]["assignment"]] == [1, 2]


def test_budget_ds_csv(capsys, corpus_file):
    code, out, _ = run(capsys, "-q", "budget", "ds", "--corpus", str(corpus_file))
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["family", "k", "n", "measured_max", "allowed", "pass"]
    assert {r[1] for r in rows[1:]} == {"1", "2", "3"}
    assert all(r[5] == "true" for r in rows[1:])


def test_budget_fixed_slack_can_fail(capsys, corpus_file):
    assert main(["-q", "budget", "vc", "--corpus", str(corpus_file), "--slack", "1"]) == EXIT_FAIL


def test_budget_empty_corpus(capsys, tmp_path):
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    code, out, err = run(capsys, "budget", "wl", "--corpus", str(empty))
    assert code == EXIT_OK
    assert out == "family,k,n,measured_max,allowed,pass\n"
    assert "empty" in err


def test_budget_wl_on_order_eight(capsys, tmp_path):
    from parakit.graphlab.canon import graphs_of_order
    from parakit.graphlab.graph import encode_graph6

    corpus = tmp_path / "n8.g6"
    small = [g for n in range(1, 8) for g in graphs_of_order(n)]
    eight = list(graphs_of_order(8))[::400]
    corpus.write_text("".join(encode_graph6(g) + "\n" for g in small + eight))
    code, out, _ = run(capsys, "-q", "budget", "wl", "--corpus", str(corpus), "--caps", "n=8,index=3", "--per-n", "16")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert any(r["k"] == "3" and r["n"] == "8" for r in rows)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "parakit.cli", "corpus", "--max-n", "3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.split() == ["@", "A?", "A_", "B?", "BG", "BW", "Bw"]
