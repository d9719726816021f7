import io
import json
import socket

import pytest

from namefuzz.cli import EXIT_FORMAT, EXIT_IO, EXIT_OK, EXIT_USAGE, main

TRIO = "Mike Petterson\nJennifer Mikoilan\nMark\n"


@pytest.fixture
def trio_index(tmp_path):
    corpus = tmp_path / "names.txt"
    corpus.write_text(TRIO, encoding="utf-8")
    index = tmp_path / "names.idx"
    assert main(["build", "--corpus", str(corpus), "--index", str(index)]) == EXIT_OK
    return index


def test_build_reports_counts(tmp_path, capsys):
    corpus = tmp_path / "names.txt"
    corpus.write_text(TRIO, encoding="utf-8")
    index = tmp_path / "names.idx"
    assert main(["build", "--corpus", str(corpus), "--index", str(index)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "built 3 entries" in out
    assert index.exists()


def test_build_empty_corpus(tmp_path, capsys):
    corpus = tmp_path / "empty.txt"
    corpus.write_text("", encoding="utf-8")
    index = tmp_path / "empty.idx"
    assert main(["build", "--corpus", str(corpus), "--index", str(index)]) == EXIT_OK
    assert "built 0 entries" in capsys.readouterr().out


def test_build_rejects_bad_lambda(tmp_path, capsys):
    corpus = tmp_path / "names.txt"
    corpus.write_text(TRIO, encoding="utf-8")
    code = main(["build", "--corpus", str(corpus), "--index", str(tmp_path / "x.idx"), "--lambda", "0"])
    assert code == EXIT_USAGE


def test_build_missing_corpus_is_io_error(tmp_path):
    code = main(["build", "--corpus", str(tmp_path / "nope.txt"), "--index", str(tmp_path / "x.idx")])
    assert code == EXIT_IO


def test_query_text_output(trio_index, capsys):
    assert main(["query", "--index", str(trio_index), "--q", "mik"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("1. Mike Petterson ")
    assert "lld=0" in lines[0] and "bd=-5" in lines[0]
    assert lines[1].startswith("2. Jennifer Mikoilan ")


def test_query_no_results_still_succeeds(trio_index, capsys):
    assert main(["query", "--index", str(trio_index), "--q", "zzzz"]) == EXIT_OK
    assert capsys.readouterr().out == ""


def test_query_json_matches_text_order(trio_index, capsys):
    main(["query", "--index", str(trio_index), "--q", "mik"])
    text_lines = capsys.readouterr().out.splitlines()
    main(["query", "--index", str(trio_index), "--q", "mik", "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert [r["name"] for r in payload] == ["Mike Petterson", "Jennifer Mikoilan"]
    assert len(payload) == len(text_lines)
    for line, rec in zip(text_lines, payload):
        assert rec["name"] in line
        assert f"lld={rec['lld']}" in line
        assert f"bd={rec['bd']:g}" in line
    assert payload[0]["span"] == [1, 4]


def test_query_missing_index_is_io_error(tmp_path):
    assert main(["query", "--index", str(tmp_path / "nope.idx"), "--q", "x"]) == EXIT_IO


def test_query_corrupt_index_is_format_error(tmp_path):
    bad = tmp_path / "bad.idx"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["query", "--index", str(bad), "--q", "x"]) == EXIT_FORMAT


def test_query_wrong_version_is_format_error(trio_index):
    doc = json.loads(trio_index.read_text())
    doc["format_version"] = 99
    trio_index.write_text(json.dumps(doc))
    assert main(["query", "--index", str(trio_index), "--q", "x"]) == EXIT_FORMAT


def test_query_param_mismatch_is_usage_error(trio_index):
    assert main(["query", "--index", str(trio_index), "--q", "x", "--k", "3"]) == EXIT_USAGE
    assert main(["query", "--index", str(trio_index), "--q", "x", "--t2", "-1"]) == EXIT_USAGE


def test_unknown_subcommand_is_usage_error():
    assert main(["frobnicate"]) == EXIT_USAGE


def test_repl_lists_and_highlights(trio_index, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("mik\n\nzzzz\n"))
    assert main(["repl", "--index", str(trio_index)]) == EXIT_OK
    out = capsys.readouterr().out
    lines = [ln for ln in out.splitlines() if ln]
    assert lines[0].startswith("1. ")
    assert "[Mik]e Petterson" in lines[0]
    assert "[Mik]oilan" in lines[1]
    assert len(lines) == 2  # blank input and a miss print nothing


def test_bench_text_and_json(trio_index, tmp_path, capsys):
    queries = tmp_path / "queries.txt"
    queries.write_text("mik\nmark\nx\n", encoding="utf-8")
    assert main(["bench", "--index", str(trio_index), "--queries", str(queries), "--reps", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "recall" in out

    assert main([
        "bench", "--index", str(trio_index), "--queries", str(queries),
        "--reps", "2", "--format", "json",
    ]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["overall"]["corpus_size"] == 3
    assert 0.0 <= payload["overall"]["recall"] <= 1.0
    for row in payload["rows"]:
        assert row["mean_stage1_candidates"] <= 3
        assert 0.0 <= row["recall"] <= 1.0
        assert row["p50_ms"] <= row["p95_ms"] <= row["p99_ms"]


def test_bench_single_query_single_rep(trio_index, tmp_path, capsys):
    queries = tmp_path / "one.txt"
    queries.write_text("mik\n", encoding="utf-8")
    assert main([
        "bench", "--index", str(trio_index), "--queries", str(queries),
        "--reps", "1", "--format", "json",
    ]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["rows"]) == 1
    assert payload["rows"][0]["queries"] == 1


def test_serve_occupied_port(trio_index):
    blocker = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    blocker.bind(("127.0.0.1", 0))
    port = blocker.getsockname()[1]
    try:
        code = main(["serve", "--index", str(trio_index), "--port", str(port)])
    finally:
        blocker.close()
    assert code == EXIT_IO


def test_serve_missing_index(tmp_path):
    assert main(["serve", "--index", str(tmp_path / "nope.idx"), "--port", "7654"]) == EXIT_IO
