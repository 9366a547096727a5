"""Command-line behavior: subcommands, exit codes, stream discipline."""

from __future__ import annotations

import json

import pytest

from bibliorank.cli import main


@pytest.fixture
def index_dir(tmp_path):
    corpus_path = tmp_path / "corpus.jsonl"
    out = tmp_path / "ix"
    assert main(["gen", "--docs", "60", "--journals", "5", "--authors", "30",
                 "--seed", "11", "--out", str(corpus_path)]) == 0
    assert main(["ingest", "--input", str(corpus_path), "--out", str(out)]) == 0
    return out


class TestGen:
    def test_writes_reproducible_jsonl(self, tmp_path):
        first = tmp_path / "a.jsonl"
        second = tmp_path / "b.jsonl"
        args = ["gen", "--docs", "15", "--journals", "3", "--authors", "10", "--seed", "4"]
        assert main(args + ["--out", str(first)]) == 0
        assert main(args + ["--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()
        assert len(first.read_text(encoding="utf-8").splitlines()) == 15

    def test_stdout_is_clean_jsonl(self, capsys):
        assert main(["gen", "--docs", "3", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        lines = out.strip().splitlines()
        assert len(lines) == 3
        for line in lines:
            json.loads(line)

    def test_bad_arguments(self):
        assert main(["gen", "--docs", "-2", "--seed", "1"]) == 1


class TestIngest:
    def test_missing_input_is_runtime_error(self, tmp_path):
        code = main(["ingest", "--input", str(tmp_path / "missing.jsonl"),
                     "--out", str(tmp_path / "ix")])
        assert code == 3

    def test_duplicate_id_is_data_error(self, tmp_path, capsys):
        corpus = tmp_path / "corpus.jsonl"
        corpus.write_text('{"id":"d1","title":"a"}\n{"id":"d1","title":"b"}\n',
                          encoding="utf-8")
        assert main(["ingest", "--input", str(corpus), "--out", str(tmp_path / "ix")]) == 2
        assert "duplicate" in capsys.readouterr().err

    def test_malformed_line_skipped_unless_strict(self, tmp_path, capsys):
        corpus = tmp_path / "corpus.jsonl"
        corpus.write_text('{"id":"d1","title":"a"}\nbroken\n{"id":"d2","title":"b"}\n',
                          encoding="utf-8")
        assert main(["ingest", "--input", str(corpus), "--out", str(tmp_path / "ix")]) == 0
        err = capsys.readouterr().err
        assert "loaded 2 records, skipped 1" in err

        assert main(["ingest", "--input", str(corpus), "--out", str(tmp_path / "ix2"),
                     "--strict"]) == 2

    def test_summary_goes_to_stderr_not_stdout(self, tmp_path, capsys):
        corpus = tmp_path / "corpus.jsonl"
        corpus.write_text('{"id":"d1","title":"a"}\n', encoding="utf-8")
        assert main(["ingest", "--input", str(corpus), "--out", str(tmp_path / "ix")]) == 0
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "loaded 1 records" in captured.err


class TestSearch:
    def test_tsv_output(self, index_dir, capsys):
        assert main(["search", "--index", str(index_dir), "--query", "analysis",
                     "--rank", "bradford", "--top", "5"]) == 0
        out = capsys.readouterr().out
        lines = out.strip().splitlines()
        assert 0 < len(lines) <= 5
        for pos, line in enumerate(lines, start=1):
            fields = line.split("\t")
            assert len(fields) == 4
            assert int(fields[0]) == pos
            float(fields[2])

    @pytest.mark.parametrize("rank", ["tfidf", "bradford", "bradford_mult", "authcent"])
    def test_all_rank_modes_run(self, index_dir, capsys, rank):
        assert main(["search", "--index", str(index_dir), "--query", "analysis",
                     "--rank", rank]) == 0
        assert capsys.readouterr().out

    def test_unknown_rank_is_usage_error(self, index_dir, capsys):
        assert main(["search", "--index", str(index_dir), "--query", "x",
                     "--rank", "bogus"]) == 1
        assert "error" in capsys.readouterr().err

    def test_unindexable_query_is_usage_error(self, index_dir):
        assert main(["search", "--index", str(index_dir), "--query", "!!!"]) == 1

    def test_nonpositive_top_is_usage_error(self, index_dir):
        assert main(["search", "--index", str(index_dir), "--query", "analysis",
                     "--top", "-5"]) == 1

    def test_missing_index_is_data_error(self, tmp_path):
        assert main(["search", "--index", str(tmp_path / "nope"), "--query", "x"]) == 2


class TestZones:
    def test_rows(self, index_dir, capsys):
        assert main(["zones", "--index", str(index_dir), "--query", "analysis"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines
        zones_seen = []
        for line in lines:
            issn, journal, count, zone = line.split("\t")
            assert zone in ("core", "zone2", "zone3")
            int(count)
            zones_seen.append(zone)
        assert zones_seen[0] == "core"


class TestEval:
    def test_report_json(self, index_dir, tmp_path, capsys):
        queries = tmp_path / "queries.tsv"
        queries.write_text("q1\tanalysis\nq2\tnetwork model\n", encoding="utf-8")
        qrels = tmp_path / "qrels.tsv"
        qrels.write_text("q1\td000001\t1\nq2\td000002\t1\n", encoding="utf-8")
        assert main(["eval", "--index", str(index_dir), "--queries", str(queries),
                     "--qrels", str(qrels), "--k", "5"]) == 0
        reports = json.loads(capsys.readouterr().out)
        assert [r["query_id"] for r in reports] == ["q1", "q2"]
        for report in reports:
            assert set(report["rankers"]) == {"tfidf", "bradford", "bradford_mult", "authcent"}
            assert "tfidf|bradford" in report["pairwise"]


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 1
        assert "usage" in capsys.readouterr().err

    def test_no_subcommand(self):
        assert main([]) == 1

    def test_unknown_flag(self, index_dir):
        assert main(["search", "--index", str(index_dir), "--query", "x", "--frob"]) == 1


class TestServe:
    def test_invalid_env_port_is_usage_error(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("BIBLIORANK_PORT", "not-a-port")
        assert main(["serve", "--index", str(tmp_path / "nope")]) == 1
        assert "BIBLIORANK_PORT" in capsys.readouterr().err
