import csv
import io
import json

import pytest

from poemetrics.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def make_collection_dir(tmp_path):
    poems = {
        "love/one.txt": "my love is deep\nmy love is true\n\nthe stars above\nshine on you",
        "love/two.txt": "love in the light\nlove in the night",
        "blue/one.txt": "the blue sea waits\nthe blue sky burns",
        "blue/two.txt": "blue waves rise\nblue water falls",
    }
    root = tmp_path / "coll"
    for rel, text in poems.items():
        path = root / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    return root


class TestAnalyze:
    def test_sonnet_report_fields(self, capsys, sonnet_path, lexicon_path):
        code, out, _ = run_cli(capsys, "analyze", str(sonnet_path),
                               "--lexicon", str(lexicon_path))
        assert code == 0
        report = json.loads(out)
        poem = report["poems"][0]
        values = {e["analyzer"]: e.get("value")
                  for results in poem["aspects"].values() for e in results}
        assert values["line-count"] == 14
        assert values["stanza-count"] == 1
        assert len(values["syllables-per-line"]) == 14
        assert "rhyme-richness" in values
        assert set(poem["aspects"]) == {"poetic", "novelty", "fluency", "lexsem"}
        assert report["metadata"]["oov"]["tokens"] > 0

    def test_missing_file_is_config_error(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "analyze", str(tmp_path / "missing.txt"))
        assert code == 2
        assert "error" in err

    def test_lexicon_env_override(self, capsys, sonnet_path, lexicon_path,
                                  monkeypatch):
        monkeypatch.setenv("POEMETRICS_LEXICON", str(lexicon_path))
        code, out, _ = run_cli(capsys, "analyze", str(sonnet_path))
        assert code == 0
        assert json.loads(out)["metadata"]["lexicon"]["entries"] >= 1000

    def test_out_path_writes_file(self, capsys, sonnet_path, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, "analyze", str(sonnet_path),
                               "--out", str(target))
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["poems"][0]["line_count"] == 14


class TestEvaluate:
    def _expect_file(self, tmp_path, entries):
        path = tmp_path / "expect.json"
        path.write_text(json.dumps(entries))
        return path

    def test_passing_expectations_exit_zero(self, capsys, sonnet_path,
                                            lexicon_path, tmp_path):
        expect = self._expect_file(tmp_path, [
            {"analyzer": "line-count", "expect": 14},
            {"analyzer": "syllables-per-line", "min": 8, "max": 12},
        ])
        code, out, _ = run_cli(capsys, "evaluate", str(sonnet_path),
                               "--lexicon", str(lexicon_path),
                               "--expect", str(expect))
        assert code == 0
        report = json.loads(out)
        assert report["evaluation"]["all_passed"] is True
        assert all(v["verdict"] == "pass" for v in report["evaluation"]["results"])

    def test_failing_expectation_exit_one(self, capsys, sonnet_path, tmp_path):
        expect = self._expect_file(tmp_path, [{"analyzer": "line-count",
                                               "expect": 13}])
        code, out, _ = run_cli(capsys, "evaluate", str(sonnet_path),
                               "--expect", str(expect))
        assert code == 1
        report = json.loads(out)
        assert report["evaluation"]["all_passed"] is False
        assert report["evaluation"]["results"][0]["observed"] == 14

    def test_bad_expectation_file_exit_two(self, capsys, sonnet_path, tmp_path):
        bad = tmp_path / "expect.json"
        bad.write_text("{not json")
        code, _, err = run_cli(capsys, "evaluate", str(sonnet_path),
                               "--expect", str(bad))
        assert code == 2
        assert "expectation" in err


class TestUsageErrors:
    def test_sample_without_seed(self, capsys, tmp_path):
        root = make_collection_dir(tmp_path)
        code, _, err = run_cli(capsys, "analyze-collection", str(root),
                               "--sample", "5")
        assert code == 2
        assert "--seed" in err

    def test_unknown_command_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_embedder_spec(self, capsys, sonnet_path):
        code, _, err = run_cli(capsys, "analyze", str(sonnet_path),
                               "--embedder", "bert")
        assert code == 2
        assert "embedder" in err


class TestCollection:
    def test_plot_data_bins_sum_to_totals(self, capsys, tmp_path, lexicon_path):
        root = make_collection_dir(tmp_path)
        code, out, _ = run_cli(capsys, "analyze-collection", str(root),
                               "--lexicon", str(lexicon_path), "--plot-data")
        assert code == 0
        report = json.loads(out)
        hists = report["distributions"]["histograms"]
        poem_count = report["collection"]["poem_count"]
        line_total = sum(p["line_count"] for p in report["poems"])
        stanza_total = sum(p["stanza_count"] for p in report["poems"])
        assert sum(hists["stanza_count"]["counts"]) == poem_count
        assert sum(hists["rhyme_pattern_count"]["counts"]) == poem_count
        assert sum(hists["rhyme_richness"]["counts"]) == poem_count
        assert sum(hists["lines_per_stanza"]["counts"]) == stanza_total
        assert sum(hists["syllables_per_line"]["counts"]) == line_total
        summaries = report["distributions"]["score_summaries"]
        assert summaries["intra_rouge"]["count"] == poem_count
        assert summaries["inter_rouge"]["count"] == 6

    def test_topics_and_retrieval_in_report(self, capsys, tmp_path):
        root = make_collection_dir(tmp_path)
        code, out, _ = run_cli(capsys, "analyze-collection", str(root))
        report = json.loads(out)
        assert report["collection"]["topics"] == ["blue", "love"]
        values = {e["analyzer"]: e.get("value")
                  for results in report["collection"]["aspects"].values()
                  for e in results}
        assert "topic-retrieval-f1" in values
        assert set(values["topic-retrieval-by-topic"]) == {"blue", "love"}

    def test_sampled_novelty_recorded(self, capsys, tmp_path):
        root = make_collection_dir(tmp_path)
        code, out, _ = run_cli(capsys, "analyze-collection", str(root),
                               "--sample", "3", "--seed", "7")
        report = json.loads(out)
        inter = report["novelty"]["inter"]
        assert inter["sampled"] is True
        assert inter["seed"] == 7
        assert len(inter["per_unit"]) == 3

    def test_single_poem_collection_reports_inter_error(self, capsys, tmp_path):
        root = tmp_path / "solo"
        (root / "t").mkdir(parents=True)
        (root / "t" / "only.txt").write_text("one line\nand two")
        code, out, _ = run_cli(capsys, "analyze-collection", str(root))
        assert code == 0
        report = json.loads(out)
        assert "error" in report["novelty"]["inter"]


class TestOutputContracts:
    def test_stable_output_is_byte_identical(self, capsys, tmp_path, lexicon_path):
        root = make_collection_dir(tmp_path)
        args = ["analyze-collection", str(root), "--lexicon", str(lexicon_path),
                "--plot-data", "--stable-output", "--sample", "3", "--seed", "9"]
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first.encode() == second.encode()

    def test_unstable_output_has_timestamp(self, capsys, sonnet_path):
        _, out, _ = run_cli(capsys, "analyze", str(sonnet_path))
        assert "generated_at" in json.loads(out)["metadata"]
        _, out, _ = run_cli(capsys, "analyze", str(sonnet_path), "--stable-output")
        assert "generated_at" not in json.loads(out)["metadata"]

    def test_csv_and_json_share_scalar_values(self, capsys, sonnet_path,
                                              lexicon_path, tmp_path):
        args = ["analyze", str(sonnet_path), "--lexicon", str(lexicon_path),
                "--stable-output"]
        _, json_out, _ = run_cli(capsys, *args)
        _, csv_out, _ = run_cli(capsys, *args, "--format", "csv")
        report = json.loads(json_out)
        values = {e["analyzer"]: e.get("value")
                  for results in report["poems"][0]["aspects"].values()
                  for e in results}
        rows = list(csv.DictReader(io.StringIO(csv_out)))
        by_key = {(r["analyzer"], r["metric"]): r["value"] for r in rows}
        assert by_key[("line-count", "line-count")] == str(values["line-count"])
        assert by_key[("rhyme-richness", "rhyme-richness")] == \
            str(values["rhyme-richness"])
        for i, syllables in enumerate(values["syllables-per-line"]):
            assert by_key[("syllables-per-line", f"syllables-per-line[{i}]")] == \
                str(syllables)

    def test_csv_includes_evaluation_rows(self, capsys, sonnet_path, tmp_path):
        expect = tmp_path / "expect.json"
        expect.write_text(json.dumps([{"analyzer": "line-count", "expect": 14}]))
        code, out, _ = run_cli(capsys, "evaluate", str(sonnet_path),
                               "--expect", str(expect), "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        verdicts = [r for r in rows if r["section"] == "evaluation"]
        assert verdicts and verdicts[0]["value"] == "pass"


class TestListAnalyzers:
    def test_lists_descriptors(self, capsys):
        code, out, _ = run_cli(capsys, "list-analyzers")
        assert code == 0
        listing = json.loads(out)["analyzers"]
        ids = {a["id"] for a in listing}
        assert {"line-count", "rhyme-richness", "inter-novelty-mean",
                "topic-retrieval-f1"} <= ids
        scansion = next(a for a in listing if a["id"] == "scansion")
        assert scansion["language"] == "en"
        assert scansion["scope"] == "single-poem"
