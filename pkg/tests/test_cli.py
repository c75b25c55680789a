import json

import pytest
from click.testing import CliRunner

from graphsum.cli import main

STORY = (
    "The harbor reopened after the storm passed. Fishing boats returned at dawn. "
    "The market sold fresh catch by noon. Repairs to the pier continue this week. "
    "Officials praised the quick cleanup effort. Tourists came back to the waterfront.\n"
    "\n@highlight\n\nHarbor reopens after storm\n"
    "\n@highlight\n\nPier repairs continue\n"
)


@pytest.fixture()
def corpus(tmp_path):
    d = tmp_path / "corpus"
    d.mkdir()
    (d / "harbor.story").write_text(STORY, encoding="utf-8")
    return d


def test_summarize_text_output(corpus):
    result = CliRunner().invoke(main, ["summarize", str(corpus / "harbor.story"), "-n", "2"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert len(lines) == 2
    assert all(line.endswith(".") for line in lines)


def test_summarize_json_output(corpus):
    result = CliRunner().invoke(
        main, ["summarize", str(corpus / "harbor.story"), "-n", "2", "--format", "json"]
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["id"] == "harbor"
    assert payload["method"] == "pagerank"
    assert payload["metric"] == "overlap"
    assert payload["selected"] == sorted(payload["selected"])
    assert len(payload["sentences"]) == 2


def test_summarize_gold_reports_rouge(corpus):
    result = CliRunner().invoke(
        main, ["summarize", str(corpus / "harbor.story"), "-n", "2", "--gold"]
    )
    assert result.exit_code == 0
    assert "rouge1 r=" in result.output
    assert "rougeL r=" in result.output


def test_summarize_dump_graph(corpus, tmp_path):
    dot = tmp_path / "g.dot"
    result = CliRunner().invoke(
        main, ["summarize", str(corpus / "harbor.story"), "--dump-graph", str(dot)]
    )
    assert result.exit_code == 0
    text = dot.read_text(encoding="utf-8")
    assert text.startswith("graph sentences {")
    assert text.endswith("}\n")


def test_summarize_plot_graph(corpus, tmp_path):
    png = tmp_path / "g.png"
    result = CliRunner().invoke(
        main, ["summarize", str(corpus / "harbor.story"), "--plot-graph", str(png)]
    )
    assert result.exit_code == 0
    assert png.read_bytes()[:4] == b"\x89PNG"


def test_summarize_missing_file_exits_2(tmp_path):
    result = CliRunner().invoke(main, ["summarize", str(tmp_path / "absent.story")])
    assert result.exit_code == 2


def test_summarize_malformed_story_exits_1(tmp_path):
    bad = tmp_path / "bad.story"
    bad.write_text("\n@highlight\n\nOnly highlights\n", encoding="utf-8")
    result = CliRunner().invoke(main, ["summarize", str(bad)])
    assert result.exit_code == 1
    assert "Error" in result.output


def test_summarize_byte_identical_across_runs(corpus):
    outputs = set()
    for _ in range(3):
        result = CliRunner().invoke(
            main, ["summarize", str(corpus / "harbor.story"), "--method", "hits",
                   "--metric", "ted", "-n", "3"]
        )
        assert result.exit_code == 0
        outputs.add(result.output)
    assert len(outputs) == 1


def test_summarize_custom_stopwords(corpus, tmp_path):
    stop = tmp_path / "stop.txt"
    stop.write_text("harbor\nstorm\n", encoding="utf-8")
    result = CliRunner().invoke(
        main, ["summarize", str(corpus / "harbor.story"), "--stopwords", str(stop)]
    )
    assert result.exit_code == 0


def test_evaluate_headline_defaults(corpus):
    result = CliRunner().invoke(main, ["evaluate", str(corpus)])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0].startswith("method,metric,threshold")
    assert len(lines) == 2
    assert lines[1].startswith("pagerank,overlap,0.5,")


def test_evaluate_all_expands_combinations(corpus):
    result = CliRunner().invoke(
        main, ["evaluate", str(corpus), "--method", "all", "--metric", "all"]
    )
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert len(lines) == 1 + 6 * 2


def test_evaluate_writes_output_file(corpus, tmp_path):
    out = tmp_path / "report.csv"
    result = CliRunner().invoke(main, ["evaluate", str(corpus), "-o", str(out)])
    assert result.exit_code == 0
    assert out.read_text(encoding="utf-8").startswith("method,metric")


def test_evaluate_figures_dir(corpus, tmp_path):
    figs = tmp_path / "figs"
    result = CliRunner().invoke(main, ["evaluate", str(corpus), "--figures-dir", str(figs)])
    assert result.exit_code == 0
    for name in ("rouge_recall.png", "rouge_f1.png", "timing.png"):
        assert (figs / name).read_bytes()[:4] == b"\x89PNG"


def test_stats_output(corpus):
    result = CliRunner().invoke(main, ["stats", str(corpus)])
    assert result.exit_code == 0
    assert "docs: 1" in result.output
    assert "avg_doc_sentences: 6.00" in result.output
    assert "avg_summary_sentences: 2.00" in result.output
    assert "compression:" in result.output


def test_help_lists_commands():
    result = CliRunner().invoke(main, ["--help"])
    assert result.exit_code == 0
    for name in ("summarize", "evaluate", "stats"):
        assert name in result.output
