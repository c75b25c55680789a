import json

import pytest
from click.testing import CliRunner

from graphsum_adapter import chain_parse, parse_corpus
from graphsum_adapter.cli import main


def _write_story(path, body, highlights=("something happened",)):
    blocks = "".join(f"\n@highlight\n\n{h}\n" for h in highlights)
    path.write_text(body + "\n" + blocks, encoding="utf-8")


def test_chain_parse_block_per_sentence():
    out = chain_parse("Dogs bark. Cats nap. Birds sing.")
    blocks = out.strip().split("\n\n")
    assert len(blocks) == 3
    first = blocks[0].splitlines()
    assert first[0].split("\t") == ["1", "Dogs", "dogs", "_", "_", "_", "0", "root", "_", "_"]
    assert first[1].split("\t")[6] == "1"


def test_chain_parse_ten_columns_everywhere():
    out = chain_parse("One small step. A bigger leap follows.")
    for line in out.strip().splitlines():
        if line:
            assert len(line.split("\t")) == 10


def test_chain_parse_empty_text():
    assert chain_parse("") == ""
    assert chain_parse("...") == ""


def test_parse_corpus_writes_sidecar_per_story(tmp_path):
    src = tmp_path / "in"
    dst = tmp_path / "out"
    src.mkdir()
    _write_story(src / "a.story", "Dogs bark. Cats nap.")
    _write_story(src / "b.story", "Rain falls on the roof.")
    manifest = parse_corpus(src, dst)
    assert manifest.ok_count == 2
    assert manifest.failed_count == 0
    assert (dst / "a.conllu").exists()
    assert (dst / "b.conllu").exists()
    assert manifest.files["a"].sentences == 2


def test_parse_corpus_empty_dir(tmp_path):
    src = tmp_path / "in"
    src.mkdir()
    manifest = parse_corpus(src, tmp_path / "out")
    assert manifest.files == {}
    assert manifest.ok_count == 0


def test_parse_corpus_records_failure_and_continues(tmp_path):
    src = tmp_path / "in"
    dst = tmp_path / "out"
    src.mkdir()
    _write_story(src / "good.story", "A fine sentence stands here.")
    # body with no article text is rejected by the story loader
    (src / "broken.story").write_text("\n@highlight\n\nonly highlights\n", encoding="utf-8")
    manifest = parse_corpus(src, dst)
    assert manifest.files["good"].status == "ok"
    assert manifest.files["broken"].status == "parse_failed"
    assert "MalformedStory" in manifest.files["broken"].error
    assert not (dst / "broken.conllu").exists()


def test_parse_corpus_no_temp_files_left(tmp_path):
    src = tmp_path / "in"
    dst = tmp_path / "out"
    src.mkdir()
    for k in range(5):
        _write_story(src / f"s{k}.story", f"Sentence number {k} stands alone. And another.")
    parse_corpus(src, dst)
    leftovers = [p for p in dst.iterdir() if p.suffix == ".tmp"]
    assert leftovers == []


def test_parse_corpus_parallel_matches_serial(tmp_path):
    src = tmp_path / "in"
    src.mkdir()
    for k in range(6):
        _write_story(src / f"s{k}.story", f"Worker {k} filed a report. The report was short.")
    serial = parse_corpus(src, tmp_path / "o1", jobs=1)
    parallel = parse_corpus(src, tmp_path / "o2", jobs=3)
    assert serial.files == parallel.files
    for k in range(6):
        a = (tmp_path / "o1" / f"s{k}.conllu").read_text(encoding="utf-8")
        b = (tmp_path / "o2" / f"s{k}.conllu").read_text(encoding="utf-8")
        assert a == b


def test_unknown_backend_rejected(tmp_path):
    src = tmp_path / "in"
    src.mkdir()
    with pytest.raises(ValueError):
        parse_corpus(src, tmp_path / "out", backend="spacy")


def test_manifest_json_round_trip(tmp_path):
    src = tmp_path / "in"
    src.mkdir()
    _write_story(src / "x.story", "Short and sweet. Sweet and short.")
    manifest = parse_corpus(src, tmp_path / "out")
    manifest_path = tmp_path / "manifest.json"
    manifest.write(manifest_path)
    payload = json.loads(manifest_path.read_text(encoding="utf-8"))
    assert payload["backend"] == "chain"
    assert payload["ok"] == 1
    assert payload["files"]["x"]["status"] == "ok"
    assert payload["files"]["x"]["sentences"] == 2


def test_cli_writes_outputs(tmp_path):
    src = tmp_path / "in"
    src.mkdir()
    _write_story(src / "doc.story", "The pier reopened today. Crowds were small.")
    result = CliRunner().invoke(main, [
        "--in", str(src),
        "--out", str(tmp_path / "out"),
        "--manifest", str(tmp_path / "m.json"),
    ])
    assert result.exit_code == 0, result.output
    assert "parsed 1 ok, 0 failed" in result.output
    assert (tmp_path / "out" / "doc.conllu").exists()
    assert (tmp_path / "m.json").exists()


def test_cli_missing_input_dir_exits_2(tmp_path):
    result = CliRunner().invoke(main, [
        "--in", str(tmp_path / "nope"),
        "--out", str(tmp_path / "out"),
        "--manifest", str(tmp_path / "m.json"),
    ])
    assert result.exit_code == 2
