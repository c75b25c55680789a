"""Story-file ingestion, CoNLL-U sidecar parsing, and corpus statistics.

Story layout is the public CNN/DailyMail one: article body, then highlight
blocks each introduced by a line consisting of ``@highlight``. Sidecar
parses pair with stories by file stem (``X.story`` / ``X.conllu``).
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .errors import ConlluParseError, EmptyCorpus, HeadOutOfRange, MalformedStory

HIGHLIGHT_MARKER = "@highlight"


@dataclass(frozen=True)
class StoryRecord:
    id: str
    article_text: str
    highlights: tuple[str, ...]


@dataclass(frozen=True)
class ConlluToken:
    index: int
    form: str
    lemma: str
    head: int
    deprel: str


@dataclass(frozen=True)
class CorpusStats:
    doc_count: int
    avg_doc_len_sentences: float
    avg_summary_len_sentences: float
    avg_compression: float


def load_story(path: str | Path) -> StoryRecord:
    """Parse one .story file: body text, then ``@highlight`` blocks."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")

    body_lines: list[str] = []
    highlights: list[str] = []
    block: list[str] | None = None  # None until the first marker
    for line in text.splitlines():
        if line.strip() == HIGHLIGHT_MARKER:
            if block:
                highlights.append(" ".join(block))
            block = []
        elif block is None:
            body_lines.append(line)
        else:
            stripped = line.strip()
            if stripped:
                block.append(stripped)
    if block:
        highlights.append(" ".join(block))

    article_text = "\n".join(body_lines).strip()
    if not article_text:
        raise MalformedStory(f"{path}: no article text before highlights")
    return StoryRecord(id=path.stem, article_text=article_text, highlights=tuple(highlights))


def write_story(record: StoryRecord, path: str | Path) -> None:
    """Write a record back in story layout (inverse of load_story)."""
    parts = [record.article_text]
    for h in record.highlights:
        parts.append(f"\n{HIGHLIGHT_MARKER}\n")
        parts.append(h)
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")


def _parse_conllu_line(line: str, lineno: int) -> ConlluToken | None:
    cols = line.split("\t")
    if len(cols) != 10:
        raise ConlluParseError(f"expected 10 tab-separated columns, got {len(cols)}", lineno)
    token_id, form, lemma = cols[0], cols[1], cols[2]
    if "-" in token_id or "." in token_id:
        # Multiword-token ranges and empty nodes carry no tree structure.
        return None
    try:
        index = int(token_id)
    except ValueError:
        raise ConlluParseError(f"bad token id {token_id!r}", lineno) from None
    try:
        head = int(cols[6])
    except ValueError:
        raise ConlluParseError(f"bad head index {cols[6]!r}", lineno) from None
    return ConlluToken(index=index, form=form, lemma=lemma, head=head, deprel=cols[7])


def _check_heads(sentence: list[ConlluToken], lineno: int) -> None:
    ids = {tok.index for tok in sentence}
    for tok in sentence:
        if tok.head != 0 and tok.head not in ids:
            raise HeadOutOfRange(
                f"token {tok.index} ({tok.form!r}) has head {tok.head} "
                f"outside its {len(sentence)}-token sentence",
                lineno,
            )


def load_conllu_sidecar(path: str | Path) -> list[list[ConlluToken]]:
    """Parse a CoNLL-U file into per-sentence token tables.

    Only ID, FORM, LEMMA, HEAD, DEPREL are consumed; comments are ignored
    and blank lines delimit sentences.
    """
    sentences: list[list[ConlluToken]] = []
    current: list[ConlluToken] = []
    lineno = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                if current:
                    _check_heads(current, lineno)
                    sentences.append(current)
                    current = []
                continue
            if line.startswith("#"):
                continue
            token = _parse_conllu_line(line, lineno)
            if token is not None:
                current.append(token)
    if current:
        _check_heads(current, lineno)
        sentences.append(current)
    return sentences


def find_sidecar(story_path: str | Path, conllu_dir: str | Path | None = None) -> Path | None:
    """Locate the .conllu file paired with a story by stem, if any."""
    story_path = Path(story_path)
    directory = Path(conllu_dir) if conllu_dir is not None else story_path.parent
    candidate = directory / (story_path.stem + ".conllu")
    return candidate if candidate.is_file() else None


def corpus_stats(
    records: Sequence[StoryRecord],
    segmenter: Callable[[str], list[str]],
) -> CorpusStats:
    """Averages of document length, summary length, and compression."""
    if not records:
        raise EmptyCorpus("no story records")
    doc_lens = [len(segmenter(r.article_text)) for r in records]
    summary_lens = [len(r.highlights) for r in records]
    avg_doc = statistics.mean(doc_lens)
    avg_summary = statistics.mean(summary_lens)
    compression = 1.0 - avg_summary / avg_doc if avg_doc > 0 and avg_summary > 0 else 0.0
    return CorpusStats(
        doc_count=len(records),
        avg_doc_len_sentences=avg_doc,
        avg_summary_len_sentences=avg_summary,
        avg_compression=compression,
    )
