"""Sentence segmentation and token normalization.

Produces the normalized views consumed by the overlap metric: lowercase word
tokens, stopword-filtered content lemmas (parser lemmas when a sidecar is
aligned, Porter stems otherwise).
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

from .corpus import ConlluToken, StoryRecord
from .deptree import DepTree, fallback_tree, tree_from_conllu
from .errors import TreeError
from .stemming import stem

log = logging.getLogger(__name__)

_WORD = re.compile(r"[^\W_]+", re.UNICODE)

# Sentence boundary: a run of terminators, optional closing quotes/brackets,
# then whitespace. Guarded by the abbreviation set below.
_BOUNDARY = re.compile(r"[.!?]+[\"'”’)\]]*\s+")

# Title-style and calendar abbreviations that do not end sentences. Stored
# without the trailing period; multi-dot forms keep their inner dots. These
# guard only when capitalized in the text, so ordinary words that share a
# spelling (sat, mar, sun) still end sentences.
_TITLE_ABBREVIATIONS = frozenset({
    "mr", "mrs", "ms", "dr", "prof", "rev", "hon", "st", "mt",
    "gen", "sen", "rep", "gov", "lt", "col", "sgt", "capt", "maj", "adm",
    "cmdr", "jr", "sr", "inc", "ltd", "co", "corp", "dept", "univ",
    "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept",
    "oct", "nov", "dec", "mon", "tue", "tues", "wed", "thu", "thurs", "fri",
    "sat", "sun", "u.s", "u.k", "u.n",
})

# Conventionally lowercase abbreviations; guard in any case.
_LOWER_ABBREVIATIONS = frozenset({"a.m", "p.m", "e.g", "i.e", "etc", "vs", "cf"})


def _default_stopwords() -> frozenset[str]:
    text = resources.files("graphsum.data").joinpath("stopwords.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


STOPWORDS = _default_stopwords()


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a newline-delimited stopword file (the --stopwords override)."""
    words = Path(path).read_text(encoding="utf-8").splitlines()
    return frozenset(w.strip().lower() for w in words if w.strip())


@dataclass(frozen=True)
class Sentence:
    index: int
    raw: str
    tokens: tuple[str, ...]
    content_lemmas: frozenset[str]


@dataclass(frozen=True)
class Document:
    id: str
    sentences: tuple[Sentence, ...]
    trees: tuple[DepTree, ...] | None = None

    def __post_init__(self):
        if self.trees is not None and len(self.trees) != len(self.sentences):
            raise ValueError("trees must align one-to-one with sentences")

    def __len__(self) -> int:
        return len(self.sentences)


def _is_abbreviation(text_before: str) -> bool:
    m = re.search(r"(\S+)$", text_before)
    if m is None:
        return False
    word = re.sub(r"^[\W_]+", "", m.group(1)).rstrip(".")
    token = word.lower()
    if token in _LOWER_ABBREVIATIONS:
        return True
    return token in _TITLE_ABBREVIATIONS and word[:1].isupper()


def _split_line(line: str) -> list[str]:
    out = []
    start = 0
    for m in _BOUNDARY.finditer(line):
        if _is_abbreviation(line[start:m.start()]):
            continue
        piece = line[start:m.end()].strip()
        if piece:
            out.append(piece)
        start = m.end()
    tail = line[start:].strip()
    if tail:
        out.append(tail)
    return out


def segment(text: str) -> list[str]:
    """Split raw text into sentence strings.

    Newlines are hard boundaries (story bodies keep one paragraph per line);
    within a line, sentence-final punctuation splits unless the preceding
    word is a known abbreviation.
    """
    sentences = []
    for line in text.splitlines():
        sentences.extend(_split_line(line))
    return sentences


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens; anything that is not alphanumeric is dropped."""
    return _WORD.findall(text.lower())


def normalize(
    raw: str,
    stopwords: frozenset[str] | None = None,
    lemmatizer: Callable[[str], str] | None = None,
) -> tuple[tuple[str, ...], frozenset[str]]:
    """Return (tokens, content_lemmas) for one sentence.

    Tokens keep document order; content lemmas are the stopword-filtered
    tokens mapped through the lemmatizer (Porter stem by default) and
    deduplicated.
    """
    if stopwords is None:
        stopwords = STOPWORDS
    if lemmatizer is None:
        lemmatizer = stem
    tokens = tuple(tokenize(raw))
    lemmas = frozenset(lemmatizer(t) for t in tokens if t not in stopwords)
    return tokens, lemmas


def _sidecar_lemmatizer(tokens: Sequence[ConlluToken]) -> Callable[[str], str]:
    table = {}
    for tok in tokens:
        form = tok.form.lower()
        lemma = tok.lemma.lower() if tok.lemma and tok.lemma != "_" else form
        table.setdefault(form, lemma)
    return lambda word: table.get(word, stem(word))


def build_document(
    record: StoryRecord,
    sidecar: Sequence[Sequence[ConlluToken]] | None = None,
    stopwords: frozenset[str] | None = None,
) -> Document:
    """Segment, normalize, and attach one dependency tree per sentence.

    Sidecar parses are aligned by order; on a sentence-count mismatch (or a
    malformed parse) the sidecar is discarded and chain fallback trees are
    used instead.
    """
    raw_sentences = [s for s in segment(record.article_text) if tokenize(s)]

    aligned = sidecar is not None and len(sidecar) == len(raw_sentences)
    if sidecar is not None and not aligned:
        log.warning(
            "document %s: sidecar has %d sentences but segmenter found %d; "
            "falling back to chain trees",
            record.id, len(sidecar), len(raw_sentences),
        )

    sentences = []
    trees = []
    for i, raw in enumerate(raw_sentences):
        lemmatizer = _sidecar_lemmatizer(sidecar[i]) if aligned else None
        tokens, lemmas = normalize(raw, stopwords=stopwords, lemmatizer=lemmatizer)
        sentences.append(Sentence(index=i, raw=raw, tokens=tokens, content_lemmas=lemmas))

        tree = None
        if aligned:
            try:
                tree = tree_from_conllu(sidecar[i])
            except TreeError as exc:
                log.warning("document %s sentence %d: bad parse (%s); using chain tree",
                            record.id, i, exc)
        if tree is None:
            lemma_fn = lemmatizer or stem
            tree = fallback_tree([lemma_fn(t) for t in tokens])
        trees.append(tree)

    return Document(id=record.id, sentences=tuple(sentences), trees=tuple(trees))
