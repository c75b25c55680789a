"""Batch parsing of story files into CoNLL-U sidecars.

The boundary with graphsum is file-based: this package writes `.conllu`
files next to a manifest, and graphsum picks them up by file stem. Only
graphsum's public corpus API is used here.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from graphsum import load_story, segment

BACKENDS = ("chain", "stanza")

# Surface forms keep their case; graphsum's own tokenizer lowercases, which
# is wrong for the FORM column.
_WORDS = re.compile(r"[^\W_]+")


@dataclass(frozen=True)
class FileStatus:
    status: str  # "ok" | "parse_failed"
    sentences: int = 0
    error: str | None = None


@dataclass
class AdapterManifest:
    input_dir: str
    output_dir: str
    backend: str
    files: dict[str, FileStatus] = field(default_factory=dict)

    @property
    def ok_count(self) -> int:
        return sum(1 for s in self.files.values() if s.status == "ok")

    @property
    def failed_count(self) -> int:
        return sum(1 for s in self.files.values() if s.status == "parse_failed")

    def write(self, path: str | Path) -> None:
        payload = {
            "input_dir": self.input_dir,
            "output_dir": self.output_dir,
            "backend": self.backend,
            "ok": self.ok_count,
            "parse_failed": self.failed_count,
            "files": {
                stem: {
                    "status": s.status,
                    "sentences": s.sentences,
                    **({"error": s.error} if s.error else {}),
                }
                for stem, s in sorted(self.files.items())
            },
        }
        _atomic_write(Path(path), json.dumps(payload, indent=2) + "\n")


def _atomic_write(path: Path, text: str) -> None:
    """Write via a temp file in the same directory, then rename over."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _conllu_line(index: int, form: str, lemma: str, head: int, deprel: str) -> str:
    safe_form = form if form.strip() else "_"
    safe_lemma = lemma if lemma.strip() else "_"
    return "\t".join(
        [str(index), safe_form, safe_lemma, "_", "_", "_", str(head), deprel, "_", "_"]
    )


def chain_parse(text: str) -> str:
    """Model-free fallback parse: each sentence becomes a chain.

    Token k attaches to token k-1 and the first token is the root, which
    mirrors the tree shape graphsum builds on its own when no sidecar is
    present. Lemmas are lowercased forms.
    """
    blocks = []
    for sentence in segment(text):
        tokens = _WORDS.findall(sentence)
        if not tokens:
            continue
        lines = []
        for k, form in enumerate(tokens, start=1):
            head = 0 if k == 1 else k - 1
            deprel = "root" if k == 1 else "dep"
            lines.append(_conllu_line(k, form, form.lower(), head, deprel))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n" if blocks else ""


_STANZA_PIPELINE = None


def _stanza_pipeline(lang: str):
    global _STANZA_PIPELINE
    if _STANZA_PIPELINE is None:
        import stanza

        _STANZA_PIPELINE = stanza.Pipeline(
            lang=lang,
            processors="tokenize,pos,lemma,depparse",
            verbose=False,
        )
    return _STANZA_PIPELINE


def stanza_parse(text: str, lang: str = "en") -> str:
    """Neural parse via stanza; sentence segmentation is the parser's own."""
    doc = _stanza_pipeline(lang)(text)
    blocks = []
    for sentence in doc.sentences:
        lines = [
            _conllu_line(
                word.id,
                word.text,
                word.lemma or word.text.lower(),
                word.head,
                word.deprel or "dep",
            )
            for word in sentence.words
        ]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n" if blocks else ""


def parse_one(args: tuple[str, str, str, str]) -> tuple[str, FileStatus]:
    """Parse a single story file; used directly and as the pool worker."""
    story_path, out_dir, backend, lang = args
    stem = Path(story_path).stem
    try:
        record = load_story(story_path)
        if backend == "stanza":
            conllu = stanza_parse(record.article_text, lang=lang)
        else:
            conllu = chain_parse(record.article_text)
        if not conllu:
            return stem, FileStatus("parse_failed", error="no parseable sentences")
        _atomic_write(Path(out_dir) / f"{stem}.conllu", conllu)
        sentence_count = conllu.strip().count("\n\n") + 1
        return stem, FileStatus("ok", sentences=sentence_count)
    except Exception as exc:  # noqa: BLE001 - a bad file must not stop the batch
        return stem, FileStatus("parse_failed", error=f"{type(exc).__name__}: {exc}")


def parse_corpus(
    input_dir: str | Path,
    output_dir: str | Path,
    backend: str = "chain",
    lang: str = "en",
    jobs: int = 1,
) -> AdapterManifest:
    """Parse every .story in input_dir, writing one sidecar per story.

    Failures are recorded per file and the batch continues. An empty
    input directory yields an empty manifest.
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    input_dir = Path(input_dir)
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)

    stories = sorted(input_dir.glob("*.story"))
    manifest = AdapterManifest(str(input_dir), str(output_dir), backend)
    work = [(str(p), str(output_dir), backend, lang) for p in stories]

    if jobs > 1 and backend != "stanza":
        # the stanza pipeline holds GPU/model state; keep it in-process
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(parse_one, work))
    else:
        results = [parse_one(args) for args in work]

    for stem, status in results:
        manifest.files[stem] = status
    return manifest
