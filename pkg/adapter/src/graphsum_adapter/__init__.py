"""graphsum-adapter: batch dependency parsing into CoNLL-U sidecars."""

from .adapter import (
    AdapterManifest,
    BACKENDS,
    FileStatus,
    chain_parse,
    parse_corpus,
    stanza_parse,
)

__version__ = "0.1.0"

__all__ = [
    "AdapterManifest",
    "BACKENDS",
    "FileStatus",
    "chain_parse",
    "parse_corpus",
    "stanza_parse",
]
