"""ROUGE-N and ROUGE-L recall/precision/F1 for summary evaluation.

Scoring uses its own tokenizer (lowercased alphanumeric runs, stopwords
retained, no stemming) so evaluation is independent of however the
pipeline normalized sentences.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyReference, EmptySummary

_TOKEN = re.compile(r"[^\W_]+")


@dataclass(frozen=True)
class RougeScore:
    recall: float
    precision: float
    f1: float


@dataclass(frozen=True)
class RougeReport:
    rouge1: RougeScore
    rouge2: RougeScore
    rougeL: RougeScore


def rouge_tokenize(text: str) -> list[str]:
    return _TOKEN.findall(text.lower())


def _f1(recall: float, precision: float) -> float:
    if recall + precision == 0.0:
        return 0.0
    return 2.0 * recall * precision / (recall + precision)


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int) -> RougeScore:
    """Clipped n-gram overlap: each reference n-gram may be matched at most
    as many times as it occurs.

    Examples
    --------
    Two of four reference unigrams match, two of three candidate unigrams:

    >>> s = rouge_n("the cat sat".split(), "the cat ran fast".split(), 1)
    >>> (round(s.recall, 4), round(s.precision, 4), round(s.f1, 4))
    (0.5, 0.6667, 0.5714)

    One bigram ("the cat") out of three reference / two candidate bigrams:

    >>> s = rouge_n("the cat sat".split(), "the cat ran fast".split(), 2)
    >>> (round(s.recall, 4), round(s.precision, 4), round(s.f1, 4))
    (0.3333, 0.5, 0.4)
    """
    if n < 1:
        raise ValueError("n-gram order must be at least 1")
    cand = _ngrams(candidate, n)
    ref = _ngrams(reference, n)
    overlap = sum((cand & ref).values())
    cand_total = sum(cand.values())
    ref_total = sum(ref.values())
    recall = overlap / ref_total if ref_total else 0.0
    precision = overlap / cand_total if cand_total else 0.0
    return RougeScore(recall, precision, _f1(recall, precision))


def _lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            if x == y:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def rouge_l(candidate: Sequence[str], reference: Sequence[str]) -> RougeScore:
    """Longest-common-subsequence recall against the reference.

    Examples
    --------
    LCS of [a, b, c, d] and [a, c, d] is [a, c, d], length 3:

    >>> s = rouge_l(["a", "b", "c", "d"], ["a", "c", "d"])
    >>> (s.recall, s.precision, round(s.f1, 6))
    (1.0, 0.75, 0.857143)
    """
    lcs = _lcs_length(candidate, reference)
    recall = lcs / len(reference) if reference else 0.0
    precision = lcs / len(candidate) if candidate else 0.0
    return RougeScore(recall, precision, _f1(recall, precision))


def score_summary(candidate_sentences: Iterable[str], reference_sentences: Iterable[str]) -> RougeReport:
    """ROUGE-1/2/L for a candidate summary against a reference.

    Both sides are flattened to one token sequence. A side that yields no
    tokens at all is an error rather than a silent zero.
    """
    cand_tokens: list[str] = []
    for sentence in candidate_sentences:
        cand_tokens.extend(rouge_tokenize(sentence))
    ref_tokens: list[str] = []
    for sentence in reference_sentences:
        ref_tokens.extend(rouge_tokenize(sentence))
    if not cand_tokens:
        raise EmptySummary("candidate summary has no tokens")
    if not ref_tokens:
        raise EmptyReference("reference summary has no tokens")
    return RougeReport(
        rouge1=rouge_n(cand_tokens, ref_tokens, 1),
        rouge2=rouge_n(cand_tokens, ref_tokens, 2),
        rougeL=rouge_l(cand_tokens, ref_tokens),
    )
