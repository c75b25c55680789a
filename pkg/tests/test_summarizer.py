import pytest

from graphsum.corpus import StoryRecord
from graphsum.rankers import METHODS
from graphsum.similarity import METRICS, pairwise_similarities
from graphsum.summarizer import Summary, SummaryConfig, summarize
from graphsum.textproc import build_document

TEXT = (
    "The committee approved the new budget on Tuesday. "
    "The budget includes funding for schools and roads. "
    "Opposition members criticized the budget as too large. "
    "The mayor defended the spending plan in a press conference. "
    "Local schools will receive new computers under the plan. "
    "Road repairs are scheduled to begin in the spring. "
    "The committee will meet again next month. "
    "Residents expressed mixed feelings about the tax increase. "
    "The tax increase funds most of the new spending. "
    "A final vote is expected before the summer recess."
)


@pytest.fixture(scope="module")
def doc():
    record = StoryRecord(id="budget", article_text=TEXT, highlights=("Budget approved",))
    return build_document(record)


def test_config_validation():
    with pytest.raises(ValueError):
        SummaryConfig(method="eigenvictor")
    with pytest.raises(ValueError):
        SummaryConfig(metric="cosine")
    with pytest.raises(ValueError):
        SummaryConfig(length=0)


def test_selected_ascending_and_sentences_match(doc):
    result = summarize(doc, SummaryConfig(length=4))
    assert list(result.selected) == sorted(result.selected)
    assert len(result.selected) == 4
    for pos, idx in enumerate(result.selected):
        assert result.sentences[pos] == doc.sentences[idx].raw


def test_every_method_metric_combination_works(doc):
    for method in METHODS:
        for metric in METRICS:
            result = summarize(doc, SummaryConfig(method=method, metric=metric, length=3))
            assert len(result.selected) == 3
            assert len(result.scores) == len(doc)


def test_length_clamped_to_document(doc):
    result = summarize(doc, SummaryConfig(length=50))
    assert list(result.selected) == list(range(len(doc)))


def test_zero_threshold_gives_lead_n(doc):
    for method in METHODS:
        config = SummaryConfig(method=method, threshold=0.0, length=5)
        result = summarize(doc, config)
        assert list(result.selected) == [0, 1, 2, 3, 4], method


def test_precomputed_scores_shortcut(doc):
    config = SummaryConfig(length=3)
    scores = pairwise_similarities(doc, config.metric)
    direct = summarize(doc, config)
    shared = summarize(doc, config, scores=scores)
    assert direct.selected == shared.selected
    assert direct.scores == shared.scores


def test_text_joins_sentences(doc):
    result = summarize(doc, SummaryConfig(length=2))
    assert result.text() == "\n".join(result.sentences)


def test_repeated_runs_identical(doc):
    config = SummaryConfig(method="clusters", metric="ted", length=4)
    runs = [summarize(doc, config) for _ in range(3)]
    assert runs[0] == runs[1] == runs[2]
