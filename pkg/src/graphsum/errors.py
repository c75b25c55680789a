"""Exception types shared across the toolkit."""


class GraphSumError(Exception):
    """Base class for all toolkit errors."""


class MalformedStory(GraphSumError):
    """Story file has no body text before the highlight markers."""


class ConlluParseError(GraphSumError):
    """Malformed CoNLL-U input. Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class HeadOutOfRange(ConlluParseError):
    """A token's head index points outside its sentence."""


class EmptyCorpus(GraphSumError):
    """No usable documents were found."""


class TreeError(GraphSumError):
    """Dependency tree construction failed."""


class MultipleRoots(TreeError):
    pass


class NoRoot(TreeError):
    pass


class CycleDetected(TreeError):
    pass


class EmptySentence(TreeError):
    """A tree was requested for a sentence with no tokens."""


class InvalidThreshold(GraphSumError, ValueError):
    """Edge-selection threshold outside [0, 1]."""


class CliqueBudgetExceeded(GraphSumError):
    """Clique enumeration produced more cliques than the configured cap."""


class EmptySummary(GraphSumError):
    """A ROUGE comparison was requested for an empty generated summary."""


class EmptyReference(GraphSumError):
    """A ROUGE comparison was requested against an empty reference."""
