"""Exception hierarchy shared across the package."""


class BlendsmithError(Exception):
    """Base class for all errors raised by this package."""


class ResourceError(BlendsmithError):
    """A linguistic resource file is missing, malformed, or degenerate."""


class PipelineError(BlendsmithError):
    """Name generation could not proceed on the given input."""


class EmptyDescriptionError(PipelineError):
    """The description contains no alphabetic content."""


class NoRootsError(PipelineError):
    """Every token in the description is a stopword."""


class NoCandidatesError(PipelineError):
    """The syllable pool produced no rule-compatible blends."""


class ScoreError(BlendsmithError):
    """A candidate string cannot be scored."""


class TooShortError(ScoreError):
    """Pronounceability is undefined for names shorter than two characters."""


class RankError(BlendsmithError):
    """Ranking, fitting, or metric computation failed."""


class UnlearnableError(RankError):
    """The preference data carries no usable ranking signal."""


class MismatchError(RankError):
    """Two rankings (or a ranking and its ratings) do not cover the same items."""
