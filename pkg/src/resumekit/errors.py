"""Exception types raised across the toolkit."""


class ResumeKitError(Exception):
    """Base class for every error this package raises deliberately."""


class MalformedInput(ResumeKitError):
    """Upstream converter output could not be parsed (bad XML, missing attributes)."""


class MissingMetadata(ResumeKitError):
    """An operation that needs font metadata was given a document without it."""


class NotLinkedInFormat(ResumeKitError):
    """parse_linkedin was invoked on a document the detector calls generic."""


class StructureError(ResumeKitError):
    """Detector and parser disagree: expected document structure is absent."""


class InsufficientCorpus(ResumeKitError):
    """Classifier training corpus covers fewer than two labels."""


class InsufficientProfiles(ResumeKitError):
    """Pair construction needs at least two profiles and one positive pair."""


class NegativeSamplingExhausted(ResumeKitError):
    """Negative draws hit the retry budget before reaching the positive count."""


class DegenerateSplit(ResumeKitError):
    """A train/test split left one side without positives or negatives."""


class EmptyCorpus(ResumeKitError):
    """Lexical scorer fitted on an empty corpus."""


class EmptyJobDescription(ResumeKitError):
    """Ranking requested against a blank job description."""


class ScorerUnavailable(ResumeKitError):
    """Remote scorer timed out, errored, or answered with a malformed body."""
