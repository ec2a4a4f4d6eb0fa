"""resumekit: resume parsing, reading-order recovery, and candidate ranking."""

from .detector import DocumentFormat, FormatSignature, FormatVerdict, detect_format
from .doc import Line, SpanDocument, TextSpan, assemble_lines
from .ingest import ingest_auto, ingest_layout_xml, ingest_plaintext
from .linkedin import (
    ExperienceEntry,
    ParsedResume,
    ResumeSection,
    SectionLabel,
    emit_json,
    parse_linkedin,
)
from .pairs import CandidateProfile, PairSample, build_pairs, split_pairs
from .ranking import ScoredCandidate, rank_candidates
from .reflow import Segment, reflow, segment
from .scoring import LexicalScorer, RemoteScorer, evaluate_pairs, fit_lexical

__version__ = "0.1.0"

__all__ = [
    "CandidateProfile",
    "DocumentFormat",
    "ExperienceEntry",
    "FormatSignature",
    "FormatVerdict",
    "LexicalScorer",
    "Line",
    "PairSample",
    "ParsedResume",
    "RemoteScorer",
    "ResumeSection",
    "ScoredCandidate",
    "SectionLabel",
    "Segment",
    "SpanDocument",
    "TextSpan",
    "assemble_lines",
    "build_pairs",
    "detect_format",
    "emit_json",
    "evaluate_pairs",
    "fit_lexical",
    "ingest_auto",
    "ingest_layout_xml",
    "ingest_plaintext",
    "parse_linkedin",
    "rank_candidates",
    "reflow",
    "segment",
    "split_pairs",
    "__version__",
]
