"""Font-distribution heuristics that separate LinkedIn-format from generic resumes.

The signal is the distribution of font sizes and the order in which
they first occur: a standard-format export leads with a unique largest
name span, repeats one heading-size tier a handful of times, and those
heading spans spell the canonical section names. All five rules must
hold; any failure folds into a Generic verdict. Thresholds are a
reconstruction and therefore live in FormatSignature rather than being
hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .doc import SpanDocument
from .errors import MissingMetadata
from .linkedin import DEFAULT_HEADING_LEXICON, SectionLabel


class DocumentFormat(Enum):
    LINKEDIN = "LinkedInFormat"
    GENERIC = "Generic"


@dataclass(frozen=True)
class FontHistogram:
    """Exact per-size span counts plus each size's first occurrence index."""

    buckets: dict[float, int]
    first_occurrence: dict[float, int]
    distinct_sizes_desc: tuple[float, ...]


@dataclass(frozen=True)
class FormatSignature:
    min_heading_repeats: int = 3
    max_heading_repeats: int = 15
    min_heading_hits: int = 3
    lexicon: dict[str, SectionLabel] = field(
        default_factory=lambda: dict(DEFAULT_HEADING_LEXICON)
    )


@dataclass(frozen=True)
class FormatVerdict:
    format: DocumentFormat
    confidence_notes: tuple[str, ...]


def build_histogram(doc: SpanDocument) -> FontHistogram:
    if not doc.metadata_present:
        raise MissingMetadata(f"{doc.source_name}: no font metadata")
    buckets: dict[float, int] = {}
    first: dict[float, int] = {}
    for index, span in enumerate(doc.spans):
        size = span.font_size
        assert size is not None  # guaranteed by metadata_present
        buckets[size] = buckets.get(size, 0) + 1
        first.setdefault(size, index)
    return FontHistogram(
        buckets=buckets,
        first_occurrence=first,
        distinct_sizes_desc=tuple(sorted(buckets, reverse=True)),
    )


def detect_format(doc: SpanDocument, sig: FormatSignature | None = None) -> FormatVerdict:
    """Conjunction of five rules; notes record each rule's outcome."""
    if sig is None:
        sig = FormatSignature()
    notes: list[str] = []

    def generic(reason: str) -> FormatVerdict:
        notes.append(reason)
        return FormatVerdict(DocumentFormat.GENERIC, tuple(notes))

    if not doc.metadata_present or not doc.spans:
        return generic("rule a FAIL: no font metadata")
    notes.append("rule a pass: font metadata present")

    hist = build_histogram(doc)
    sizes = hist.distinct_sizes_desc
    if len(sizes) < 3:
        return generic(f"rule b FAIL: {len(sizes)} distinct sizes (< 3)")
    notes.append(f"rule b pass: {len(sizes)} distinct sizes")

    largest = sizes[0]
    if hist.buckets[largest] != 1 or hist.first_occurrence[largest] != 0:
        return generic(
            "rule c FAIL: largest size count="
            f"{hist.buckets[largest]}, first index={hist.first_occurrence[largest]}"
        )
    notes.append("rule c pass: unique largest size leads the document")

    heading_size = sizes[1]
    in_range = [
        s
        for s in sizes
        if sig.min_heading_repeats <= hist.buckets[s] <= sig.max_heading_repeats
    ]
    if in_range != [heading_size]:
        return generic(
            f"rule d FAIL: sizes with heading-like counts {in_range}, "
            f"wanted exactly the second-largest {heading_size}"
        )
    notes.append(
        f"rule d pass: heading tier {heading_size} repeats {hist.buckets[heading_size]}x"
    )

    lexicon = {h.casefold() for h in sig.lexicon}
    hits = sum(
        1
        for s in doc.spans
        if s.font_size == heading_size and s.text.strip().casefold() in lexicon
    )
    if hits < sig.min_heading_hits:
        return generic(f"rule e FAIL: {hits} lexicon headings (< {sig.min_heading_hits})")
    notes.append(f"rule e pass: {hits} lexicon headings")

    return FormatVerdict(DocumentFormat.LINKEDIN, tuple(notes))
