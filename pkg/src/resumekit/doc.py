"""Core positioned-text document model.

Coordinates use the layout-XML convention: top-left origin, y grows
downward, one abstract unit scale per document. All types are immutable
after construction and every operation here is pure, so distinct
documents can be processed in parallel without coordination.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field

# Used when a page has too few spans to estimate its own line tolerance.
FALLBACK_Y_TOLERANCE = 2.0


@dataclass(frozen=True)
class TextSpan:
    """One positioned text run, with font metadata when the source had any."""

    text: str
    page: int
    x: float
    y: float
    width: float
    height: float
    font_size: float | None = None
    font_id: str | None = None
    bold: bool = False
    italic: bool = False

    def __post_init__(self) -> None:
        if not self.text.strip():
            raise ValueError("span text must be non-empty after trim")
        if self.page < 1:
            raise ValueError("span page must be >= 1")
        if self.width < 0 or self.height < 0:
            raise ValueError("span width/height must be >= 0")
        if self.font_size is not None and self.font_size <= 0:
            raise ValueError("font_size must be positive when present")

    @property
    def right(self) -> float:
        return self.x + self.width

    @property
    def center_x(self) -> float:
        return self.x + self.width / 2.0


@dataclass(frozen=True)
class PageInfo:
    number: int
    width: float
    height: float


@dataclass(frozen=True)
class FontInfo:
    size: float
    family: str


@dataclass(frozen=True)
class SpanDocument:
    """A document as emitted by an upstream converter: ordered spans plus pages.

    metadata_present is document-uniform: either every span carries a
    font size or none does.
    """

    source_name: str
    pages: tuple[PageInfo, ...]
    spans: tuple[TextSpan, ...]
    metadata_present: bool
    font_table: dict[str, FontInfo] = field(default_factory=dict)

    def __post_init__(self) -> None:
        page_numbers = {p.number for p in self.pages}
        for span in self.spans:
            if span.page not in page_numbers:
                raise ValueError(f"span references unknown page {span.page}")
            if span.font_id is not None and span.font_id not in self.font_table:
                raise ValueError(f"span references unknown font {span.font_id!r}")
        if self.spans:
            uniform = all(s.font_size is not None for s in self.spans)
            if self.metadata_present != uniform:
                raise ValueError("metadata_present inconsistent with span font data")

    def spans_on_page(self, number: int) -> list[TextSpan]:
        return [s for s in self.spans if s.page == number]


@dataclass(frozen=True)
class Line:
    """Spans grouped into one horizontal line; members sorted by x."""

    spans: tuple[TextSpan, ...]
    page: int
    baseline_y: float
    text: str

    @classmethod
    def from_spans(cls, spans: list[TextSpan]) -> "Line":
        ordered = sorted(spans, key=lambda s: (s.x, s.text))
        return cls(
            spans=tuple(ordered),
            page=ordered[0].page,
            baseline_y=min(s.y for s in ordered),
            text=" ".join(s.text for s in ordered),
        )

    def max_font_size(self) -> float | None:
        sizes = [s.font_size for s in self.spans if s.font_size is not None]
        return max(sizes) if sizes else None

    def all_bold(self) -> bool:
        return all(s.bold for s in self.spans)


def default_y_tolerance(page_spans: list[TextSpan]) -> float:
    """Half the median span height, capped at 2.0 units on tiny pages.

    The cap never exceeds the height-derived value: a two-line plaintext
    page (span height 1.0) must not merge into one line.
    """
    if not page_spans:
        return FALLBACK_Y_TOLERANCE
    median_height = statistics.median(s.height for s in page_spans)
    if median_height <= 0:
        return FALLBACK_Y_TOLERANCE
    tolerance = 0.5 * median_height
    if len(page_spans) < 3:
        return min(FALLBACK_Y_TOLERANCE, tolerance)
    return tolerance

def assemble_lines(doc: SpanDocument, y_tolerance: float | None = None) -> list[Line]:
    """Partition spans into lines: same page, y within tolerance (transitively).

    On a sorted axis the transitive closure of |dy| <= tol is exactly the
    run of consecutive gaps <= tol, so one forward pass suffices. Lines
    come back sorted by (page, baseline_y).
    """
    if y_tolerance is not None and y_tolerance <= 0:
        raise ValueError("y_tolerance must be positive")
    lines: list[Line] = []
    for page in sorted(doc.pages, key=lambda p: p.number):
        page_spans = doc.spans_on_page(page.number)
        if not page_spans:
            continue
        tol = y_tolerance if y_tolerance is not None else default_y_tolerance(page_spans)
        ordered = sorted(page_spans, key=lambda s: (s.y, s.x, s.text))
        group: list[TextSpan] = [ordered[0]]
        for span in ordered[1:]:
            if span.y - group[-1].y <= tol:
                group.append(span)
            else:
                lines.append(Line.from_spans(group))
                group = [span]
        lines.append(Line.from_spans(group))
    return lines


def strip_font_metadata(doc: SpanDocument) -> SpanDocument:
    """Copy of doc with all font information removed (metadata_present=False)."""
    bare = tuple(
        TextSpan(
            text=s.text,
            page=s.page,
            x=s.x,
            y=s.y,
            width=s.width,
            height=s.height,
            bold=False,
            italic=False,
        )
        for s in doc.spans
    )
    return SpanDocument(
        source_name=doc.source_name,
        pages=doc.pages,
        spans=bare,
        metadata_present=False,
        font_table={},
    )


def document_from_lines(doc: SpanDocument, lines: list[Line]) -> SpanDocument:
    """Rebuild a document whose emission order follows the given lines."""
    spans = tuple(s for line in lines for s in line.spans)
    return SpanDocument(
        source_name=doc.source_name,
        pages=doc.pages,
        spans=spans,
        metadata_present=doc.metadata_present,
        font_table=doc.font_table,
    )
