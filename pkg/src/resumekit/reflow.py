"""Reading-order recovery and segmentation for generic resumes.

Multi-column pages are detected from horizontal gap statistics: within
a line, inter-word gaps are small and plentiful while inter-column gaps
are rare and much wider. Pages that show a consistent wide gap are
split into columns and re-emitted column by column; everything else
keeps its physical order. Logically ordered lines are then partitioned
into headed segments by a small feature score.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from .doc import Line, SpanDocument, TextSpan, assemble_lines

INF = math.inf

SEGMENT_HEADING_KEYWORDS = frozenset(
    k.casefold()
    for k in (
        "Experience", "Education", "Skills", "Projects", "Objective", "Summary",
        "Work History", "Certifications", "Awards", "Languages", "Interests",
        "Publications", "Contact", "References",
    )
)


@dataclass(frozen=True)
class ReflowParams:
    """Tunable constants; the qualitative signals are fixed, the numbers are not."""

    gap_median_factor: float = 3.0
    gap_mad_factor: float = 4.0
    min_gap_sample: int = 8
    column_line_fraction: float = 0.30
    column_x_tolerance: float = 0.05  # fraction of page width
    max_columns: int = 3
    heading_score_threshold: int = 2
    max_heading_tokens: int = 4
    allcaps_ratio: float = 0.8
    paragraph_gap_factor: float = 1.8


DEFAULT_PARAMS = ReflowParams()


@dataclass(frozen=True)
class GapStats:
    """Within-line horizontal gaps split at the column threshold."""

    intra_word_gaps: tuple[float, ...]
    candidate_column_gaps: tuple[float, ...]
    threshold: float


@dataclass(frozen=True)
class Segment:
    """A contiguous block of logically ordered text awaiting labeling.

    body may be empty only in the degenerate case of a heading line with
    no following lines; conserving the heading text wins over dropping it.
    """

    heading_text: str | None
    body: str
    order_index: int
    source_page_range: tuple[int, int]


def _line_gaps(line: Line) -> list[float]:
    return [nxt.x - prev.right for prev, nxt in zip(line.spans, line.spans[1:])]


def compute_gap_threshold(
    lines: list[Line], params: ReflowParams = DEFAULT_PARAMS
) -> GapStats:
    """Column-gap threshold: max(3 x median, median + 4 x MAD) over all gaps.

    Fewer than min_gap_sample gaps is too little evidence; the threshold
    goes to +inf so no column split can happen.
    """
    gaps: list[float] = []
    for line in lines:
        gaps.extend(_line_gaps(line))
    if len(gaps) < params.min_gap_sample:
        return GapStats(tuple(gaps), (), INF)
    med = statistics.median(gaps)
    mad = statistics.median(abs(g - med) for g in gaps)
    threshold = max(params.gap_median_factor * med, med + params.gap_mad_factor * mad)
    if threshold <= 0:
        return GapStats(tuple(gaps), (), INF)
    return GapStats(
        intra_word_gaps=tuple(g for g in gaps if g <= threshold),
        candidate_column_gaps=tuple(g for g in gaps if g > threshold),
        threshold=threshold,
    )


def _page_width(doc: SpanDocument, page_number: int) -> float:
    for page in doc.pages:
        if page.number == page_number and page.width > 0:
            return page.width
    spans = doc.spans_on_page(page_number)
    return max((s.right for s in spans), default=1.0)


def _split_positions(
    doc: SpanDocument, page_lines: list[Line], params: ReflowParams
) -> list[float]:
    """Column boundaries for one page, or [] when it reads as single-column.

    Consistency is judged on where the right side of each wide gap starts
    (columns align on their left edge; their right edges are ragged), but
    the boundary used to assign spans is the median gap midpoint, i.e. the
    middle of the gutter.
    """
    stats = compute_gap_threshold(page_lines, params)
    if stats.threshold == INF:
        return []
    multi = [line for line in page_lines if len(line.spans) >= 2]
    if not multi:
        return []
    tolerance = params.column_x_tolerance * _page_width(doc, page_lines[0].page)

    # (right-side start x, gap width, line index) per over-threshold gap.
    positions: list[tuple[float, float, int]] = []
    for line_idx, line in enumerate(multi):
        for prev, nxt in zip(line.spans, line.spans[1:]):
            if nxt.x - prev.right > stats.threshold:
                positions.append((nxt.x, nxt.x - prev.right, line_idx))
    if not positions:
        return []

    positions.sort()
    clusters: list[list[tuple[float, float, int]]] = []
    for pos in positions:
        if clusters and pos[0] - clusters[-1][0][0] <= tolerance:
            clusters[-1].append(pos)
        else:
            clusters.append([pos])

    needed = params.column_line_fraction * len(multi)
    qualified = []
    for cluster in clusters:
        support = len({line_idx for _, _, line_idx in cluster})
        if support >= needed:
            # Boundary sits just left of the column start, backed off by at
            # most half the typical gutter so ragged left edges stay left.
            start = statistics.median(x for x, _, _ in cluster)
            gutter = statistics.median(width for _, width, _ in cluster)
            qualified.append((support, start - min(tolerance, gutter / 2.0)))
    qualified.sort(key=lambda item: (-item[0], item[1]))
    return sorted(x for _, x in qualified[: params.max_columns - 1])


def reflow(doc: SpanDocument, params: ReflowParams = DEFAULT_PARAMS) -> list[Line]:
    """Lines in logical reading order; spans are never dropped or duplicated.

    The output order depends only on geometry, so running reflow on an
    already reflowed document reproduces the same order (idempotence).
    """
    out: list[Line] = []
    all_lines = assemble_lines(doc)
    for page in sorted(doc.pages, key=lambda p: p.number):
        page_lines = [line for line in all_lines if line.page == page.number]
        if not page_lines:
            continue
        splits = _split_positions(doc, page_lines, params)
        if not splits:
            out.extend(page_lines)
            continue
        columns: list[list[Line]] = [[] for _ in range(len(splits) + 1)]
        for line in page_lines:
            parts: list[list[TextSpan]] = [[] for _ in range(len(splits) + 1)]
            for span in line.spans:
                col = sum(1 for x in splits if span.x >= x)
                parts[col].append(span)
            for col, part in enumerate(parts):
                if part:
                    columns[col].append(Line.from_spans(part))
        for column in columns:
            out.extend(column)
    return out


# ---------------------------------------------------------------------------
# Heading detection and segmentation
# ---------------------------------------------------------------------------


def _is_all_caps(text: str, ratio: float) -> bool:
    letters = [c for c in text if c.isalpha()]
    if not letters:
        return False
    return sum(1 for c in letters if c.isupper()) / len(letters) >= ratio


def _is_title_case(text: str) -> bool:
    # Strict title case: every alphabetic token is Capitalized-lowercase;
    # mixed-caps tokens like "BSc" do not qualify.
    if text and text[-1] in ".,:;!?":
        return False
    tokens = [t for t in text.split() if any(c.isalpha() for c in t)]
    if not tokens:
        return False
    for token in tokens:
        core = "".join(c for c in token if c.isalpha())
        if not (core[0].isupper() and core[1:].islower()):
            return False
    return True


def _lexicon_hit(text: str) -> bool:
    return text.strip().rstrip(":").casefold() in SEGMENT_HEADING_KEYWORDS


def heading_score(
    line: Line,
    body_size: float | None,
    metadata: bool,
    params: ReflowParams = DEFAULT_PARAMS,
) -> int:
    """Count of corroborating heading features; a heading needs >= 2."""
    text = line.text
    score = 0
    if len(text.split()) <= params.max_heading_tokens:
        score += 1
    if _is_all_caps(text, params.allcaps_ratio) or _is_title_case(text):
        score += 1
    font_bigger = (
        metadata
        and body_size is not None
        and (line.max_font_size() or 0) > body_size
    )
    if font_bigger or line.all_bold():
        score += 1
    if _lexicon_hit(text):
        score += 1
    return score


def _modal_font_size(doc: SpanDocument) -> float | None:
    sizes = [s.font_size for s in doc.spans if s.font_size is not None]
    if not sizes:
        return None
    counts: dict[float, int] = {}
    for s in sizes:
        counts[s] = counts.get(s, 0) + 1
    return max(counts, key=lambda s: (counts[s], -s))


def _typical_advance(lines: list[Line]) -> float:
    advances = [
        nxt.baseline_y - prev.baseline_y
        for prev, nxt in zip(lines, lines[1:])
        if nxt.page == prev.page and nxt.baseline_y > prev.baseline_y
    ]
    if not advances:
        return INF
    return statistics.median(advances)


def _body_text(lines: list[Line], typical_advance: float, factor: float) -> str:
    parts: list[str] = []
    for i, line in enumerate(lines):
        if i > 0:
            prev = lines[i - 1]
            same_page = prev.page == line.page
            if same_page and (line.baseline_y - prev.baseline_y) > factor * typical_advance:
                parts.append("")
        parts.append(line.text)
    return "\n".join(parts)


def segment(
    lines: list[Line],
    doc: SpanDocument,
    params: ReflowParams = DEFAULT_PARAMS,
) -> list[Segment]:
    """Partition logically ordered lines into headed segments.

    The document's first line only counts as a heading when it matches
    the section keyword lexicon: resumes lead with the candidate name,
    which is often short and capitalized but is never a section heading.
    """
    if not lines:
        return []
    body_size = _modal_font_size(doc)
    metadata = doc.metadata_present
    advance = _typical_advance(lines)

    is_heading = []
    for i, line in enumerate(lines):
        if i == 0 and not _lexicon_hit(line.text):
            is_heading.append(False)
            continue
        score = heading_score(line, body_size, metadata, params)
        is_heading.append(score >= params.heading_score_threshold)

    segments: list[Segment] = []

    def emit(heading: Line | None, body_lines: list[Line]) -> None:
        if heading is None and not body_lines:
            return
        pages = [ln.page for ln in body_lines] + ([heading.page] if heading else [])
        segments.append(
            Segment(
                heading_text=heading.text if heading else None,
                body=_body_text(body_lines, advance, params.paragraph_gap_factor),
                order_index=len(segments),
                source_page_range=(min(pages), max(pages)),
            )
        )

    current_heading: Line | None = None
    current_body: list[Line] = []
    started = False
    for line, heading in zip(lines, is_heading):
        if heading:
            if started:
                emit(current_heading, current_body)
            current_heading, current_body, started = line, [], True
        else:
            current_body.append(line)
            started = True
    emit(current_heading, current_body)
    return segments
