"""Nearest-centroid section labeling and the generic-to-standard pipeline.

The classifier is a deterministic tf-idf nearest-centroid model trained
on standard-format sections. It sits behind the SectionClassifier
protocol so a remote model service (see scoring.RemoteSectionClassifier)
can be swapped in without touching the pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol

from . import vectorize
from .doc import SpanDocument
from .errors import InsufficientCorpus, StructureError
from .linkedin import (
    ParsedResume,
    ResumeSection,
    SectionLabel,
    extract_contact,
    make_candidate_id,
    parse_entry_header,
)
from .reflow import Segment, reflow, segment

HEADING_WEIGHT = 3  # heading tokens repeat this many times in the feature text

MODEL_FORMAT_VERSION = "centroid-model/v1"


@dataclass(frozen=True)
class LabeledSegment:
    segment: Segment
    label: SectionLabel


class SectionClassifier(Protocol):
    def classify(self, seg: Segment) -> tuple[SectionLabel, float]: ...


@dataclass(frozen=True)
class CentroidModel:
    """Unit-norm tf-idf centroid per label, over a fixed vocabulary."""

    vocabulary: dict[str, int]
    idf: dict[str, float]
    centroids: dict[SectionLabel, dict[str, float]]
    trained_on: dict[SectionLabel, int]
    heading_weight: int = HEADING_WEIGHT

    def classify(self, seg: Segment) -> tuple[SectionLabel, float]:
        return classify(self, seg)


def feature_text(seg: Segment, heading_weight: int = HEADING_WEIGHT) -> str:
    """Body plus the heading repeated; headings are the strongest signal."""
    parts = [seg.body]
    if seg.heading_text:
        parts.extend([seg.heading_text] * heading_weight)
    return "\n".join(parts)


def fit(corpus: list[LabeledSegment], heading_weight: int = HEADING_WEIGHT) -> CentroidModel:
    """Fit centroids; deterministic and insensitive to corpus order.

    Per-token accumulation uses math.fsum, so the mean over a label's
    vectors does not depend on sample order.
    """
    labels = {item.label for item in corpus}
    if len(labels) < 2:
        raise InsufficientCorpus(f"need >= 2 labels, got {len(labels)}")
    for item in corpus:
        if not item.segment.body.strip():
            raise InsufficientCorpus("training segment with empty body")

    texts = [feature_text(item.segment, heading_weight) for item in corpus]
    idf_model = vectorize.fit_idf(texts)
    vocabulary = {t: i for i, t in enumerate(sorted(idf_model.df))}
    idf = {t: idf_model.idf(t) for t in vocabulary}

    per_label: dict[SectionLabel, list[dict[str, float]]] = {}
    for item, text in zip(corpus, texts):
        vec = vectorize.tfidf_vector(text, idf_model, frozenset(vocabulary))
        per_label.setdefault(item.label, []).append(vec)

    centroids: dict[SectionLabel, dict[str, float]] = {}
    trained_on: dict[SectionLabel, int] = {}
    for label in sorted(per_label, key=_label_order):
        vectors = per_label[label]
        tokens = sorted({t for vec in vectors for t in vec})
        mean = {
            t: math.fsum(vec.get(t, 0.0) for vec in vectors) / len(vectors)
            for t in tokens
        }
        centroids[label] = vectorize.normalize(mean)
        trained_on[label] = len(vectors)
    return CentroidModel(
        vocabulary=vocabulary,
        idf=idf,
        centroids=centroids,
        trained_on=trained_on,
        heading_weight=heading_weight,
    )


def _label_order(label: SectionLabel) -> int:
    return list(SectionLabel).index(label)


def classify(model: CentroidModel, seg: Segment) -> tuple[SectionLabel, float]:
    """Argmax cosine against the centroids; zero vectors sink to (Other, 0.0).

    Ties break by SectionLabel declaration order.
    """
    counts: dict[str, float] = {}
    for token in vectorize.tokenize(feature_text(seg, model.heading_weight)):
        if token in model.vocabulary:
            counts[token] = counts.get(token, 0.0) + 1.0
    vec = vectorize.normalize({t: n * model.idf[t] for t, n in counts.items()})
    if not vec:
        return SectionLabel.Other, 0.0
    best_label = SectionLabel.Other
    best_value = -1.0
    for label in SectionLabel:
        centroid = model.centroids.get(label)
        if centroid is None:
            continue
        value = vectorize.dot(vec, centroid)
        if value > best_value:
            best_label, best_value = label, value
    return best_label, min(1.0, max(0.0, best_value))


# ---------------------------------------------------------------------------
# Generic document -> standard structure
# ---------------------------------------------------------------------------


def convert_to_standard(doc: SpanDocument, model: SectionClassifier) -> ParsedResume:
    """reflow -> segment -> classify -> assemble a ParsedResume.

    A headingless first segment followed by headed ones is the lead: it
    is mined for the candidate name (first line) and contact details and
    its remainder becomes a Bio section. A document that is one
    headingless blob has no lead; it is still mined but classified like
    any other segment (sinking to Other when nothing matches). Segments
    sharing a non-Other label merge so section labels stay unique.
    """
    lines = reflow(doc)
    segments = segment(lines, doc)
    if not segments:
        raise StructureError(f"{doc.source_name}: no segments")

    lead: Segment | None = None
    body_segments = segments
    if segments[0].heading_text is None and len(segments) > 1:
        lead = segments[0]
        body_segments = segments[1:]

    name = ""
    contact: dict[str, str] = {}
    sections: list[ResumeSection] = []
    if lead is not None:
        lead_lines = [ln for ln in lead.body.split("\n") if ln.strip()]
        name = lead_lines[0] if lead_lines else ""
        contact = extract_contact(lead.body)
        remainder = "\n".join(lead_lines[1:])
        if remainder:
            sections.append(
                ResumeSection(label=SectionLabel.Bio, heading_text="", free_text=remainder)
            )
    if not name:
        first_lines = [ln for ln in segments[0].body.split("\n") if ln.strip()]
        name = first_lines[0] if first_lines else (segments[0].heading_text or "")
        contact = contact or extract_contact(segments[0].body)

    by_label: dict[SectionLabel, int] = {
        s.label: i for i, s in enumerate(sections) if s.label is not SectionLabel.Other
    }
    for seg in body_segments:
        label, _confidence = model.classify(seg)
        heading = seg.heading_text or ""
        if label is SectionLabel.Experience:
            blocks = _blank_line_blocks(seg.body)
            new = ResumeSection(
                label=label,
                heading_text=heading,
                entries=tuple(parse_entry_header(block) for block in blocks),
            )
        else:
            new = ResumeSection(label=label, heading_text=heading, free_text=seg.body)
        if label is not SectionLabel.Other and label in by_label:
            idx = by_label[label]
            sections[idx] = _merge_sections(sections[idx], new)
        else:
            if label is not SectionLabel.Other:
                by_label[label] = len(sections)
            sections.append(new)

    return ParsedResume(
        candidate_id=make_candidate_id(doc.source_name, name),
        name=name,
        headline=None,
        location=None,
        contact=contact,
        sections=tuple(sections),
        provenance=doc.source_name,
    )


def _blank_line_blocks(body: str) -> list[list[str]]:
    blocks: list[list[str]] = []
    current: list[str] = []
    for line in body.split("\n"):
        if line.strip():
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    return blocks


def _merge_sections(base: ResumeSection, extra: ResumeSection) -> ResumeSection:
    free_text = "\n".join(t for t in (base.free_text, extra.free_text) if t)
    return ResumeSection(
        label=base.label,
        heading_text=base.heading_text or extra.heading_text,
        entries=base.entries + extra.entries,
        free_text=free_text,
    )


# ---------------------------------------------------------------------------
# Diffable model serialization
# ---------------------------------------------------------------------------


def dump_model(model: CentroidModel) -> str:
    """Versioned text format: token/idf lines, then per-label centroid lines."""
    lines = [MODEL_FORMAT_VERSION, f"heading_weight\t{model.heading_weight}"]
    lines.append(f"vocabulary\t{len(model.vocabulary)}")
    for token in sorted(model.vocabulary):
        lines.append(f"{token}\t{model.idf[token]!r}")
    for label in SectionLabel:
        centroid = model.centroids.get(label)
        if centroid is None:
            continue
        lines.append(f"centroid\t{label.value}\t{model.trained_on[label]}\t{len(centroid)}")
        for token in sorted(centroid):
            lines.append(f"{token}\t{centroid[token]!r}")
    return "\n".join(lines) + "\n"


def load_model(text: str) -> CentroidModel:
    lines = text.splitlines()
    if not lines or lines[0] != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model format: {lines[:1]}")
    heading_weight = int(lines[1].split("\t")[1])
    vocab_count = int(lines[2].split("\t")[1])
    idf: dict[str, float] = {}
    pos = 3
    for _ in range(vocab_count):
        token, value = lines[pos].split("\t")
        idf[token] = float(value)
        pos += 1
    vocabulary = {t: i for i, t in enumerate(sorted(idf))}
    centroids: dict[SectionLabel, dict[str, float]] = {}
    trained_on: dict[SectionLabel, int] = {}
    while pos < len(lines):
        _, label_name, count, size = lines[pos].split("\t")
        label = SectionLabel(label_name)
        pos += 1
        centroid: dict[str, float] = {}
        for _ in range(int(size)):
            token, value = lines[pos].split("\t")
            centroid[token] = float(value)
            pos += 1
        centroids[label] = centroid
        trained_on[label] = int(count)
    return CentroidModel(
        vocabulary=vocabulary,
        idf=idf,
        centroids=centroids,
        trained_on=trained_on,
        heading_weight=heading_weight,
    )
