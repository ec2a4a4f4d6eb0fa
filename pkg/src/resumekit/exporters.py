"""Recruiter-facing batch outputs: CSV with per-stage comment columns, JSON.

The CSV is RFC 4180 (CRLF rows, minimal quoting) with one row per
resume in input order. Multi-entry sections join their entries with
" | " and replace internal newlines with the two characters "\\n" so
every cell stays single-line.
"""

from __future__ import annotations

import csv
import io
from typing import Mapping

from .linkedin import ParsedResume, SectionLabel, emit_json, entry_text

# Stage columns are config-extensible; these are the pinned defaults.
# "decision" renders as its own column without the comment_ prefix.
DEFAULT_STAGES = ("screening", "interview_1", "interview_2", "final", "decision")

_SECTION_COLUMNS = (
    ("summary", SectionLabel.Summary),
    ("experience", SectionLabel.Experience),
    ("education", SectionLabel.Education),
    ("skills", SectionLabel.Skills),
    ("certifications", SectionLabel.Certifications),
    ("languages", SectionLabel.Languages),
    ("recommendations", SectionLabel.Recommendations),
)


def csv_header(stages: tuple[str, ...] = DEFAULT_STAGES) -> list[str]:
    header = ["candidate_id", "name", "headline", "location", "email", "phone"]
    header.extend(name for name, _ in _SECTION_COLUMNS)
    header.extend(f"comment_{stage}" for stage in stages if stage != "decision")
    if "decision" in stages:
        header.append("decision")
    return header


def _flatten(text: str) -> str:
    return text.replace("\r\n", "\n").replace("\n", "\\n")


def _section_cell(resume: ParsedResume, label: SectionLabel) -> str:
    for section in resume.sections:
        if section.label is label:
            if section.entries:
                return " | ".join(_flatten(entry_text(e)) for e in section.entries)
            return _flatten(section.free_text)
    return ""


def emit_csv(
    resumes: list[ParsedResume],
    comments: Mapping[tuple[str, str], str] | None = None,
    stages: tuple[str, ...] = DEFAULT_STAGES,
) -> bytes:
    """Batch table; comment cells come from a (candidate_id, stage) mapping."""
    comments = comments or {}
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow(csv_header(stages))
    for resume in resumes:
        row = [
            resume.candidate_id,
            resume.name,
            resume.headline or "",
            resume.location or "",
            resume.contact.get("email", ""),
            resume.contact.get("phone", ""),
        ]
        row.extend(_section_cell(resume, label) for _, label in _SECTION_COLUMNS)
        ordered = [s for s in stages if s != "decision"]
        if "decision" in stages:
            ordered.append("decision")
        row.extend(
            _flatten(comments.get((resume.candidate_id, stage), ""))
            for stage in ordered
        )
        writer.writerow(row)
    return buffer.getvalue().encode("utf-8")


def emit_batch_json(resumes: list[ParsedResume]) -> bytes:
    """JSON array of resume/v1 objects, byte-equal to wrapping emit_json output."""
    return b"[" + b",".join(emit_json(r) for r in resumes) + b"]"
