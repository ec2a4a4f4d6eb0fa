"""Lossless parser for the standard (LinkedIn-style) resume layout.

The layout is tiered by font size: the candidate name is the unique
largest span and leads the document, section headings share the
second-largest size, entry subheadings use the third-largest size (or
bold body text when only three sizes exist), and everything else is
body. Parsing preserves every character of input text: the
whitespace-normalized concatenation of all emitted fields equals the
whitespace-normalized concatenation of all input spans.
"""

from __future__ import annotations

import hashlib
import json
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .doc import Line, SpanDocument, assemble_lines
from .errors import NotLinkedInFormat, StructureError


class SectionLabel(Enum):
    """Closed set of standard resume categories; Other is the sink."""

    Bio = "Bio"
    Summary = "Summary"
    Experience = "Experience"
    Education = "Education"
    Skills = "Skills"
    Certifications = "Certifications"
    Languages = "Languages"
    Honors = "Honors"
    Publications = "Publications"
    Projects = "Projects"
    Recommendations = "Recommendations"
    Other = "Other"


# Canonical heading lexicon, matched case-insensitively against
# heading-tier lines. Contact maps to Bio: the label enum is closed and
# contact details are personal information.
DEFAULT_HEADING_LEXICON: dict[str, SectionLabel] = {
    "Summary": SectionLabel.Summary,
    "Experience": SectionLabel.Experience,
    "Education": SectionLabel.Education,
    "Skills & Expertise": SectionLabel.Skills,
    "Skills": SectionLabel.Skills,
    "Certifications": SectionLabel.Certifications,
    "Honors and Awards": SectionLabel.Honors,
    "Languages": SectionLabel.Languages,
    "Publications": SectionLabel.Publications,
    "Projects": SectionLabel.Projects,
    "Recommendations": SectionLabel.Recommendations,
    "Contact": SectionLabel.Bio,
}

PRESENT = "present"

MONTH_NAMES = (
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
)
_MONTH_NUMBER = {name: i + 1 for i, name in enumerate(MONTH_NAMES)}

# MonthName YYYY [-| en dash] (MonthName YYYY | Present) [ "(duration)" ];
# months optional on both sides so year-only spans (education) parse.
# Case-sensitive: reconstruction re-emits the canonical capitalization.
_DATE_LINE_RE = re.compile(
    r"^(?:(" + "|".join(MONTH_NAMES) + r")\s+)?(\d{4})"
    r"\s*[-–]\s*"
    r"(?:(?:(" + "|".join(MONTH_NAMES) + r")\s+)?(\d{4})|(Present))"
    r"(?:\s*\((.+)\))?$"
)

EMAIL_RE = re.compile(r"[A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+\.[A-Za-z]{2,}")
# 7-15 digits with optional separators, not glued to a word or email.
PHONE_RE = re.compile(r"(?<![\w@.])\+?\d(?:[\s().-]?\d){6,14}(?![\w@])")
LINK_RE = re.compile(r"https?://\S+")


@dataclass(frozen=True)
class PartialDate:
    year: int
    month: int | None = None

    def sort_key(self) -> tuple[int, int]:
        # Absent month sorts first within its year.
        return (self.year, self.month or 0)

    def __str__(self) -> str:
        if self.month is None:
            return str(self.year)
        return f"{self.year}-{self.month:02d}"


@dataclass(frozen=True)
class ExperienceEntry:
    title: str
    organization: str | None = None
    date_from: PartialDate | None = None
    date_to: PartialDate | str | None = None  # PartialDate or PRESENT
    duration_text: str | None = None
    description: str = ""

    def header_text(self) -> str:
        if self.organization is not None:
            return f"{self.title} at {self.organization}"
        return self.title

    def date_line_text(self) -> str | None:
        if self.date_from is None:
            return None
        start = _format_date(self.date_from)
        end = "Present" if self.date_to == PRESENT else _format_date(self.date_to)
        line = f"{start} - {end}"
        if self.duration_text is not None:
            line += f" ({self.duration_text})"
        return line


def entry_text(entry: ExperienceEntry) -> str:
    """Entry rendered back to its source lines (header, date line, description)."""
    parts = [entry.header_text()]
    date_line = entry.date_line_text()
    if date_line is not None:
        parts.append(date_line)
    if entry.description:
        parts.append(entry.description)
    return "\n".join(parts)


@dataclass(frozen=True)
class ResumeSection:
    label: SectionLabel
    heading_text: str
    entries: tuple[ExperienceEntry, ...] = ()
    free_text: str = ""

    def body_text(self) -> str:
        if self.entries:
            return "\n".join(entry_text(e) for e in self.entries)
        return self.free_text


@dataclass(frozen=True)
class ParsedResume:
    candidate_id: str
    name: str
    headline: str | None
    location: str | None
    contact: dict[str, str]
    sections: tuple[ResumeSection, ...]
    provenance: str


def make_candidate_id(source_name: str, name: str) -> str:
    """First 16 hex chars of SHA-256 over (source, name); stable across re-uploads."""
    digest = hashlib.sha256(f"{source_name}\x00{name}".encode("utf-8")).hexdigest()
    return digest[:16]


def _format_date(date: PartialDate | str | None) -> str:
    if isinstance(date, PartialDate):
        if date.month is None:
            return str(date.year)
        return f"{MONTH_NAMES[date.month - 1]} {date.year}"
    raise ValueError(f"cannot format date {date!r}")


def parse_date_line(text: str) -> tuple[PartialDate, PartialDate | str, str | None] | None:
    """Match the entry date grammar; None when the line is not a date line.

    A match additionally requires date sanity (from <= to); insane ranges
    degrade to plain description text rather than producing bad entries.
    """
    m = _DATE_LINE_RE.match(text.strip())
    if not m:
        return None
    from_month, from_year, to_month, to_year, present, duration = m.groups()
    date_from = PartialDate(int(from_year), _MONTH_NUMBER.get(from_month))
    if present:
        return date_from, PRESENT, duration
    date_to = PartialDate(int(to_year), _MONTH_NUMBER.get(to_month))
    if date_from.sort_key() > date_to.sort_key():
        return None
    return date_from, date_to, duration


def parse_entry_header(lines: list[str]) -> ExperienceEntry:
    """Build an entry from one block of lines.

    First line splits on the last " at " into title/organization; a
    second line matching the date grammar is consumed; the rest is
    description. Ungrammatical headers degrade to title-only.
    """
    if not lines:
        return ExperienceEntry(title="")
    header = lines[0]
    if " at " in header:
        title, _, organization = header.rpartition(" at ")
        entry_title, entry_org = title, organization
    else:
        entry_title, entry_org = header, None
    rest = lines[1:]
    date_from = date_to = duration = None
    if rest:
        parsed = parse_date_line(rest[0])
        if parsed is not None:
            date_from, date_to, duration = parsed
            rest = rest[1:]
    return ExperienceEntry(
        title=entry_title,
        organization=entry_org,
        date_from=date_from,
        date_to=date_to,
        duration_text=duration,
        description="\n".join(rest),
    )


@dataclass(frozen=True)
class TierMap:
    """Font-size tiers inferred from the document's size distribution."""

    name_size: float
    heading_size: float
    body_size: float
    subheading_size: float | None  # None: subheadings are bold body spans

    def line_tier(self, line: Line) -> str:
        size = line.max_font_size()
        if size == self.name_size:
            return "name"
        if size == self.heading_size:
            return "heading"
        if self.subheading_size is not None:
            if size == self.subheading_size:
                return "subheading"
        elif line.all_bold():
            return "subheading"
        return "body"


def derive_tiers(doc: SpanDocument) -> TierMap:
    sizes = [s.font_size for s in doc.spans if s.font_size is not None]
    if not sizes:
        raise StructureError("document has no font sizes")
    distinct = sorted(set(sizes), reverse=True)
    if len(distinct) < 3:
        raise StructureError("fewer than three font sizes; no tier structure")
    counts = Counter(sizes)
    body = max(counts, key=lambda s: (counts[s], -s))
    return TierMap(
        name_size=distinct[0],
        heading_size=distinct[1],
        body_size=body,
        subheading_size=distinct[2] if len(distinct) >= 4 else None,
    )


def match_heading(text: str, lexicon: dict[str, SectionLabel]) -> SectionLabel | None:
    wanted = text.strip().casefold()
    for heading, label in lexicon.items():
        if heading.casefold() == wanted:
            return label
    return None


def extract_contact(text: str) -> dict[str, str]:
    """First email / phone / link found in the text, in a fixed key order."""
    contact: dict[str, str] = {}
    email = EMAIL_RE.search(text)
    if email:
        contact["email"] = email.group(0)
    phone = PHONE_RE.search(text)
    if phone:
        contact["phone"] = phone.group(0)
    link = LINK_RE.search(text)
    if link:
        contact["links"] = link.group(0)
    return contact


def parse_linkedin(
    doc: SpanDocument,
    lexicon: dict[str, SectionLabel] | None = None,
) -> ParsedResume:
    """Parse a LinkedIn-format document into its full structure, losslessly.

    Raises NotLinkedInFormat when the detector disagrees, StructureError
    when tier structure is missing despite a positive verdict.
    """
    from .detector import DocumentFormat, detect_format

    if lexicon is None:
        lexicon = DEFAULT_HEADING_LEXICON
    verdict = detect_format(doc)
    if verdict.format is not DocumentFormat.LINKEDIN:
        raise NotLinkedInFormat(
            f"{doc.source_name}: detector verdict is {verdict.format.value}"
        )

    tiers = derive_tiers(doc)
    name_spans = [s for s in doc.spans if s.font_size == tiers.name_size]
    if len(name_spans) != 1:
        raise StructureError(f"expected one name-tier span, found {len(name_spans)}")
    name = name_spans[0].text.strip()

    lines = assemble_lines(doc)
    tiered = [(tiers.line_tier(line), line) for line in lines]
    if not any(tier == "heading" for tier, _ in tiered):
        raise StructureError("no heading-tier lines found")

    # Lead block: everything before the first heading, minus the name line.
    first_heading_idx = next(i for i, (tier, _) in enumerate(tiered) if tier == "heading")
    lead = [line for tier, line in tiered[:first_heading_idx] if tier != "name"]
    headline = lead[0].text if len(lead) >= 1 else None
    location = lead[1].text if len(lead) >= 2 else None
    lead_extra = [line.text for line in lead[2:]]

    sections: list[ResumeSection] = []
    seen_labels: set[SectionLabel] = set()
    if lead_extra:
        sections.append(
            ResumeSection(label=SectionLabel.Bio, heading_text="", free_text="\n".join(lead_extra))
        )
        seen_labels.add(SectionLabel.Bio)

    idx = first_heading_idx
    while idx < len(tiered):
        tier, heading_line = tiered[idx]
        assert tier == "heading"
        end = idx + 1
        while end < len(tiered) and tiered[end][0] != "heading":
            end += 1
        content = tiered[idx + 1 : end]
        label = match_heading(heading_line.text, lexicon)
        if label is None or (label in seen_labels and label is not SectionLabel.Other):
            # Duplicate lexicon labels demote to Other so labels stay unique
            # without reordering text (reordering would break losslessness).
            label = SectionLabel.Other
        else:
            seen_labels.add(label)
        sections.append(_build_section(label, heading_line.text, content, tiers))
        idx = end

    contact: dict[str, str] = {}
    for section in sections:
        if section.label is SectionLabel.Bio and section.free_text:
            contact = extract_contact(section.free_text)
            if contact:
                break

    return ParsedResume(
        candidate_id=make_candidate_id(doc.source_name, name),
        name=name,
        headline=headline,
        location=location,
        contact=contact,
        sections=tuple(sections),
        provenance=doc.source_name,
    )


def _build_section(
    label: SectionLabel,
    heading_text: str,
    content: list[tuple[str, Line]],
    tiers: TierMap,
) -> ResumeSection:
    if label in (SectionLabel.Experience, SectionLabel.Education) and any(
        tier == "subheading" for tier, _ in content
    ):
        blocks: list[list[str]] = []
        current: list[str] = []
        for tier, line in content:
            if tier == "subheading" and current:
                blocks.append(current)
                current = []
            current.append(line.text)
        if current:
            blocks.append(current)
        entries = tuple(parse_entry_header(block) for block in blocks)
        return ResumeSection(label=label, heading_text=heading_text, entries=entries)
    free_text = "\n".join(line.text for _, line in content)
    return ResumeSection(label=label, heading_text=heading_text, free_text=free_text)


# ---------------------------------------------------------------------------
# Losslessness support
# ---------------------------------------------------------------------------

_WS_RE = re.compile(r"\s+")


def normalize_ws(text: str) -> str:
    return _WS_RE.sub(" ", text).strip()


def reconstruct_text(resume: ParsedResume) -> str:
    """Canonical document text rebuilt from parsed fields.

    Used by the losslessness contract: normalize_ws(reconstruct_text(r))
    must equal normalize_ws of the concatenated input span texts. The
    contact map is derived data and deliberately excluded.
    """
    parts: list[str] = [resume.name]
    if resume.headline is not None:
        parts.append(resume.headline)
    if resume.location is not None:
        parts.append(resume.location)
    for section in resume.sections:
        if section.heading_text:
            parts.append(section.heading_text)
        if section.entries:
            for entry in section.entries:
                parts.append(entry.header_text())
                date_line = entry.date_line_text()
                if date_line is not None:
                    parts.append(date_line)
                if entry.description:
                    parts.append(entry.description)
        elif section.free_text:
            parts.append(section.free_text)
    return "\n".join(parts)


def document_text(doc: SpanDocument) -> str:
    return "\n".join(s.text for s in doc.spans)


# ---------------------------------------------------------------------------
# resume/v1 JSON serialization
# ---------------------------------------------------------------------------


def _date_to_json(date: PartialDate | str | None) -> str | None:
    if date is None:
        return None
    if date == PRESENT:
        return PRESENT
    return str(date)


def _date_from_json(value: str | None) -> PartialDate | str | None:
    if value is None:
        return None
    if value == PRESENT:
        return PRESENT
    if "-" in value:
        year, month = value.split("-")
        return PartialDate(int(year), int(month))
    return PartialDate(int(value))


def resume_to_dict(resume: ParsedResume) -> dict:
    return {
        "candidate_id": resume.candidate_id,
        "name": resume.name,
        "headline": resume.headline,
        "location": resume.location,
        "contact": dict(resume.contact),
        "sections": [
            {
                "label": section.label.value,
                "heading_text": section.heading_text,
                "free_text": section.free_text,
                "entries": [
                    {
                        "title": entry.title,
                        "organization": entry.organization,
                        "date_from": _date_to_json(entry.date_from),
                        "date_to": _date_to_json(entry.date_to),
                        "duration_text": entry.duration_text,
                        "description": entry.description,
                    }
                    for entry in section.entries
                ],
            }
            for section in resume.sections
        ],
        "provenance": resume.provenance,
    }


def resume_from_dict(data: dict) -> ParsedResume:
    sections = tuple(
        ResumeSection(
            label=SectionLabel(s["label"]),
            heading_text=s.get("heading_text", ""),
            free_text=s.get("free_text", ""),
            entries=tuple(
                ExperienceEntry(
                    title=e["title"],
                    organization=e.get("organization"),
                    date_from=_date_from_json(e.get("date_from")),
                    date_to=_date_from_json(e.get("date_to")),
                    duration_text=e.get("duration_text"),
                    description=e.get("description", ""),
                )
                for e in s.get("entries", [])
            ),
        )
        for s in data.get("sections", [])
    )
    return ParsedResume(
        candidate_id=data["candidate_id"],
        name=data["name"],
        headline=data.get("headline"),
        location=data.get("location"),
        contact=dict(data.get("contact", {})),
        sections=sections,
        provenance=data.get("provenance", ""),
    )


def emit_json(resume: ParsedResume) -> bytes:
    """Canonical resume/v1 bytes: fixed key order, compact separators, UTF-8."""
    return json.dumps(
        resume_to_dict(resume), ensure_ascii=False, separators=(",", ":")
    ).encode("utf-8")


def read_json(data: bytes) -> ParsedResume:
    return resume_from_dict(json.loads(data.decode("utf-8")))
