"""Seeded synthetic resume corpus: ground truth first, rendered layout-XML second.

Each fixture is generated as structured ground truth and then rendered
into converter-style XML, so the generator doubles as the parsing
oracle: parse(render(truth)) must reproduce truth exactly. Standard
fixtures use the canonical tier layout (name 29pt once and first,
headings 16pt, subheadings bold 12pt, body 12pt); generic fixtures
render word-level spans in one of three metadata styles and never
satisfy the standard-format signature.

Everything derives from the package SplitMix64 PRNG; fixture i uses a
sub-seed independent of count, so corpora are prefix-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape

from .linkedin import (
    ExperienceEntry,
    ParsedResume,
    PartialDate,
    PRESENT,
    ResumeSection,
    SectionLabel,
    emit_json,
    make_candidate_id,
)
from .reflow import Segment
from .rng import SplitMix64, derive_seed

PAGE_WIDTH = 612.0
PAGE_HEIGHT = 792.0
TOP_MARGIN = 72.0
BOTTOM_LIMIT = 740.0
LEFT_MARGIN = 40.0
CHAR_WIDTH = 6.0

NAME_SIZE, HEADING_SIZE, BODY_SIZE = 29.0, 16.0, 12.0

# ---------------------------------------------------------------------------
# Word banks
# ---------------------------------------------------------------------------

FIRST_NAMES = (
    "Jane", "Arjun", "Maria", "Wei", "Fatima", "Liam", "Sofia", "Noah",
    "Amara", "Diego", "Yuki", "Elena", "Omar", "Priya", "Lucas", "Ingrid",
    "Tariq", "Hana", "Mateo", "Zoe", "Ravi", "Clara", "Kenji", "Nadia",
)
LAST_NAMES = (
    "Doe", "Patel", "Garcia", "Chen", "Hassan", "Murphy", "Rossi", "Kim",
    "Okafor", "Alvarez", "Tanaka", "Novak", "Farouk", "Iyer", "Silva", "Larsen",
    "Aziz", "Sato", "Vargas", "Quinn", "Menon", "Weber", "Mori", "Haddad",
)
CITIES = (
    ("Austin", "Texas Area"), ("Toronto", "Canada Area"), ("Berlin", "Germany Area"),
    ("Pune", "India Area"), ("Lisbon", "Portugal Area"), ("Seattle", "Washington Area"),
    ("Nairobi", "Kenya Area"), ("Osaka", "Japan Area"), ("Dublin", "Ireland Area"),
    ("Bogota", "Colombia Area"), ("Oslo", "Norway Area"), ("Cairo", "Egypt Area"),
)
ORG_PREFIXES = (
    "Nimbus", "Vertex", "Bluepine", "Quanta", "Harborline", "Redwood",
    "Skyforge", "Lumen", "Atlas", "Copperleaf", "Northwind", "Brightwater",
)
ORG_SUFFIXES = ("Systems", "Labs", "Analytics", "Group", "Works", "Digital", "Partners")

DOMAINS = {
    "backend": {
        "titles": ("Software Engineer", "Backend Engineer", "Platform Engineer",
                   "Senior Software Engineer", "Staff Engineer"),
        "nouns": ("microservices", "payment apis", "kubernetes clusters", "postgres shards",
                  "grpc endpoints", "message queues", "caching layers", "billing services",
                  "rate limiters", "service meshes"),
        "verbs": ("Built", "Scaled", "Refactored", "Operated", "Hardened", "Shipped"),
    },
    "data": {
        "titles": ("Data Engineer", "Analytics Engineer", "Data Platform Engineer",
                   "Senior Data Engineer", "Data Architect"),
        "nouns": ("etl pipelines", "spark jobs", "feature stores", "warehouse schemas",
                  "airflow dags", "streaming ingestion", "dbt models", "lakehouse tables",
                  "partition layouts", "quality checks"),
        "verbs": ("Designed", "Automated", "Tuned", "Migrated", "Orchestrated", "Modeled"),
    },
    "frontend": {
        "titles": ("Frontend Engineer", "UI Engineer", "Web Developer",
                   "Senior Frontend Engineer", "Design Systems Engineer"),
        "nouns": ("react components", "design tokens", "checkout flows", "accessibility audits",
                  "bundle pipelines", "state stores", "animation kits", "form validation",
                  "localization bundles", "component libraries"),
        "verbs": ("Crafted", "Rebuilt", "Polished", "Instrumented", "Unified", "Delivered"),
    },
    "devops": {
        "titles": ("Site Reliability Engineer", "DevOps Engineer", "Infrastructure Engineer",
                   "Cloud Engineer", "Release Engineer"),
        "nouns": ("terraform modules", "ci runners", "incident runbooks", "autoscaling groups",
                  "observability stacks", "deploy pipelines", "secrets rotation", "chaos drills",
                  "cost dashboards", "fleet images"),
        "verbs": ("Provisioned", "Stabilized", "Monitored", "Streamlined", "Containerized", "Patched"),
    },
    "mobile": {
        "titles": ("Mobile Engineer", "iOS Engineer", "Android Engineer",
                   "Senior Mobile Engineer", "Mobile Platform Engineer"),
        "nouns": ("offline sync", "push notification flows", "swift modules", "kotlin coroutines",
                  "app store releases", "crash reporting", "deep links", "payment sheets",
                  "camera pipelines", "battery profiling"),
        "verbs": ("Launched", "Optimized", "Ported", "Profiled", "Rearchitected", "Maintained"),
    },
    "security": {
        "titles": ("Security Engineer", "Application Security Engineer", "Security Analyst",
                   "Senior Security Engineer", "Threat Researcher"),
        "nouns": ("threat models", "penetration findings", "vulnerability scans", "audit trails",
                  "key management", "zero trust policies", "phishing simulations", "intrusion alerts",
                  "compliance controls", "incident forensics"),
        "verbs": ("Audited", "Remediated", "Detected", "Investigated", "Enforced", "Reviewed"),
    },
}
DOMAIN_KEYS = tuple(sorted(DOMAINS))

COMMON_TAILS = (
    "for enterprise customers", "across three regions", "under heavy seasonal load",
    "with a five person team", "ahead of the quarterly launch", "for the core product",
    "during the replatforming effort", "with strict latency budgets",
)

SUMMARY_OPENERS = (
    "Engineer focused on dependable delivery and pragmatic tooling.",
    "Builder who enjoys untangling legacy systems and mentoring juniors.",
    "Practitioner with a bias for measurable outcomes and small batches.",
    "Generalist comfortable owning services from design through operations.",
)
SUMMARY_FILLERS = (
    "Comfortable pairing with product and support teams alike.",
    "Keeps documentation honest and dashboards actionable.",
    "Prefers boring technology and loud alerts.",
    "Enjoys postmortems more than launch parties.",
    "Writes runbooks before features ship.",
    "Treats flaky tests as production incidents.",
)

DEGREES = ("BSc Computer Science", "BEng Software Engineering", "MSc Data Systems",
           "BSc Information Systems", "MEng Computer Engineering")
UNIVERSITIES = ("State Technical University", "Riverside Institute of Technology",
                "Northern Polytechnic", "Lakeview University", "Central Engineering College")
EDU_NOTES = ("Graduated with honors and a systems focus.",
             "Thesis on distributed scheduling heuristics.",
             "Teaching assistant for the operating systems course.",
             "")

SKILL_BANK = ("Python", "Go", "TypeScript", "SQL", "Kubernetes", "Terraform", "Kafka",
              "PostgreSQL", "Redis", "React", "Swift", "Kotlin", "Airflow", "Spark",
              "Prometheus", "Grafana", "Linux", "AWS", "GCP", "Docker")

CERTIFICATIONS = ("Certified Kubernetes Administrator", "AWS Solutions Architect Associate",
                  "Google Professional Data Engineer", "Certified Information Systems Auditor",
                  "HashiCorp Terraform Associate")
LANGUAGE_LINES = ("English (native), Spanish (professional working proficiency)",
                  "English (fluent), German (limited working proficiency)",
                  "English (fluent), Japanese (conversational), Hindi (native)",
                  "English (professional), Portuguese (native)")
HONOR_LINES = ("Winner of the internal reliability award for incident tooling.",
               "Dean's list scholarship recipient for three consecutive years.",
               "Best demo prize at the regional developer conference.",
               "Hackathon grand prize for an accessibility checker.")
PROJECT_LINES = ("Open source maintainer of a log shipping daemon used by hobbyist clusters.",
                 "Weekend prototype that renders subway maps from open transit feeds.",
                 "Maintains a popular terminal dashboard for home energy meters.",
                 "Built a static site generator for recipe collections.")
PUBLICATION_LINES = ("Co-authored a practitioner article on incident review rituals.",
                     "Conference talk on taming schema migrations at scale.",
                     "Journal note on measuring developer toil with queue metrics.",
                     "Workshop paper on replayable data pipeline testing.")
RECOMMENDATION_LINES = (
    "A colleague I would gladly join again; calm in incidents and generous in reviews.",
    "Turned our messiest service into the one nobody worries about.",
    "Pairs patience with urgency; new hires ask to shadow them.",
    "The first person I ping when a migration looks scary.",
)

# ---------------------------------------------------------------------------
# XML rendering
# ---------------------------------------------------------------------------


@dataclass
class RenderSpan:
    page: int
    top: float
    left: float
    width: float
    height: float
    font_id: str
    text: str
    bold: bool = False
    italic: bool = False


def render_layout_xml(
    spans: list[RenderSpan],
    fonts: dict[str, float],
    page_count: int,
    page_width: float = PAGE_WIDTH,
    page_height: float = PAGE_HEIGHT,
) -> bytes:
    """Serialize spans to the accepted pdf2xml subset; fontspecs go on page 1."""
    out = ["<?xml version=\"1.0\" encoding=\"UTF-8\"?>", "<pdf2xml>"]
    families = {font_id: "Helvetica" for font_id in fonts}
    for page in range(1, page_count + 1):
        out.append(
            f'<page number="{page}" width="{_num(page_width)}" height="{_num(page_height)}">'
        )
        if page == 1:
            for font_id in sorted(fonts):
                out.append(
                    f'<fontspec id="{font_id}" size="{_num(fonts[font_id])}" '
                    f'family="{families[font_id]}"/>'
                )
        for span in spans:
            if span.page != page:
                continue
            text = escape(span.text)
            if span.bold:
                text = f"<b>{text}</b>"
            if span.italic:
                text = f"<i>{text}</i>"
            out.append(
                f'<text top="{_num(span.top)}" left="{_num(span.left)}" '
                f'width="{_num(span.width)}" height="{_num(span.height)}" '
                f'font="{span.font_id}">{text}</text>'
            )
        out.append("</page>")
    out.append("</pdf2xml>")
    return "\n".join(out).encode("utf-8")


def _num(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else f"{value:g}"


# ---------------------------------------------------------------------------
# Standard-format fixtures
# ---------------------------------------------------------------------------


@dataclass
class LinkedInFixture:
    source_name: str
    resume: ParsedResume
    xml: bytes


def _sentence(rng: SplitMix64, domain: dict) -> str:
    verb = rng.choice(domain["verbs"])
    noun = rng.choice(domain["nouns"])
    tail = rng.choice(COMMON_TAILS)
    if rng.chance(0.5):
        second = rng.choice(domain["nouns"])
        return f"{verb} {noun} and {second} {tail}."
    return f"{verb} {noun} {tail}."


def _org_name(rng: SplitMix64) -> str:
    return f"{rng.choice(ORG_PREFIXES)} {rng.choice(ORG_SUFFIXES)}"


def _duration_text(start: PartialDate, end: PartialDate) -> str:
    months = (end.year - start.year) * 12 + (end.month - start.month) + 1
    years, rem = divmod(months, 12)
    parts = []
    if years:
        parts.append(f"{years} year" + ("s" if years != 1 else ""))
    if rem:
        parts.append(f"{rem} month" + ("s" if rem != 1 else ""))
    return " ".join(parts) if parts else "1 month"


def _experience_entries(rng: SplitMix64, domain: dict) -> list[ExperienceEntry]:
    count = rng.randint(1, 4)
    entries = []
    year = rng.randint(2019, 2022)
    for index in range(count):
        title = rng.choice(domain["titles"])
        organization = _org_name(rng)
        length_months = rng.randint(8, 40)
        start_month = rng.randint(1, 12)
        start_year = year - (length_months + start_month - 1) // 12
        start = PartialDate(start_year, start_month)
        end_total = start_year * 12 + (start_month - 1) + length_months
        end = PartialDate(end_total // 12, end_total % 12 + 1)
        if index == 0 and rng.chance(0.4):
            date_to: PartialDate | str = PRESENT
            duration = None
        else:
            date_to = end
            duration = _duration_text(start, end)
        description = "\n".join(
            _sentence(rng, domain) for _ in range(rng.randint(2, 3))
        )
        entries.append(
            ExperienceEntry(
                title=title,
                organization=organization,
                date_from=start,
                date_to=date_to,
                duration_text=duration,
                description=description,
            )
        )
        year = start_year - rng.randint(0, 1)
    return entries


def _education_entries(rng: SplitMix64) -> list[ExperienceEntry]:
    count = 1 if rng.chance(0.7) else 2
    entries = []
    year = rng.randint(2006, 2014)
    for _ in range(count):
        start = PartialDate(year)
        end = PartialDate(year + rng.randint(2, 4))
        note = rng.choice(EDU_NOTES)
        entries.append(
            ExperienceEntry(
                title=rng.choice(DEGREES),
                organization=rng.choice(UNIVERSITIES),
                date_from=start,
                date_to=end,
                duration_text=None,
                description=note,
            )
        )
        year -= rng.randint(3, 5)
    return entries


def _contact_lines(rng: SplitMix64, first: str, last: str) -> list[str]:
    email = f"{first.lower()}.{last.lower()}.{rng.randint(1, 97)}@example.com"
    digits = f"{rng.randint(200, 989)} {rng.randint(100, 989):03d}-{rng.randint(0, 9999):04d}"
    lines = [email, f"+1 {digits}"]
    if rng.chance(0.5):
        lines.append(f"https://profiles.example.com/{first.lower()}{last.lower()}")
    return lines


def _gen_linkedin_one(sub_seed: int, source_name: str) -> LinkedInFixture:
    rng = SplitMix64(sub_seed)
    first, last = rng.choice(FIRST_NAMES), rng.choice(LAST_NAMES)
    name = f"{first} {last}"
    domain = DOMAINS[rng.choice(DOMAIN_KEYS)]
    city, region = rng.choice(CITIES)
    headline = f"{rng.choice(domain['titles'])} at {_org_name(rng)}"
    location = f"{city}, {region}"

    summary_lines = [rng.choice(SUMMARY_OPENERS)]
    summary_lines += rng.sample(SUMMARY_FILLERS, rng.randint(1, 3))

    skills = ", ".join(rng.sample(SKILL_BANK, rng.randint(5, 8)))
    skills_heading = "Skills & Expertise" if rng.chance(0.5) else "Skills"

    sections: list[ResumeSection] = [
        ResumeSection(
            label=SectionLabel.Bio,
            heading_text="Contact",
            free_text="\n".join(_contact_lines(rng, first, last)),
        ),
        ResumeSection(
            label=SectionLabel.Summary,
            heading_text="Summary" if rng.chance(0.8) else "SUMMARY",
            free_text="\n".join(summary_lines),
        ),
        ResumeSection(
            label=SectionLabel.Experience,
            heading_text="Experience",
            entries=tuple(_experience_entries(rng, domain)),
        ),
        ResumeSection(
            label=SectionLabel.Education,
            heading_text="Education",
            entries=tuple(_education_entries(rng)),
        ),
        ResumeSection(label=SectionLabel.Skills, heading_text=skills_heading, free_text=skills),
    ]

    extras = [
        (SectionLabel.Certifications, "Certifications",
         lambda: "\n".join(rng.sample(CERTIFICATIONS, rng.randint(1, 2)))),
        (SectionLabel.Languages, "Languages", lambda: rng.choice(LANGUAGE_LINES)),
        (SectionLabel.Honors, "Honors and Awards",
         lambda: "\n".join(rng.sample(HONOR_LINES, rng.randint(1, 2)))),
        (SectionLabel.Projects, "Projects",
         lambda: "\n".join(rng.sample(PROJECT_LINES, rng.randint(1, 2)))),
        (SectionLabel.Publications, "Publications", lambda: rng.choice(PUBLICATION_LINES)),
    ]
    for label, heading, make_body in extras:
        if rng.chance(0.35):
            sections.append(ResumeSection(label=label, heading_text=heading, free_text=make_body()))
    if rng.chance(0.7):
        sections.append(
            ResumeSection(
                label=SectionLabel.Recommendations,
                heading_text="Recommendations",
                free_text="\n".join(
                    rng.sample(RECOMMENDATION_LINES, rng.randint(1, 2))
                ),
            )
        )

    # The detector needs the body-size bucket to outgrow the heading range;
    # pad the summary until at least 18 body-tier lines exist.
    def body_line_count() -> int:
        count = 2  # headline + location
        for section in sections:
            if section.entries:
                for entry in section.entries:
                    count += (1 if entry.date_line_text() else 0)
                    count += len(entry.description.split("\n")) if entry.description else 0
            elif section.free_text:
                count += len(section.free_text.split("\n"))
        return count

    filler = list(SUMMARY_FILLERS)
    while body_line_count() < 18:
        extra = filler[body_line_count() % len(filler)]
        sections[1] = ResumeSection(
            label=SectionLabel.Summary,
            heading_text=sections[1].heading_text,
            free_text=sections[1].free_text + "\n" + extra,
        )

    resume = ParsedResume(
        candidate_id=make_candidate_id(source_name, name),
        name=name,
        headline=headline,
        location=location,
        contact=_truth_contact(sections),
        sections=tuple(sections),
        provenance=source_name,
    )
    return LinkedInFixture(source_name=source_name, resume=resume, xml=_render_linkedin(resume))


def _truth_contact(sections: list[ResumeSection]) -> dict[str, str]:
    from .linkedin import extract_contact

    for section in sections:
        if section.label is SectionLabel.Bio and section.free_text:
            return extract_contact(section.free_text)
    return {}


def _render_linkedin(resume: ParsedResume) -> bytes:
    spans: list[RenderSpan] = []
    page, y = 1, TOP_MARGIN

    def put(text: str, size: float, font_id: str, bold: bool = False, gap: float = 0.0) -> None:
        nonlocal page, y
        y += gap
        if y > BOTTOM_LIMIT:
            page += 1
            y = TOP_MARGIN
        spans.append(
            RenderSpan(
                page=page,
                top=y,
                left=LEFT_MARGIN,
                width=round(len(text) * size * 0.5),
                height=size,
                font_id=font_id,
                text=text,
                bold=bold,
            )
        )
        y += size + 4

    put(resume.name, NAME_SIZE, "0")
    if resume.headline:
        put(resume.headline, BODY_SIZE, "2", gap=4)
    if resume.location:
        put(resume.location, BODY_SIZE, "2")
    for section in resume.sections:
        put(section.heading_text, HEADING_SIZE, "1", gap=10)
        if section.entries:
            for entry in section.entries:
                put(entry.header_text(), BODY_SIZE, "2", bold=True, gap=6)
                date_line = entry.date_line_text()
                if date_line:
                    put(date_line, BODY_SIZE, "2")
                for line in entry.description.split("\n"):
                    if line:
                        put(line, BODY_SIZE, "2")
        else:
            for line in section.free_text.split("\n"):
                put(line, BODY_SIZE, "2")
    fonts = {"0": NAME_SIZE, "1": HEADING_SIZE, "2": BODY_SIZE}
    return render_layout_xml(spans, fonts, page_count=page)


def gen_linkedin(seed: int, count: int) -> list[LinkedInFixture]:
    if count < 1:
        raise ValueError("count must be >= 1")
    return [
        _gen_linkedin_one(derive_seed(seed, 1, i), f"linkedin_{seed}_{i:03d}.xml")
        for i in range(count)
    ]


# ---------------------------------------------------------------------------
# Generic fixtures
# ---------------------------------------------------------------------------


@dataclass
class SegmentTruth:
    heading_text: str | None
    label: SectionLabel
    body_lines: tuple[str, ...]

    def as_segment(self, order_index: int = 0) -> Segment:
        return Segment(
            heading_text=self.heading_text,
            body="\n".join(self.body_lines),
            order_index=order_index,
            source_page_range=(1, 1),
        )


@dataclass
class GenericFixture:
    source_name: str
    layout: str  # "single" | "two_column"
    style: str  # "uniform" | "two_size" | "three_size"
    xml: bytes
    name: str
    logical_lines: tuple[str, ...]
    segments: tuple[SegmentTruth, ...]
    expected_section_labels: tuple[SectionLabel, ...]


# Heading variants per label slot: (text, collides with canonical lexicon).
GENERIC_HEADINGS = {
    "summary": (("OBJECTIVE", False), ("PROFILE", False), ("CAREER OBJECTIVE", False)),
    "experience": (("WORK HISTORY", False), ("EMPLOYMENT", False),
                   ("PROFESSIONAL EXPERIENCE", False)),
    "education": (("EDUCATION", True), ("ACADEMIC BACKGROUND", False)),
    "skills": (("TECHNICAL SKILLS", False), ("SKILLS", True), ("CORE COMPETENCIES", False)),
    "languages": (("LANGUAGES", True), ("LANGUAGE PROFICIENCY", False)),
    "awards": (("AWARDS", False), ("HONORS", False)),
    "certifications": (("CERTIFICATIONS", True), ("LICENSES", False)),
}
_SLOT_LABELS = {
    "summary": SectionLabel.Summary,
    "experience": SectionLabel.Experience,
    "education": SectionLabel.Education,
    "skills": SectionLabel.Skills,
    "languages": SectionLabel.Languages,
    "awards": SectionLabel.Honors,
    "certifications": SectionLabel.Certifications,
}
MAX_CANONICAL_COLLISIONS = 2


def _pick_heading(rng: SplitMix64, slot: str, collisions_used: int) -> tuple[str, int]:
    options = GENERIC_HEADINGS[slot]
    text, collides = options[rng.randrange(len(options))]
    if collides and collisions_used >= MAX_CANONICAL_COLLISIONS:
        text, collides = next((t, c) for t, c in options if not c)
    return text, collisions_used + (1 if collides else 0)


def _lower_sentence(rng: SplitMix64, domain: dict) -> str:
    text = _sentence(rng, domain)
    return text[0] + text[1:].lower() if text else text


def _generic_sections(
    rng: SplitMix64, domain: dict, narrow: bool = False
) -> tuple[list[tuple[str, SectionLabel, list[str]]], str]:
    """Headed sections as (heading, label, paragraph lines); '' marks blank lines.

    narrow keeps experience headers short enough to survive a 36-char
    column wrap in one piece; a wrapped header tail would read as a
    spurious title-case heading.
    """
    collisions = 0
    slots = ["experience", "education", "skills"]
    if rng.chance(0.6):
        slots.insert(0, "summary")
    for optional in ("languages", "awards", "certifications"):
        if rng.chance(0.3):
            slots.append(optional)

    sections = []
    for slot in slots:
        heading, collisions = _pick_heading(rng, slot, collisions)
        label = _SLOT_LABELS[slot]
        lines: list[str] = []
        if slot == "summary":
            opener = rng.choice(SUMMARY_OPENERS)
            filler = rng.choice(SUMMARY_FILLERS)
            lines = [opener[0].lower() + opener[1:], filler[0].lower() + filler[1:]]
        elif slot == "experience":
            for block in range(rng.randint(2, 3)):
                if block:
                    lines.append("")
                if narrow:
                    title = rng.choice([t for t in domain["titles"] if len(t) <= 21])
                    org = rng.choice(ORG_PREFIXES)
                    header = f"{title} at {org}"
                    assert len(header) <= 36, header
                    lines.append(header)
                else:
                    title = rng.choice(domain["titles"])
                    org = _org_name(rng)
                    header = f"{title}, {org} Research Division"
                    # A wrapped header tail would read as a title-case heading.
                    if rng.chance(0.6) or len(header) > 66:
                        header = f"{title} at {org}"
                    lines.append(header)
                start_year = rng.randint(2009, 2017)
                if rng.chance(0.7):
                    from_month = rng.randint(1, 12)
                    to_month = rng.randint(1, 12)
                    lines.append(
                        f"{_month_name(from_month)} {start_year} - "
                        f"{_month_name(to_month)} {start_year + rng.randint(1, 4)}"
                    )
                else:
                    lines.append(f"{start_year} - {start_year + rng.randint(1, 4)}")
                lines.extend(_lower_sentence(rng, domain) for _ in range(rng.randint(1, 2)))
        elif slot == "education":
            degree = rng.choice(DEGREES)
            year = rng.randint(2004, 2014)
            lines.append(
                f"{degree}, {rng.choice(UNIVERSITIES)}, class of {year + 4} with distinction."
            )
            if rng.chance(0.5):
                lines.append("coursework covered compilers, databases and queueing theory.")
        elif slot == "skills":
            chosen = [s.lower() for s in rng.sample(SKILL_BANK, rng.randint(6, 9))]
            lines.append("comfortable with " + ", ".join(chosen[:-1]) + " and " + chosen[-1] + ".")
        elif slot == "languages":
            lines.append(rng.choice(LANGUAGE_LINES).lower() + " in daily work settings.")
        elif slot == "awards":
            lines.append(rng.choice(HONOR_LINES).lower())
        elif slot == "certifications":
            chosen = rng.sample(CERTIFICATIONS, 2)
            lines.append(f"{chosen[0].lower()} and {chosen[1].lower()}, both current.")
        sections.append((heading, label, lines))
    return sections, slots[0]


def _month_name(month: int) -> str:
    from .linkedin import MONTH_NAMES

    return MONTH_NAMES[month - 1]


def _wrap_words(text: str, budget: int) -> list[str]:
    """Greedy word wrap by character count including single spaces."""
    lines: list[str] = []
    current = ""
    for word in text.split():
        if not current:
            current = word
        elif len(current) + 1 + len(word) <= budget:
            current += " " + word
        else:
            lines.append(current)
            current = word
    if current:
        lines.append(current)
    return lines


def _gen_generic_one(sub_seed: int, source_name: str, layout: str) -> GenericFixture:
    rng = SplitMix64(sub_seed)
    first, last = rng.choice(FIRST_NAMES), rng.choice(LAST_NAMES)
    name = f"{first.upper()} {last.upper()}" if rng.chance(0.5) else f"{first} {last}"
    domain = DOMAINS[rng.choice(DOMAIN_KEYS)]
    city, _ = rng.choice(CITIES)

    lead_lines = [
        name,
        f"{rng.choice(domain['titles']).lower()} based in {city} open to relocation.",
        f"{first.lower()}.{last.lower()}@mailbox.example.org",
        f"+1 {rng.randint(200, 989)} {rng.randint(100, 989):03d} {rng.randint(1000, 9999)}",
    ]
    sections, _first_slot = _generic_sections(rng, domain, narrow=layout == "two_column")

    if layout == "two_column":
        style = "uniform" if rng.chance(0.5) else "two_size"
        return _render_generic_two_column(
            rng, source_name, style, name, lead_lines, sections
        )
    style = rng.choice(("uniform", "two_size", "three_size"))
    return _render_generic_single(rng, source_name, style, name, lead_lines, sections)


def _style_fonts(style: str) -> tuple[dict[str, float], str, str, str, bool]:
    """(font table, lead font, heading font, body font, headings bold)."""
    if style == "uniform":
        return {"0": 11.0}, "0", "0", "0", False
    if style == "two_size":
        return {"0": 14.0, "1": 11.0}, "0", "0", "1", True
    return {"0": 20.0, "1": 14.0, "2": 11.0}, "0", "1", "2", False


def _truth_segments(
    lead_lines: list[str],
    sections: list[tuple[str, SectionLabel, list[str]]],
    wrapped: dict[int, list[str]],
    order: list[int] | None = None,
) -> tuple[tuple[SegmentTruth, ...], tuple[SectionLabel, ...]]:
    if order is None:
        order = list(range(len(sections)))
    segs = [SegmentTruth(None, SectionLabel.Bio, tuple(lead_lines))]
    for idx in order:
        heading, label, _lines = sections[idx]
        segs.append(SegmentTruth(heading, label, tuple(wrapped[idx])))
    expected = [SectionLabel.Bio] + [sections[idx][1] for idx in order]
    return tuple(segs), tuple(expected)


def _render_generic_single(
    rng: SplitMix64,
    source_name: str,
    style: str,
    name: str,
    lead_lines: list[str],
    sections: list[tuple[str, SectionLabel, list[str]]],
) -> GenericFixture:
    fonts, lead_font, heading_font, body_font, headings_bold = _style_fonts(style)
    budget = 68
    spans: list[RenderSpan] = []
    logical: list[str] = []
    page, y = 1, TOP_MARGIN
    row_advance = 15.0

    def emit_line(text: str, font_id: str, bold: bool) -> None:
        nonlocal page, y
        if y > BOTTOM_LIMIT:
            page += 1
            y = TOP_MARGIN
        x = LEFT_MARGIN
        words = text.split(" ")
        for word in words:
            width = len(word) * CHAR_WIDTH
            spans.append(
                RenderSpan(
                    page=page, top=y, left=x, width=width, height=fonts[font_id],
                    font_id=font_id, text=word, bold=bold,
                )
            )
            x += width + rng.randint(3, 6)
        logical.append(text)
        y += row_advance

    def skip_row() -> None:
        nonlocal y
        y += row_advance * 2

    emit_line(lead_lines[0], lead_font, False)
    for line in lead_lines[1:]:
        emit_line(line, body_font, False)

    wrapped: dict[int, list[str]] = {}
    for idx, (heading, _label, lines) in enumerate(sections):
        skip_row()
        emit_line(heading, heading_font, headings_bold)
        body_wrapped: list[str] = []
        for raw in lines:
            if raw == "":
                skip_row()
                body_wrapped.append("")
                continue
            for wrapped_line in _wrap_words(raw, budget):
                emit_line(wrapped_line, body_font, False)
                body_wrapped.append(wrapped_line)
        wrapped[idx] = body_wrapped

    segments, expected = _truth_segments(lead_lines, sections, wrapped)
    xml = render_layout_xml(spans, fonts, page_count=page)
    return GenericFixture(
        source_name=source_name, layout="single", style=style, xml=xml, name=name,
        logical_lines=tuple(logical), segments=segments, expected_section_labels=expected,
    )


def _render_generic_two_column(
    rng: SplitMix64,
    source_name: str,
    style: str,
    name: str,
    lead_lines: list[str],
    sections: list[tuple[str, SectionLabel, list[str]]],
) -> GenericFixture:
    fonts, lead_font, heading_font, body_font, headings_bold = _style_fonts(style)
    right_x = 330.0
    budget = 36  # chars; keeps left lines clear of the gutter

    # Narrow facts (lead, education, skills, extras) go left; the prose
    # sections (summary, experience) go right, mirroring common layouts.
    left_idx = [i for i, (_, label, _) in enumerate(sections)
                if label not in (SectionLabel.Experience, SectionLabel.Summary)]
    right_idx = [i for i, (_, label, _) in enumerate(sections)
                 if label in (SectionLabel.Experience, SectionLabel.Summary)]
    exp_idx = next(i for i, (_, label, _) in enumerate(sections)
                   if label is SectionLabel.Experience)

    lead_wrapped = [lead_lines[0]]
    for line in lead_lines[1:]:
        lead_wrapped.extend(_wrap_words(line, budget))

    Row = tuple[str, str, bool, bool]  # text, font, bold, gap-before

    def section_rows(idx: int, gap: bool, wrapped: dict[int, list[str]]) -> list[Row]:
        heading, _label, lines = sections[idx]
        rows: list[Row] = [(heading, heading_font, headings_bold, gap)]
        body_wrapped: list[str] = []
        for raw in lines:
            if raw == "":
                body_wrapped.append("")
            else:
                body_wrapped.extend(_wrap_words(raw, budget))
        wrapped[idx] = body_wrapped
        blank_next = False
        for piece in body_wrapped:
            if piece == "":
                blank_next = True
                continue
            rows.append((piece, body_font, False, blank_next))
            blank_next = False
        return rows

    def build_rows() -> tuple[list[Row], list[Row], dict[int, list[str]]]:
        wrapped: dict[int, list[str]] = {}
        left: list[Row] = [(lead_wrapped[0], lead_font, False, False)]
        left += [(piece, body_font, False, False) for piece in lead_wrapped[1:]]
        for idx in left_idx:
            left.extend(section_rows(idx, gap=True, wrapped=wrapped))
        right: list[Row] = []
        for pos, idx in enumerate(right_idx):
            right.extend(section_rows(idx, gap=pos > 0, wrapped=wrapped))
        return left, right, wrapped

    # Pad the experience body until both columns overlap on enough rows for
    # the 30% consistency rule to see the gutter.
    while True:
        left_rows, right_rows, wrapped = build_rows()
        if len(right_rows) >= 0.6 * len(left_rows):
            break
        sections[exp_idx][2].append(_lower_sentence(rng, DOMAINS[DOMAIN_KEYS[0]]))

    spans: list[RenderSpan] = []
    logical_left: list[str] = []
    logical_right: list[str] = []

    def place(rows: list[Row], x0: float, sink: list[str]) -> None:
        row = 0
        for text, font_id, bold, gap_before in rows:
            if gap_before:
                row += 2
            x = x0
            for word in text.split(" "):
                width = len(word) * CHAR_WIDTH
                spans.append(
                    RenderSpan(
                        page=1, top=TOP_MARGIN + row * 15.0, left=x, width=width,
                        height=fonts[font_id], font_id=font_id, text=word, bold=bold,
                    )
                )
                x += width + rng.randint(3, 6)
            assert x0 > LEFT_MARGIN or x <= right_x - 40, f"left column overflow: {text!r}"
            sink.append(text)
            row += 1
        assert TOP_MARGIN + row * 15.0 <= PAGE_HEIGHT, "two-column fixture overflows page"

    place(left_rows, LEFT_MARGIN, logical_left)
    place(right_rows, right_x, logical_right)

    # Physical emission order is row-major, interleaving the columns.
    spans.sort(key=lambda s: (s.top, s.left))
    logical = logical_left + logical_right
    segments, expected = _truth_segments(
        lead_wrapped, sections, wrapped, order=left_idx + right_idx
    )
    xml = render_layout_xml(spans, fonts, page_count=1)
    return GenericFixture(
        source_name=source_name, layout="two_column", style=style, xml=xml, name=name,
        logical_lines=tuple(logical), segments=segments, expected_section_labels=expected,
    )


def gen_generic(seed: int, count: int, layout: str = "single") -> list[GenericFixture]:
    if layout not in ("single", "two_column"):
        raise ValueError(f"unknown layout {layout!r}")
    if count < 1:
        raise ValueError("count must be >= 1")
    salt = 2 if layout == "single" else 3
    return [
        _gen_generic_one(derive_seed(seed, salt, i), f"generic_{layout}_{seed}_{i:03d}.xml", layout)
        for i in range(count)
    ]


# ---------------------------------------------------------------------------
# Labeled segments for classifier training and evaluation
# ---------------------------------------------------------------------------


def training_segments(fixtures: list[LinkedInFixture]) -> list:
    """LabeledSegment corpus from standard-format fixtures' ground truth."""
    from .classify import LabeledSegment

    corpus = []
    for fixture in fixtures:
        for order, section in enumerate(fixture.resume.sections):
            body = section.body_text()
            if not body.strip():
                continue
            corpus.append(
                LabeledSegment(
                    segment=Segment(
                        heading_text=section.heading_text,
                        body=body,
                        order_index=order,
                        source_page_range=(1, 1),
                    ),
                    label=section.label,
                )
            )
    return corpus


def gen_labeled_segments(seed: int, count: int) -> list:
    """Held-out (Segment, label) pairs mixing canonical and generic headings.

    Other-labeled slots (interests, references) are excluded: a centroid
    model fitted on standard sections has no Other centroid, so grading
    it on Other would measure the generator, not the classifier.
    """
    from .classify import LabeledSegment

    out = []
    for i in range(count):
        rng = SplitMix64(derive_seed(seed, 4, i))
        fixture = _gen_generic_one(
            derive_seed(seed, 5, i), f"segsrc_{seed}_{i:03d}.xml", "single"
        )
        candidates = [
            t
            for t in fixture.segments
            if t.label is not SectionLabel.Other and "\n".join(t.body_lines).strip()
        ]
        truth = candidates[rng.randrange(len(candidates))]
        out.append(
            LabeledSegment(segment=truth.as_segment(order_index=0), label=truth.label)
        )
    return out


# ---------------------------------------------------------------------------
# On-disk fixture corpora
# ---------------------------------------------------------------------------


def write_fixture_files(outdir: str | Path, fixtures: list) -> list[Path]:
    """XML file plus a .truth.json sidecar per fixture; returns written paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for fixture in fixtures:
        stem = Path(fixture.source_name).stem
        xml_path = outdir / f"{stem}.xml"
        xml_path.write_bytes(fixture.xml)
        truth_path = outdir / f"{stem}.truth.json"
        if isinstance(fixture, LinkedInFixture):
            truth_path.write_bytes(emit_json(fixture.resume))
        else:
            truth_path.write_bytes(
                json.dumps(
                    {
                        "layout": fixture.layout,
                        "style": fixture.style,
                        "name": fixture.name,
                        "logical_lines": list(fixture.logical_lines),
                        "expected_section_labels": [
                            label.value for label in fixture.expected_section_labels
                        ],
                        "segments": [
                            {
                                "heading_text": t.heading_text,
                                "label": t.label.value,
                                "body_lines": list(t.body_lines),
                            }
                            for t in fixture.segments
                        ],
                    },
                    ensure_ascii=False,
                    indent=2,
                ).encode("utf-8")
            )
        written.extend([xml_path, truth_path])
    return written
