"""Adapters from upstream extractor output to SpanDocument.

Two inputs are supported: the layout-XML a PDF-to-HTML converter emits
with ``-xml`` (positioned text plus fontspecs) and plain extracted text.
The library boundary is bytes-in; running the converters themselves is
out of scope.

Accepted layout-XML subset: root ``pdf2xml``; ``page`` elements with
required number/width/height; ``page`` children ``fontspec`` (id, size,
family) and ``text`` (top, left, width, height, font) whose character
data may be wrapped in ``b`` and/or ``i``. Unknown elements and
attributes are ignored with a warning.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

from .doc import FontInfo, PageInfo, SpanDocument, TextSpan
from .errors import MalformedInput

_PAGE_ATTRS = ("number", "width", "height")
_TEXT_ATTRS = ("top", "left", "width", "height", "font")
_FONTSPEC_ATTRS = ("id", "size", "family")
_STYLE_TAGS = {"b", "i"}


@dataclass
class IngestReport:
    source_name: str
    spans_read: int = 0
    pages_read: int = 0
    metadata_present: bool = False
    warnings: list[str] = field(default_factory=list)


def _number(value: str, what: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise MalformedInput(f"{what}: not a decimal number: {value!r}") from None


def _require(elem: ET.Element, attrs: tuple[str, ...], what: str) -> dict[str, float]:
    values = {}
    for name in attrs:
        raw = elem.get(name)
        if raw is None:
            raise MalformedInput(f"{what}: missing attribute {name!r}")
        if name in ("family", "id"):
            continue
        values[name] = _number(raw, f"{what} attribute {name!r}")
    return values


def ingest_layout_xml(data: bytes, source_name: str = "<xml>") -> tuple[SpanDocument, IngestReport]:
    """Parse converter layout-XML into a SpanDocument with font metadata.

    Raises MalformedInput on XML errors, missing required attributes, or
    a text element referencing an unknown fontspec id; the message carries
    the text element index for debugging.
    """
    report = IngestReport(source_name=source_name, metadata_present=True)
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        raise MalformedInput(f"XML parse failure: {exc}") from exc
    if root.tag != "pdf2xml":
        raise MalformedInput(f"unexpected root element {root.tag!r}, wanted 'pdf2xml'")

    pages: list[PageInfo] = []
    spans: list[TextSpan] = []
    font_table: dict[str, FontInfo] = {}
    text_index = 0

    for child in root:
        if child.tag != "page":
            report.warnings.append(f"ignored unknown element <{child.tag}> under root")
            continue
        nums = _require(child, _PAGE_ATTRS, "page element")
        page_number = int(nums["number"])
        pages.append(PageInfo(number=page_number, width=nums["width"], height=nums["height"]))
        report.pages_read += 1

        for elem in child:
            if elem.tag == "fontspec":
                _require(elem, _FONTSPEC_ATTRS[:2], "fontspec element")
                font_id = elem.get("id", "")
                size = _number(elem.get("size", ""), "fontspec attribute 'size'")
                family = elem.get("family")
                if family is None:
                    family = ""
                    report.warnings.append(f"fontspec {font_id!r}: missing family")
                if font_id in font_table:
                    report.warnings.append(f"fontspec {font_id!r} redefined")
                font_table[font_id] = FontInfo(size=size, family=family)
            elif elem.tag == "text":
                nums = _require(elem, _TEXT_ATTRS, f"text element #{text_index}")
                font_id = elem.get("font", "")
                if font_id not in font_table:
                    raise MalformedInput(
                        f"text element #{text_index}: unknown fontspec id {font_id!r}"
                    )
                bold = italic = False
                for nested in elem.iter():
                    if nested is elem:
                        continue
                    if nested.tag == "b":
                        bold = True
                    elif nested.tag == "i":
                        italic = True
                    else:
                        report.warnings.append(
                            f"text element #{text_index}: ignored nested <{nested.tag}>"
                        )
                content = "".join(elem.itertext())
                if not content.strip():
                    report.warnings.append(f"text element #{text_index}: blank, dropped")
                else:
                    spans.append(
                        TextSpan(
                            text=content,
                            page=page_number,
                            x=nums["left"],
                            y=nums["top"],
                            width=nums["width"],
                            height=nums["height"],
                            font_size=font_table[font_id].size,
                            font_id=font_id,
                            bold=bold,
                            italic=italic,
                        )
                    )
                    report.spans_read += 1
                text_index += 1
            else:
                report.warnings.append(f"ignored unknown element <{elem.tag}> under page")

    if not spans:
        report.warnings.append("no spans")
    doc = SpanDocument(
        source_name=source_name,
        pages=tuple(pages),
        spans=tuple(spans),
        metadata_present=True,
        font_table=font_table,
    )
    return doc, report


def ingest_plaintext(data: bytes, source_name: str = "<text>") -> tuple[SpanDocument, IngestReport]:
    """Turn plain extracted text into a metadata-free SpanDocument.

    Pages are delimited by form feeds; within a page, y is the line index
    and x the leading-whitespace column, preserving crude indentation as
    the only geometric residue plain text carries.
    """
    report = IngestReport(source_name=source_name, metadata_present=False)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        text = data.decode("utf-8", errors="replace")
        report.warnings.append("invalid UTF-8 sequences replaced")

    pages: list[PageInfo] = []
    spans: list[TextSpan] = []
    chunks = text.split("\x0c")
    for page_idx, chunk in enumerate(chunks):
        page_number = page_idx + 1
        raw_lines = chunk.split("\n")
        pages.append(PageInfo(number=page_number, width=80.0, height=float(len(raw_lines))))
        report.pages_read += 1
        for line_idx, raw in enumerate(raw_lines):
            stripped = raw.strip()
            if not stripped:
                continue
            indent = len(raw) - len(raw.lstrip())
            spans.append(
                TextSpan(
                    text=stripped,
                    page=page_number,
                    x=float(indent),
                    y=float(line_idx),
                    width=float(len(stripped)),
                    height=1.0,
                )
            )
            report.spans_read += 1

    doc = SpanDocument(
        source_name=source_name,
        pages=tuple(pages),
        spans=tuple(spans),
        metadata_present=False,
        font_table={},
    )
    return doc, report


def looks_like_xml(data: bytes) -> bool:
    head = data.lstrip(b"\xef\xbb\xbf \t\r\n")
    return head.startswith(b"<")


def ingest_auto(data: bytes, source_name: str = "<input>") -> tuple[SpanDocument, IngestReport]:
    """Default arbitration: layout-XML when the bytes look like XML, else text."""
    if looks_like_xml(data):
        return ingest_layout_xml(data, source_name)
    return ingest_plaintext(data, source_name)
