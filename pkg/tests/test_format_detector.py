"""Font-histogram construction and the five-rule format signature."""

import pytest

from resumekit.detector import (
    DocumentFormat,
    FormatSignature,
    build_histogram,
    detect_format,
)
from resumekit.doc import PageInfo, SpanDocument, TextSpan, strip_font_metadata
from resumekit.errors import MissingMetadata
from resumekit.ingest import ingest_plaintext


def doc_with_sizes(sizes, texts=None):
    texts = texts or [f"t{i}" for i in range(len(sizes))]
    spans = tuple(
        TextSpan(text=t, page=1, x=10.0 * i, y=20.0 * i, width=30.0, height=s, font_size=s)
        for i, (s, t) in enumerate(zip(sizes, texts))
    )
    return SpanDocument(
        source_name="synthetic",
        pages=(PageInfo(1, 600.0, 800.0),),
        spans=spans,
        metadata_present=True,
        font_table={},
    )


class TestHistogram:
    def test_counts_and_first_occurrence(self):
        # Oracle: linear scan by hand over [29, 12, 12, 16, 12].
        hist = build_histogram(doc_with_sizes([29, 12, 12, 16, 12]))
        assert hist.buckets == {29.0: 1, 16.0: 1, 12.0: 3}
        assert hist.first_occurrence == {29.0: 0, 12.0: 1, 16.0: 3}
        assert hist.distinct_sizes_desc == (29.0, 16.0, 12.0)

    def test_uniform_sizes(self):
        hist = build_histogram(doc_with_sizes([12, 12]))
        assert hist.buckets == {12.0: 2}

    def test_missing_metadata(self):
        doc, _ = ingest_plaintext(b"hello\n")
        with pytest.raises(MissingMetadata):
            build_histogram(doc)

    def test_bucket_sum_equals_span_count(self, linkedin_docs):
        for doc in linkedin_docs[:10]:
            hist = build_histogram(doc)
            assert sum(hist.buckets.values()) == len(doc.spans)


class TestDetectRules:
    def test_plaintext_is_generic(self):
        doc, _ = ingest_plaintext(b"Jane\nEngineer\n")
        verdict = detect_format(doc)
        assert verdict.format is DocumentFormat.GENERIC
        assert any("rule a FAIL" in n for n in verdict.confidence_notes)

    def test_two_sizes_is_generic(self):
        doc = doc_with_sizes([16] + [12] * 20)
        verdict = detect_format(doc)
        assert verdict.format is DocumentFormat.GENERIC
        assert any("rule b FAIL" in n for n in verdict.confidence_notes)

    def test_repeated_largest_is_generic(self):
        doc = doc_with_sizes([29, 29, 16, 16, 16] + [12] * 20)
        verdict = detect_format(doc)
        assert any("rule c FAIL" in n for n in verdict.confidence_notes)

    def test_largest_not_first_is_generic(self):
        doc = doc_with_sizes([12, 29, 16, 16, 16] + [12] * 19)
        verdict = detect_format(doc)
        assert any("rule c FAIL" in n for n in verdict.confidence_notes)

    def test_heading_count_out_of_range_is_generic(self):
        # Second-largest occurs 16 times, above the default maximum of 15.
        doc = doc_with_sizes([29] + [16] * 16 + [12] * 40)
        verdict = detect_format(doc)
        assert any("rule d FAIL" in n for n in verdict.confidence_notes)

    def test_two_heading_like_tiers_is_generic(self):
        # Both 16 and 14 repeat 4x: rule d wants exactly one such tier.
        doc = doc_with_sizes([29] + [16] * 4 + [14] * 4 + [12] * 40)
        verdict = detect_format(doc)
        assert any("rule d FAIL" in n for n in verdict.confidence_notes)

    def test_lexicon_misses_are_generic(self):
        texts = ["Name"] + ["WHO AM I", "MY STORY", "THE REST", "MORE"] + ["body"] * 20
        doc = doc_with_sizes([29] + [16] * 4 + [12] * 20, texts)
        verdict = detect_format(doc)
        assert any("rule e FAIL" in n for n in verdict.confidence_notes)

    def test_linkedin_signature_passes(self):
        texts = (
            ["Jane Doe"]
            + ["Summary", "Experience", "Education", "Skills", "Recommendations"]
            + ["body"] * 20
        )
        doc = doc_with_sizes([29] + [16] * 5 + [12] * 20, texts)
        verdict = detect_format(doc)
        assert verdict.format is DocumentFormat.LINKEDIN
        assert len(verdict.confidence_notes) == 5

    def test_configurable_signature(self):
        texts = ["Jane Doe"] + ["Summary", "Experience"] + ["body"] * 20
        doc = doc_with_sizes([29] + [16] * 2 + [12] * 20, texts)
        assert detect_format(doc).format is DocumentFormat.GENERIC
        relaxed = FormatSignature(min_heading_repeats=2, min_heading_hits=2)
        assert detect_format(doc, relaxed).format is DocumentFormat.LINKEDIN


class TestOnFixtures:
    def test_fixture_corpus_100_percent(self, linkedin_docs, generic_single_corpus):
        from resumekit.ingest import ingest_layout_xml

        for doc in linkedin_docs[:50]:
            assert detect_format(doc).format is DocumentFormat.LINKEDIN
        for fixture in generic_single_corpus:
            doc, _ = ingest_layout_xml(fixture.xml, fixture.source_name)
            assert detect_format(doc).format is DocumentFormat.GENERIC

    def test_monotone_degradation(self, linkedin_docs):
        for doc in linkedin_docs[:20]:
            assert detect_format(strip_font_metadata(doc)).format is DocumentFormat.GENERIC

    def test_determinism(self, linkedin_docs):
        doc = linkedin_docs[0]
        assert detect_format(doc) == detect_format(doc)
