"""Nearest-centroid classifier: fit, classify, serialization, conversion."""

import math

import pytest

from resumekit import vectorize
from resumekit.classify import (
    CentroidModel,
    LabeledSegment,
    classify,
    convert_to_standard,
    dump_model,
    feature_text,
    fit,
    load_model,
)
from resumekit.errors import InsufficientCorpus, StructureError
from resumekit.fixtures import gen_labeled_segments, training_segments
from resumekit.ingest import ingest_layout_xml, ingest_plaintext
from resumekit.linkedin import SectionLabel
from resumekit.reflow import Segment


def seg(body, heading=None):
    return Segment(heading_text=heading, body=body, order_index=0, source_page_range=(1, 1))


def labeled(body, label, heading=None):
    return LabeledSegment(segment=seg(body, heading), label=label)


class TestFit:
    def test_two_labels_disjoint_vocab_orthogonal_centroids(self):
        model = fit(
            [
                labeled("kernel scheduler preemption", SectionLabel.Experience),
                labeled("bachelor university thesis", SectionLabel.Education),
            ]
        )
        a = model.centroids[SectionLabel.Experience]
        b = model.centroids[SectionLabel.Education]
        assert vectorize.dot(a, b) == 0.0
        assert math.isclose(vectorize.l2_norm(a), 1.0, abs_tol=1e-12)

    def test_insufficient_corpus(self):
        with pytest.raises(InsufficientCorpus):
            fit([labeled("text", SectionLabel.Skills)])

    def test_empty_body_rejected(self):
        with pytest.raises(InsufficientCorpus):
            fit([
                labeled("  ", SectionLabel.Skills),
                labeled("x", SectionLabel.Summary),
            ])

    def test_duplication_leaves_centroid_means_unchanged(self):
        # The centroid step is a mean, so duplicating every sample with the
        # idf table held fixed cannot move any centroid. (Refitting idf on
        # the doubled corpus does shift the smoothed idf values themselves.)
        corpus = [
            labeled("kernel scheduler preemption locks", SectionLabel.Experience),
            labeled("bachelor university thesis honors", SectionLabel.Education),
            labeled("kernel modules drivers", SectionLabel.Experience),
        ]
        base = fit(corpus)
        doubled_vectors = {}
        for label in base.centroids:
            members = []
            for item in corpus + corpus:
                if item.label is not label:
                    continue
                counts: dict[str, int] = {}
                for tok in vectorize.tokenize(feature_text(item.segment, base.heading_weight)):
                    if tok in base.vocabulary:
                        counts[tok] = counts.get(tok, 0) + 1
                members.append({t: n * base.idf[t] for t, n in counts.items()})
            tokens = sorted({t for m in members for t in m})
            mean = {t: math.fsum(m.get(t, 0.0) for m in members) / len(members) for t in tokens}
            doubled_vectors[label] = vectorize.normalize(mean)
        for label, centroid in base.centroids.items():
            assert set(centroid) == set(doubled_vectors[label])
            for token in centroid:
                assert math.isclose(centroid[token], doubled_vectors[label][token], rel_tol=1e-12)

    def test_order_insensitive(self):
        corpus = [
            labeled("alpha beta gamma", SectionLabel.Experience),
            labeled("delta epsilon", SectionLabel.Education),
            labeled("alpha delta", SectionLabel.Skills),
        ]
        a = fit(corpus)
        b = fit(list(reversed(corpus)))
        assert a.idf == b.idf
        assert a.centroids == b.centroids

    def test_idf_formula(self):
        # ln((1+N)/(1+df)) + 1 with N=2: df(yy)=2 -> 1.0, df(xx)=1 -> ln(3/2)+1.
        model = vectorize.fit_idf(["xx yy", "yy zz"])
        assert model.df == {"xx": 1, "yy": 2, "zz": 1}
        assert math.isclose(model.idf("yy"), 1.0)
        assert math.isclose(model.idf("xx"), math.log(3 / 2) + 1)
        assert math.isclose(model.idf("unseen"), math.log(3 / 1) + 1)


@pytest.fixture(scope="module")
def small_model():
    return fit(
        [
            labeled("shipped kubernetes services latency", SectionLabel.Experience),
            labeled("bachelor science university graduated", SectionLabel.Education),
            labeled("python go kubernetes terraform", SectionLabel.Skills),
        ]
    )


class TestClassify:

    def test_training_point_retrieval(self, small_model):
        label, confidence = classify(
            small_model, seg("bachelor science university graduated")
        )
        assert label is SectionLabel.Education
        assert 0.0 <= confidence <= 1.0

    def test_out_of_vocabulary_sinks_to_other(self, small_model):
        assert classify(small_model, seg("zzqq xx")) == (SectionLabel.Other, 0.0)

    def test_heading_weight_dominates(self, section_model):
        label, _ = classify(
            section_model, seg("worked on compilers and shipped things", "EXPERIENCE")
        )
        assert label is SectionLabel.Experience

    def test_confidence_bounds(self, section_model):
        for item in gen_labeled_segments(55, 50):
            _, confidence = classify(section_model, item.segment)
            assert 0.0 <= confidence <= 1.0

    def test_scale_invariance_of_argmax(self, small_model):
        scaled = CentroidModel(
            vocabulary=small_model.vocabulary,
            idf={t: 7.5 * v for t, v in small_model.idf.items()},
            centroids=small_model.centroids,
            trained_on=small_model.trained_on,
            heading_weight=small_model.heading_weight,
        )
        probes = [
            "kubernetes latency services",
            "university bachelor",
            "python terraform",
            "graduated with science honors",
        ]
        for text in probes:
            assert classify(small_model, seg(text))[0] is classify(scaled, seg(text))[0]

    def test_self_consistency_on_training_set(self, section_model, linkedin_corpus):
        corpus = training_segments(linkedin_corpus)
        hits = sum(
            1 for item in corpus if classify(section_model, item.segment)[0] is item.label
        )
        assert hits == len(corpus)

    def test_held_out_accuracy(self, section_model):
        held = gen_labeled_segments(1337, 200)
        hits = sum(
            1 for item in held if classify(section_model, item.segment)[0] is item.label
        )
        assert hits / len(held) >= 0.90


class TestSerialization:
    def test_roundtrip(self, section_model):
        text = dump_model(section_model)
        loaded = load_model(text)
        assert loaded.vocabulary == section_model.vocabulary
        assert loaded.trained_on == section_model.trained_on
        assert set(loaded.centroids) == set(section_model.centroids)
        for label in loaded.centroids:
            for token, value in loaded.centroids[label].items():
                assert value == section_model.centroids[label][token]

    def test_version_line(self, section_model):
        assert dump_model(section_model).startswith("centroid-model/v1\n")
        with pytest.raises(ValueError):
            load_model("something-else/v9\n")


class TestConvert:
    def test_label_sequence_matches_truth(self, section_model, generic_single_corpus):
        for fixture in generic_single_corpus:
            doc, _ = ingest_layout_xml(fixture.xml, fixture.source_name)
            resume = convert_to_standard(doc, section_model)
            assert tuple(s.label for s in resume.sections) == fixture.expected_section_labels
            assert resume.name == fixture.segments[0].body_lines[0]

    def test_contact_mined_from_lead(self, section_model, generic_single_corpus):
        fixture = generic_single_corpus[0]
        doc, _ = ingest_layout_xml(fixture.xml, fixture.source_name)
        resume = convert_to_standard(doc, section_model)
        assert "email" in resume.contact and "phone" in resume.contact

    def test_experience_segments_get_entries(self, section_model, generic_single_corpus):
        found = False
        for fixture in generic_single_corpus[:10]:
            doc, _ = ingest_layout_xml(fixture.xml, fixture.source_name)
            resume = convert_to_standard(doc, section_model)
            for section in resume.sections:
                if section.label is SectionLabel.Experience:
                    assert section.entries
                    assert section.free_text == ""
                    found = True
        assert found

    def test_empty_document_is_structure_error(self, section_model):
        doc, _ = ingest_plaintext(b"")
        with pytest.raises(StructureError):
            convert_to_standard(doc, section_model)

    def test_single_paragraph_becomes_one_other_section(self):
        model = fit(
            [
                labeled("kernel scheduler", SectionLabel.Experience),
                labeled("university thesis", SectionLabel.Education),
            ]
        )
        doc, _ = ingest_plaintext(
            b"some wholly unrelated paragraph text\nmore unknown words here\n"
        )
        resume = convert_to_standard(doc, model)
        assert resume.name == "some wholly unrelated paragraph text"
        assert [s.label for s in resume.sections] == [SectionLabel.Other]
        assert "unknown words" in resume.sections[0].free_text

    def test_duplicate_labels_merge(self, section_model):
        text = (
            "Pat Lee\n"
            "WORK HISTORY\n"
            "Engineer at Acme\n"
            "shipped kubernetes services for enterprise customers.\n"
            "EMPLOYMENT\n"
            "Operator at Beta\n"
            "operated microservices and caching layers under load.\n"
        )
        doc, _ = ingest_plaintext(text.encode())
        resume = convert_to_standard(doc, section_model)
        experience = [s for s in resume.sections if s.label is SectionLabel.Experience]
        assert len(experience) == 1
        assert len(experience[0].entries) == 2
