"""Shared corpora; generation is deterministic, cache per session for speed."""

import pytest

from resumekit import classify, fixtures, ingest

TRAIN_SEED = 42
HELD_OUT_SEED = 1337


@pytest.fixture(scope="session")
def linkedin_corpus():
    return fixtures.gen_linkedin(TRAIN_SEED, 100)


@pytest.fixture(scope="session")
def linkedin_docs(linkedin_corpus):
    return [
        ingest.ingest_layout_xml(f.xml, f.source_name)[0] for f in linkedin_corpus
    ]


@pytest.fixture(scope="session")
def generic_single_corpus():
    return fixtures.gen_generic(TRAIN_SEED, 50, "single")


@pytest.fixture(scope="session")
def generic_two_column_corpus():
    return fixtures.gen_generic(TRAIN_SEED, 20, "two_column")


@pytest.fixture(scope="session")
def section_model(linkedin_corpus):
    return classify.fit(fixtures.training_segments(linkedin_corpus))
