"""Config file parsing, lexicon loading, environment overrides."""

import pytest

from resumekit.config import PipelineConfig, load_config, load_lexicon
from resumekit.linkedin import DEFAULT_HEADING_LEXICON, SectionLabel
from resumekit.vectorize import STOPWORDS


def test_stopword_list_is_exactly_fifty():
    assert len(STOPWORDS) == 50


def test_defaults():
    config = load_config()
    assert config.signature.min_heading_repeats == 3
    assert config.signature.max_heading_repeats == 15
    assert config.signature.min_heading_hits == 3
    assert config.reflow.column_line_fraction == 0.30
    assert config.stages[-1] == "decision"
    assert config.score_threshold == 0.5
    assert config.ranking_aggregation == "max"


def test_default_lexicon_mapping():
    assert DEFAULT_HEADING_LEXICON["Skills & Expertise"] is SectionLabel.Skills
    assert DEFAULT_HEADING_LEXICON["Honors and Awards"] is SectionLabel.Honors
    assert DEFAULT_HEADING_LEXICON["Contact"] is SectionLabel.Bio


def test_file_overrides(tmp_path):
    path = tmp_path / "pipeline.conf"
    path.write_text(
        "min_heading_repeats = 2\n"
        "max_heading_repeats = 20   # generous\n"
        "column_line_fraction = 0.4\n"
        "stages = phone,onsite,decision\n"
        "score_threshold = 0.65\n"
        "\n"
        "# comment line\n"
    )
    config = load_config(path)
    assert config.signature.min_heading_repeats == 2
    assert config.signature.max_heading_repeats == 20
    assert config.reflow.column_line_fraction == 0.4
    assert config.stages == ("phone", "onsite", "decision")
    assert config.score_threshold == 0.65


def test_lexicon_file(tmp_path):
    lex = tmp_path / "headings.tsv"
    lex.write_text("Summary\tSummary\nWork\tExperience\n")
    conf = tmp_path / "pipeline.conf"
    conf.write_text("heading_lexicon = headings.tsv\n")
    config = load_config(conf)
    assert config.signature.lexicon == {
        "Summary": SectionLabel.Summary,
        "Work": SectionLabel.Experience,
    }
    assert load_lexicon(lex)["Work"] is SectionLabel.Experience


def test_unknown_key_rejected(tmp_path):
    path = tmp_path / "bad.conf"
    path.write_text("no_such_knob = 1\n")
    with pytest.raises(ValueError):
        load_config(path)


def test_env_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv("RESUME_STORE_DIR", str(tmp_path / "elsewhere"))
    monkeypatch.setenv("RESUME_SCORER_URL", "http://scorer.internal:9000")
    monkeypatch.setenv("RESUME_SCORER_TIMEOUT_MS", "750")
    config = load_config()
    assert config.store_dir == str(tmp_path / "elsewhere")
    assert config.scorer_url == "http://scorer.internal:9000"
    assert config.scorer_timeout_ms == 750


def test_config_is_frozen():
    config = PipelineConfig()
    with pytest.raises(Exception):
        config.score_threshold = 0.9  # type: ignore[misc]
