"""Pipeline configuration: one flat key=value file covers the detector
signature, reflow/segmentation constants, comment stages, and scoring.

Example file:

    min_heading_repeats = 3
    max_heading_repeats = 15
    min_heading_hits = 3
    heading_lexicon = ./headings.tsv     # lines: heading<TAB>Label
    column_line_fraction = 0.30
    stages = screening,interview_1,interview_2,final,decision
    score_threshold = 0.5
    ranking_aggregation = max

Environment variables RESUME_STORE_DIR, RESUME_BIND_ADDR,
RESUME_SCORER_URL and RESUME_SCORER_TIMEOUT_MS override the service
fields.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from .detector import FormatSignature
from .exporters import DEFAULT_STAGES
from .linkedin import DEFAULT_HEADING_LEXICON, SectionLabel
from .reflow import ReflowParams
from .scoring import DEFAULT_MAX_INFLIGHT, DEFAULT_THRESHOLD, DEFAULT_TIMEOUT_MS


@dataclass(frozen=True)
class PipelineConfig:
    signature: FormatSignature = field(default_factory=FormatSignature)
    reflow: ReflowParams = field(default_factory=ReflowParams)
    heading_weight: int = 3
    stages: tuple[str, ...] = DEFAULT_STAGES
    score_threshold: float = DEFAULT_THRESHOLD
    ranking_aggregation: str = "max"
    scorer_url: str | None = None
    scorer_timeout_ms: int = DEFAULT_TIMEOUT_MS
    scorer_max_inflight: int = DEFAULT_MAX_INFLIGHT
    store_dir: str = "./resume-store"
    bind_addr: str = "127.0.0.1:8000"
    upload_size_cap: int = 10 * 1024 * 1024


def load_lexicon(path: str | Path) -> dict[str, SectionLabel]:
    """Heading lexicon file: one 'heading<TAB>Label' entry per line."""
    lexicon: dict[str, SectionLabel] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        heading, _, label = line.partition("\t")
        lexicon[heading.strip()] = SectionLabel(label.strip())
    return lexicon


def _parse_value(raw: str, like) -> object:
    if isinstance(like, bool):
        return raw.lower() in ("1", "true", "yes")
    if isinstance(like, int):
        return int(raw)
    if isinstance(like, float):
        return float(raw)
    return raw


def load_config(path: str | Path | None = None) -> PipelineConfig:
    """Defaults, overridden by the file (if any), then by the environment."""
    config = PipelineConfig()
    if path is not None:
        values: dict[str, str] = {}
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"config line without '=': {raw!r}")
            values[key.strip()] = value.strip()

        sig_kwargs = {}
        lexicon = dict(DEFAULT_HEADING_LEXICON)
        if "heading_lexicon" in values:
            lexicon_path = Path(values.pop("heading_lexicon"))
            if not lexicon_path.is_absolute():
                lexicon_path = Path(path).parent / lexicon_path
            lexicon = load_lexicon(lexicon_path)
        for name in ("min_heading_repeats", "max_heading_repeats", "min_heading_hits"):
            if name in values:
                sig_kwargs[name] = int(values.pop(name))
        signature = FormatSignature(lexicon=lexicon, **sig_kwargs)

        reflow_kwargs = {}
        for f in fields(ReflowParams):
            if f.name in values:
                reflow_kwargs[f.name] = _parse_value(values.pop(f.name), getattr(config.reflow, f.name))
        reflow_params = replace(config.reflow, **reflow_kwargs)

        top_kwargs: dict = {"signature": signature, "reflow": reflow_params}
        if "stages" in values:
            top_kwargs["stages"] = tuple(
                s.strip() for s in values.pop("stages").split(",") if s.strip()
            )
        for f in fields(PipelineConfig):
            if f.name in values:
                top_kwargs[f.name] = _parse_value(values.pop(f.name), getattr(config, f.name))
        if values:
            raise ValueError(f"unknown config keys: {sorted(values)}")
        config = replace(config, **top_kwargs)

    env_store = os.environ.get("RESUME_STORE_DIR")
    env_bind = os.environ.get("RESUME_BIND_ADDR")
    env_scorer = os.environ.get("RESUME_SCORER_URL")
    env_timeout = os.environ.get("RESUME_SCORER_TIMEOUT_MS")
    overrides: dict = {}
    if env_store:
        overrides["store_dir"] = env_store
    if env_bind:
        overrides["bind_addr"] = env_bind
    if env_scorer:
        overrides["scorer_url"] = env_scorer
    if env_timeout:
        overrides["scorer_timeout_ms"] = int(env_timeout)
    return replace(config, **overrides) if overrides else config
