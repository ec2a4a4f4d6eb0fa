"""Pair scorers: deterministic lexical baseline plus remote-service clients.

A pair scorer maps two texts to a similarity in [0, 1]. The lexical
scorer is tf-idf cosine over the shared tokenizer; the remote scorer
speaks a two-route wire contract (POST /score and POST /classify) that
any model host can implement. The remote client never silently
substitutes a value: failures raise ScorerUnavailable and the caller
decides the fallback.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Protocol

import requests

from . import vectorize
from .errors import EmptyCorpus, ScorerUnavailable
from .linkedin import SectionLabel
from .reflow import Segment

DEFAULT_THRESHOLD = 0.5
DEFAULT_TIMEOUT_MS = 5000
DEFAULT_MAX_INFLIGHT = 8

ENV_SCORER_URL = "RESUME_SCORER_URL"
ENV_SCORER_TIMEOUT_MS = "RESUME_SCORER_TIMEOUT_MS"


@dataclass(frozen=True)
class PairScore:
    value: float
    scorer_id: str

    def __post_init__(self) -> None:
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"score out of range: {self.value}")


class PairScorer(Protocol):
    scorer_id: str

    def score(self, text_a: str, text_b: str) -> PairScore: ...


class LexicalScorer:
    """tf-idf cosine similarity; immutable after fit, symmetric by construction."""

    scorer_id = "lexical"

    def __init__(self, idf_model: vectorize.IdfModel) -> None:
        self._idf = idf_model

    def score(self, text_a: str, text_b: str) -> PairScore:
        va = vectorize.tfidf_vector(text_a, self._idf)
        vb = vectorize.tfidf_vector(text_b, self._idf)
        return PairScore(value=vectorize.cosine(va, vb), scorer_id=self.scorer_id)


def fit_lexical(corpus: list[str]) -> LexicalScorer:
    if not corpus:
        raise EmptyCorpus("lexical scorer needs a non-empty corpus")
    return LexicalScorer(vectorize.fit_idf(corpus))


class _RemoteClient:
    def __init__(self, url: str, timeout_ms: int, max_inflight: int) -> None:
        self.url = url.rstrip("/")
        self.timeout_s = timeout_ms / 1000.0
        self._slots = threading.BoundedSemaphore(max_inflight)

    def post(self, route: str, payload: dict) -> dict:
        with self._slots:
            try:
                response = requests.post(
                    f"{self.url}{route}", json=payload, timeout=self.timeout_s
                )
            except requests.RequestException as exc:
                raise ScorerUnavailable(f"{route}: {exc}") from exc
        if not 200 <= response.status_code < 300:
            raise ScorerUnavailable(f"{route}: HTTP {response.status_code}")
        try:
            body = response.json()
        except ValueError as exc:
            raise ScorerUnavailable(f"{route}: malformed JSON body") from exc
        if not isinstance(body, dict):
            raise ScorerUnavailable(f"{route}: unexpected body type")
        return body


class RemoteScorer:
    """Client for POST {url}/score with body {"text_a", "text_b"}."""

    scorer_id = "remote"

    def __init__(
        self,
        url: str,
        timeout_ms: int = DEFAULT_TIMEOUT_MS,
        max_inflight: int = DEFAULT_MAX_INFLIGHT,
    ) -> None:
        self._client = _RemoteClient(url, timeout_ms, max_inflight)

    def score(self, text_a: str, text_b: str) -> PairScore:
        body = self._client.post("/score", {"text_a": text_a, "text_b": text_b})
        value = body.get("score")
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ScorerUnavailable(f"/score: missing numeric 'score' in {body!r}")
        return PairScore(value=min(1.0, max(0.0, float(value))), scorer_id=self.scorer_id)


class RemoteSectionClassifier:
    """Client for POST {url}/classify; drop-in for the centroid model."""

    def __init__(
        self,
        url: str,
        timeout_ms: int = DEFAULT_TIMEOUT_MS,
        max_inflight: int = DEFAULT_MAX_INFLIGHT,
    ) -> None:
        self._client = _RemoteClient(url, timeout_ms, max_inflight)

    def classify(self, seg: Segment) -> tuple[SectionLabel, float]:
        body = self._client.post(
            "/classify",
            {"heading_text": seg.heading_text, "body": seg.body},
        )
        label_name = body.get("label")
        confidence = body.get("confidence")
        try:
            label = SectionLabel(label_name)
        except ValueError:
            raise ScorerUnavailable(f"/classify: unknown label {label_name!r}") from None
        if not isinstance(confidence, (int, float)) or isinstance(confidence, bool):
            raise ScorerUnavailable(f"/classify: missing numeric 'confidence'")
        return label, min(1.0, max(0.0, float(confidence)))


def scorer_from_env(default_corpus: list[str] | None = None) -> PairScorer:
    """RemoteScorer when RESUME_SCORER_URL is set, else a lexical scorer."""
    url = os.environ.get(ENV_SCORER_URL)
    if url:
        timeout = int(os.environ.get(ENV_SCORER_TIMEOUT_MS, DEFAULT_TIMEOUT_MS))
        return RemoteScorer(url, timeout_ms=timeout)
    return fit_lexical(default_corpus or [])


# ---------------------------------------------------------------------------
# Threshold evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairMetrics:
    accuracy: float
    precision: float
    recall: float
    tp: int
    fp: int
    tn: int
    fn: int

    def as_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "tp": self.tp,
            "fp": self.fp,
            "tn": self.tn,
            "fn": self.fn,
        }


def evaluate_pairs(scorer: PairScorer, samples, threshold: float = DEFAULT_THRESHOLD) -> PairMetrics:
    """Exact confusion counts with prediction = (score >= threshold)."""
    if not samples:
        raise ValueError("evaluate_pairs needs a non-empty sample list")
    tp = fp = tn = fn = 0
    for sample in samples:
        predicted = scorer.score(sample.text_a, sample.text_b).value >= threshold
        if sample.label == 1:
            tp, fn = (tp + 1, fn) if predicted else (tp, fn + 1)
        else:
            fp, tn = (fp + 1, tn) if predicted else (fp, tn + 1)
    total = tp + fp + tn + fn
    return PairMetrics(
        accuracy=(tp + tn) / total,
        precision=tp / (tp + fp) if tp + fp else 0.0,
        recall=tp / (tp + fn) if tp + fn else 0.0,
        tp=tp,
        fp=fp,
        tn=tn,
        fn=fn,
    )


def pair_scores(scorer: PairScorer, samples) -> list[float]:
    """Raw score per sample, in order; used by reports and figures."""
    return [scorer.score(s.text_a, s.text_b).value for s in samples]
