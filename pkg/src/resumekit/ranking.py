"""Candidate ranking against a job description.

A candidate's suitability is the maximum pair score between the job
description and any of their experience descriptions: suitability is
carried by the best-matching past role. Mean aggregation is available
as the configurable alternative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyJobDescription
from .pairs import CandidateProfile
from .scoring import PairScorer


@dataclass(frozen=True)
class ScoredCandidate:
    candidate_id: str
    score: float
    best_experience_index: int | None
    rank: int


def rank_candidates(
    jd: str,
    profiles: list[CandidateProfile],
    scorer: PairScorer,
    aggregation: str = "max",
) -> list[ScoredCandidate]:
    """Deterministic ranking: score desc, ties by candidate_id asc, ranks 1..N.

    ScorerUnavailable propagates from the scorer; no partial ranking is
    ever emitted.
    """
    if not jd.strip():
        raise EmptyJobDescription("job description is empty")
    if aggregation not in ("max", "mean"):
        raise ValueError(f"unknown aggregation {aggregation!r}")

    scored: list[tuple[str, float, int | None]] = []
    for profile in profiles:
        if not profile.experiences:
            scored.append((profile.candidate_id, 0.0, None))
            continue
        values = [scorer.score(jd, text).value for text in profile.experiences]
        best_index = max(range(len(values)), key=lambda i: (values[i], -i))
        aggregate = max(values) if aggregation == "max" else sum(values) / len(values)
        scored.append((profile.candidate_id, aggregate, best_index))

    scored.sort(key=lambda item: (-item[1], item[0]))
    return [
        ScoredCandidate(candidate_id=cid, score=value, best_experience_index=idx, rank=pos + 1)
        for pos, (cid, value, idx) in enumerate(scored)
    ]
