"""Same-candidate pair dataset construction.

Positives are all unordered combinations of one candidate's experience
descriptions; negatives pair experiences across distinct candidates,
drawn with the package PRNG until they balance the positives 1:1.
Everything is deterministic given (profiles, seed).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DegenerateSplit, InsufficientProfiles, NegativeSamplingExhausted
from .linkedin import ParsedResume, SectionLabel
from .rng import SplitMix64

NEGATIVE_DRAW_BUDGET_FACTOR = 50


@dataclass(frozen=True)
class CandidateProfile:
    candidate_id: str
    experiences: tuple[str, ...]

    def __post_init__(self) -> None:
        for text in self.experiences:
            if not text.strip():
                raise ValueError("experience texts must be non-empty")


@dataclass(frozen=True)
class PairSample:
    text_a: str
    text_b: str
    label: int  # 1 = same candidate, 0 = different candidates
    a_candidate: str
    b_candidate: str


def profile_from_resume(resume: ParsedResume) -> CandidateProfile:
    """Experience descriptions, in section order, skipping empty ones."""
    experiences = [
        entry.description
        for section in resume.sections
        if section.label is SectionLabel.Experience
        for entry in section.entries
        if entry.description.strip()
    ]
    return CandidateProfile(resume.candidate_id, tuple(experiences))


def _pair_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def build_pairs(profiles: list[CandidateProfile], seed: int) -> list[PairSample]:
    """All positives in profile order, then |positives| seeded negatives.

    Duplicate unordered text pairs are skipped on both sides. Raises
    NegativeSamplingExhausted after 50x|positives| failed draws.
    """
    if len(profiles) < 2:
        raise InsufficientProfiles(f"need >= 2 profiles, got {len(profiles)}")

    seen: set[tuple[str, str]] = set()
    positives: list[PairSample] = []
    for profile in profiles:
        exps = profile.experiences
        for i in range(len(exps)):
            for j in range(i + 1, len(exps)):
                if exps[i] == exps[j]:
                    continue
                key = _pair_key(exps[i], exps[j])
                if key in seen:
                    continue
                seen.add(key)
                positives.append(
                    PairSample(exps[i], exps[j], 1, profile.candidate_id, profile.candidate_id)
                )
    if not positives:
        raise InsufficientProfiles("no profile contributes a positive pair")

    rng = SplitMix64(seed)
    budget = NEGATIVE_DRAW_BUDGET_FACTOR * len(positives)
    negatives: list[PairSample] = []
    draws = 0
    while len(negatives) < len(positives):
        if draws >= budget:
            raise NegativeSamplingExhausted(
                f"{len(negatives)}/{len(positives)} negatives after {draws} draws"
            )
        draws += 1
        i = rng.randrange(len(profiles))
        first = profiles[i]
        if not first.experiences:
            continue
        text_a = first.experiences[rng.randrange(len(first.experiences))]
        j = rng.randrange(len(profiles) - 1)
        if j >= i:
            j += 1
        second = profiles[j]
        if not second.experiences:
            continue
        text_b = second.experiences[rng.randrange(len(second.experiences))]
        key = _pair_key(text_a, text_b)
        if key in seen:
            continue
        seen.add(key)
        negatives.append(
            PairSample(text_a, text_b, 0, first.candidate_id, second.candidate_id)
        )
    return positives + negatives


@dataclass
class SplitResult:
    train: list[PairSample]
    test: list[PairSample]
    dropped: int
    train_label_counts: dict[int, int] = field(default_factory=dict)
    test_label_counts: dict[int, int] = field(default_factory=dict)


def split_pairs(samples: list[PairSample], train_fraction: float, seed: int) -> SplitResult:
    """Candidate-disjoint split; samples straddling the sides are dropped.

    Disjointness is the stricter protocol: same-candidate leakage across
    sides would inflate pair accuracy.
    """
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must be in (0, 1)")
    candidates = sorted({s.a_candidate for s in samples} | {s.b_candidate for s in samples})
    rng = SplitMix64(seed)
    rng.shuffle(candidates)
    n_train = int(train_fraction * len(candidates))
    train_side = set(candidates[:n_train])

    result = SplitResult(train=[], test=[], dropped=0)
    for sample in samples:
        a_in = sample.a_candidate in train_side
        b_in = sample.b_candidate in train_side
        if a_in and b_in:
            result.train.append(sample)
        elif not a_in and not b_in:
            result.test.append(sample)
        else:
            result.dropped += 1
    for side, counts in ((result.train, result.train_label_counts),
                         (result.test, result.test_label_counts)):
        for sample in side:
            counts[sample.label] = counts.get(sample.label, 0) + 1
    for name, counts in (("train", result.train_label_counts),
                         ("test", result.test_label_counts)):
        if counts.get(0, 0) == 0 or counts.get(1, 0) == 0:
            raise DegenerateSplit(f"{name} side lacks positives or negatives: {counts}")
    return result


# ---------------------------------------------------------------------------
# JSONL dataset serialization
# ---------------------------------------------------------------------------


def write_jsonl(samples: list[PairSample]) -> bytes:
    lines = [
        json.dumps(
            {
                "text_a": s.text_a,
                "text_b": s.text_b,
                "label": s.label,
                "a": s.a_candidate,
                "b": s.b_candidate,
            },
            ensure_ascii=False,
            separators=(",", ":"),
        )
        for s in samples
    ]
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""


def read_jsonl(data: bytes) -> list[PairSample]:
    samples = []
    for line in data.decode("utf-8").splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        samples.append(
            PairSample(obj["text_a"], obj["text_b"], int(obj["label"]), obj["a"], obj["b"])
        )
    return samples
