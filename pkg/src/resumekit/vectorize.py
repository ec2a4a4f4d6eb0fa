"""Shared tf-idf text vectorization.

The section classifier and the lexical pair scorer use the same
tokenizer, stopword list, and smoothed idf formula
ln((1+N)/(1+df)) + 1, so their vector spaces stay comparable.
Accumulations use math.fsum, which is correctly rounded and therefore
insensitive to summation order; refitting on a permuted corpus yields
an identical model.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

_TOKEN_RE = re.compile(r"[a-z0-9]+")

# Fixed 50-word stopword list, versioned with the package. Changing it
# invalidates every serialized model.
STOPWORDS = frozenset(
    (
        "a", "about", "all", "an", "and", "any", "are", "as", "at", "be",
        "been", "but", "by", "can", "did", "do", "for", "from", "had", "has",
        "have", "he", "her", "his", "i", "in", "is", "it", "its", "my",
        "not", "of", "on", "or", "our", "she", "that", "the", "their", "they",
        "them", "this", "to", "was", "we", "were", "will", "with", "you", "your",
    )
)


def tokenize(text: str) -> list[str]:
    """Lowercase maximal alphanumeric runs, minus stopwords."""
    return [t for t in _TOKEN_RE.findall(text.lower()) if t not in STOPWORDS]


@dataclass(frozen=True)
class IdfModel:
    """Document frequencies from a fitted corpus; idf defined for any token.

    Unseen tokens take df = 0, so two identical texts always map to the
    same nonzero vector regardless of the corpus.
    """

    n_docs: int
    df: dict[str, int]

    def idf(self, token: str) -> float:
        return math.log((1 + self.n_docs) / (1 + self.df.get(token, 0))) + 1.0


def fit_idf(corpus: list[str]) -> IdfModel:
    df: Counter[str] = Counter()
    for text in corpus:
        df.update(set(tokenize(text)))
    return IdfModel(n_docs=len(corpus), df=dict(df))


def tfidf_vector(
    text: str,
    model: IdfModel,
    vocabulary: frozenset[str] | None = None,
) -> dict[str, float]:
    """Sparse tf*idf vector; with a vocabulary, out-of-vocabulary tokens drop."""
    counts = Counter(tokenize(text))
    if vocabulary is not None:
        return {t: n * model.idf(t) for t, n in counts.items() if t in vocabulary}
    return {t: n * model.idf(t) for t, n in counts.items()}


def l2_norm(vec: dict[str, float]) -> float:
    return math.sqrt(math.fsum(w * w for _, w in sorted(vec.items())))


def normalize(vec: dict[str, float]) -> dict[str, float]:
    norm = l2_norm(vec)
    if norm == 0.0:
        return {}
    return {t: w / norm for t, w in vec.items()}


def dot(u: dict[str, float], v: dict[str, float]) -> float:
    if len(v) < len(u):
        u, v = v, u
    shared = sorted(t for t in u if t in v)
    return math.fsum(u[t] * v[t] for t in shared)


def cosine(u: dict[str, float], v: dict[str, float]) -> float:
    """Cosine similarity, clamped to [0, 1]; zero vectors score 0.0.

    The shared-token dot product iterates in sorted order, so
    cosine(a, b) == cosine(b, a) exactly.
    """
    nu, nv = l2_norm(u), l2_norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    value = dot(u, v) / (nu * nv)
    return min(1.0, max(0.0, value))
