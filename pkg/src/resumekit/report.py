"""Figure rendering for the CLI report paths.

Figures land next to the delimited output: the eval path renders a
score histogram and a confusion matrix, the rank path a horizontal bar
chart. matplotlib imports lazily with the Agg backend so library users
never pay the import cost.
"""

from __future__ import annotations

from pathlib import Path

from .ranking import ScoredCandidate
from .scoring import PairMetrics


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_eval_figures(
    metrics: PairMetrics,
    scores: list[float],
    labels: list[int],
    outdir: str | Path,
    threshold: float,
) -> list[Path]:
    plt = _plt()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    fig, ax = plt.subplots(figsize=(6, 4))
    pos = [s for s, y in zip(scores, labels) if y == 1]
    neg = [s for s, y in zip(scores, labels) if y == 0]
    bins = [i / 20 for i in range(21)]
    ax.hist([pos, neg], bins=bins, label=["same candidate", "different"], stacked=False)
    ax.axvline(threshold, color="black", linestyle="--", linewidth=1, label="threshold")
    ax.set_xlabel("pair score")
    ax.set_ylabel("pairs")
    ax.set_title("Pair score distribution")
    ax.legend()
    fig.tight_layout()
    path = outdir / "score_histogram.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(4.2, 3.6))
    matrix = [[metrics.tp, metrics.fn], [metrics.fp, metrics.tn]]
    ax.imshow(matrix, cmap="Blues")
    for i in range(2):
        for j in range(2):
            ax.text(j, i, str(matrix[i][j]), ha="center", va="center")
    ax.set_xticks([0, 1], ["pred same", "pred different"])
    ax.set_yticks([0, 1], ["same", "different"])
    ax.set_title(f"Confusion at threshold {threshold:g}")
    fig.tight_layout()
    path = outdir / "confusion_matrix.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)
    return written


def save_ranking_figure(ranked: list[ScoredCandidate], outdir: str | Path) -> Path:
    plt = _plt()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    shown = ranked[:30]
    fig, ax = plt.subplots(figsize=(7, max(2.5, 0.32 * len(shown))))
    names = [c.candidate_id for c in shown]
    values = [c.score for c in shown]
    positions = range(len(shown) - 1, -1, -1)
    ax.barh(list(positions), values, color="#4878a8")
    ax.set_yticks(list(positions), names, fontsize=8, family="monospace")
    ax.set_xlim(0, 1)
    ax.set_xlabel("suitability score")
    ax.set_title("Candidate ranking")
    fig.tight_layout()
    path = outdir / "ranking.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
