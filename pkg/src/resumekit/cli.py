"""Command-line front door mirroring the library pipeline.

Every subcommand is byte-deterministic given identical inputs, flags,
and seeds; --json emits machine-readable output for scripting. Exit
codes: 0 success, 1 processing failure, 2 usage error.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from .classify import convert_to_standard
from .config import load_config
from .detector import DocumentFormat, detect_format
from .errors import ResumeKitError
from .exporters import emit_csv
from .fixtures import gen_generic, gen_linkedin, write_fixture_files
from .ingest import ingest_auto
from .linkedin import emit_json, parse_linkedin, read_json
from .pairs import build_pairs, profile_from_resume, read_jsonl, write_jsonl
from .ranking import rank_candidates
from .scoring import (
    RemoteScorer,
    evaluate_pairs,
    fit_lexical,
    pair_scores,
    scorer_from_env,
)


@click.group()
def main() -> None:
    """Resume parsing, pair datasets, ranking, and fixture generation."""


def _load_doc(path: Path, forced: str):
    data = path.read_bytes()
    if forced == "linkedin" or forced == "generic" or forced == "auto":
        doc, _report = ingest_auto(data, source_name=path.name)
        return doc
    raise click.UsageError(f"unknown format {forced!r}")


def _parse_one(path: Path, fmt: str, config) -> tuple[Path, object, str | None]:
    try:
        doc = _load_doc(path, fmt)
        if fmt == "linkedin":
            return path, parse_linkedin(doc, config.signature.lexicon), None
        if fmt == "generic":
            return path, convert_to_standard(doc, _default_model()), None
        verdict = detect_format(doc, config.signature)
        if verdict.format is DocumentFormat.LINKEDIN:
            return path, parse_linkedin(doc, config.signature.lexicon), None
        return path, convert_to_standard(doc, _default_model()), None
    except (ResumeKitError, OSError, ValueError) as exc:
        return path, None, str(exc)


_MODEL_CACHE: list = []


def _default_model():
    if not _MODEL_CACHE:
        from .service import build_default_model

        _MODEL_CACHE.append(build_default_model())
    return _MODEL_CACHE[0]


@main.command("parse")
@click.argument("files", nargs=-1, type=click.Path(exists=True, path_type=Path))
@click.option("--format", "fmt", type=click.Choice(["auto", "linkedin", "generic"]),
              default="auto", show_default=True)
@click.option("--out", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--output", type=click.Path(path_type=Path), default=None,
              help="Write here instead of stdout.")
@click.option("--config", "config_path", type=click.Path(exists=True, path_type=Path),
              default=None)
@click.option("--jobs", type=int, default=None, help="Parallel workers (default: CPU count).")
def parse_cmd(files, fmt, out, output, config_path, jobs):
    """Parse resume files to resume/v1 JSON or one combined CSV."""
    if not files:
        raise click.UsageError("no input files given")
    config = load_config(config_path)
    workers = jobs or os.cpu_count() or 1
    with ThreadPoolExecutor(max_workers=min(max(1, workers), len(files))) as pool:
        results = list(pool.map(lambda p: _parse_one(p, fmt, config), files))

    failures = [(path, err) for path, _resume, err in results if err]
    for path, err in failures:
        click.echo(f"{path}: {err}", err=True)
    resumes = [resume for _path, resume, err in results if not err]

    if out == "csv":
        payload = emit_csv(resumes, stages=config.stages)
    else:
        payload = b"\n".join(emit_json(r) for r in resumes) + b"\n" if resumes else b""
    if output is not None:
        output.write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    if failures:
        sys.exit(1)


def _read_resume_dir(resume_dir: Path) -> list:
    paths = sorted(p for p in resume_dir.iterdir() if p.suffix == ".json")
    resumes = []
    for path in paths:
        try:
            resumes.append(read_json(path.read_bytes()))
        except (ValueError, KeyError) as exc:
            raise click.ClickException(f"{path}: not a resume/v1 file ({exc})")
    if not resumes:
        raise click.ClickException(f"no .json resumes under {resume_dir}")
    return resumes


@main.command("pairs")
@click.argument("resume_dir", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--seed", type=int, required=True)
@click.option("--out", "out_path", type=click.Path(path_type=Path), required=True)
def pairs_cmd(resume_dir, seed, out_path):
    """Build the same-candidate pair dataset from parsed resumes."""
    resumes = _read_resume_dir(resume_dir)
    profiles = [profile_from_resume(r) for r in resumes]
    try:
        samples = build_pairs(profiles, seed)
    except ResumeKitError as exc:
        raise click.ClickException(str(exc))
    out_path.write_bytes(write_jsonl(samples))
    positives = sum(1 for s in samples if s.label == 1)
    click.echo(f"wrote {len(samples)} samples ({positives} positive) to {out_path}")


@main.command("rank")
@click.option("--jd", "jd_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--resumes", "resume_dir", type=click.Path(exists=True, file_okay=False, path_type=Path),
              required=True)
@click.option("--scorer", type=click.Choice(["lexical", "remote"]), default="lexical",
              show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--csv", "csv_path", type=click.Path(path_type=Path), default=None,
              help="Also write the ranking as CSV.")
@click.option("--figures", "figures_dir", type=click.Path(path_type=Path), default=None,
              help="Render a ranking chart into this directory.")
def rank_cmd(jd_path, resume_dir, scorer, as_json, csv_path, figures_dir):
    """Rank stored resumes against a job description."""
    jd = jd_path.read_text(encoding="utf-8")
    resumes = _read_resume_dir(resume_dir)
    profiles = [profile_from_resume(r) for r in resumes]
    try:
        if scorer == "remote":
            pair_scorer = scorer_from_env()
            if not isinstance(pair_scorer, RemoteScorer):
                raise click.ClickException("remote scorer requested but RESUME_SCORER_URL unset")
        else:
            corpus = [t for p in profiles for t in p.experiences] or [jd]
            pair_scorer = fit_lexical(corpus)
        ranked = rank_candidates(jd, profiles, pair_scorer)
    except ResumeKitError as exc:
        raise click.ClickException(str(exc))

    if as_json:
        click.echo(json.dumps(
            [{"candidate_id": c.candidate_id, "score": c.score, "rank": c.rank} for c in ranked]
        ))
    else:
        width = max(len(c.candidate_id) for c in ranked)
        for c in ranked:
            click.echo(f"{c.rank:>4}  {c.candidate_id:<{width}}  {c.score:.4f}")
    if csv_path is not None:
        rows = ["rank,candidate_id,score"]
        rows += [f"{c.rank},{c.candidate_id},{c.score!r}" for c in ranked]
        csv_path.write_text("\r\n".join(rows) + "\r\n", encoding="utf-8")
    if figures_dir is not None:
        from .report import save_ranking_figure

        path = save_ranking_figure(ranked, figures_dir)
        click.echo(f"figure written to {path}", err=True)


@main.command("eval")
@click.option("--dataset", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--threshold", type=float, default=0.5, show_default=True)
@click.option("--scorer", type=click.Choice(["lexical", "remote"]), default="lexical",
              show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--figures", "figures_dir", type=click.Path(path_type=Path), default=None)
def eval_cmd(dataset, threshold, scorer, as_json, figures_dir):
    """Evaluate a pair scorer over a JSONL dataset."""
    samples = read_jsonl(dataset.read_bytes())
    if not samples:
        raise click.ClickException("dataset is empty")
    try:
        if scorer == "remote":
            pair_scorer = scorer_from_env()
            if not isinstance(pair_scorer, RemoteScorer):
                raise click.ClickException("remote scorer requested but RESUME_SCORER_URL unset")
        else:
            corpus = sorted({s.text_a for s in samples} | {s.text_b for s in samples})
            pair_scorer = fit_lexical(corpus)
        metrics = evaluate_pairs(pair_scorer, samples, threshold)
    except ResumeKitError as exc:
        raise click.ClickException(str(exc))

    if as_json:
        click.echo(json.dumps(metrics.as_dict()))
    else:
        click.echo(f"samples    {len(samples)}")
        click.echo(f"accuracy   {metrics.accuracy:.4f}")
        click.echo(f"precision  {metrics.precision:.4f}")
        click.echo(f"recall     {metrics.recall:.4f}")
        click.echo(f"confusion  tp={metrics.tp} fp={metrics.fp} tn={metrics.tn} fn={metrics.fn}")
    if figures_dir is not None:
        from .report import save_eval_figures

        scores = pair_scores(pair_scorer, samples)
        labels = [s.label for s in samples]
        paths = save_eval_figures(metrics, scores, labels, figures_dir, threshold)
        for path in paths:
            click.echo(f"figure written to {path}", err=True)


@main.command("gen-fixtures")
@click.option("--seed", type=int, required=True)
@click.option("--count", type=int, required=True)
@click.option("--out", "out_dir", type=click.Path(path_type=Path), required=True)
@click.option("--kind", type=click.Choice(["linkedin", "generic-single", "generic-two-column"]),
              default="linkedin", show_default=True)
def gen_fixtures_cmd(seed, count, out_dir, kind):
    """Generate synthetic fixture XML files with ground-truth sidecars."""
    if count < 1:
        raise click.UsageError("--count must be >= 1")
    if kind == "linkedin":
        fixtures = gen_linkedin(seed, count)
    elif kind == "generic-single":
        fixtures = gen_generic(seed, count, "single")
    else:
        fixtures = gen_generic(seed, count, "two_column")
    written = write_fixture_files(out_dir, fixtures)
    click.echo(f"wrote {len(written)} files to {out_dir}")


@main.command("serve")
@click.option("--store-dir", type=click.Path(path_type=Path), default=None)
@click.option("--bind", default=None, help="host:port (default from config/env)")
@click.option("--config", "config_path", type=click.Path(exists=True, path_type=Path),
              default=None)
@click.option("--frontend", type=click.Path(path_type=Path), default=None,
              help="Directory of built web UI assets to serve at /.")
def serve_cmd(store_dir, bind, config_path, frontend):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    config = load_config(config_path)
    app = create_app(store_dir=store_dir, config=config, frontend_dir=frontend)
    host, _, port = (bind or config.bind_addr).partition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000), log_level="info")


if __name__ == "__main__":
    main()
