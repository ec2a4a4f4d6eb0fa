"""HTTP service: batch upload, parsing, ranking, comments, CSV export.

Backend for the recruiter web application. Batches process
synchronously (desk-scale inputs) but the 202 + job-poll shape is kept
so an async executor can slot in without changing the API. Per-file
failures never fail sibling files.
"""

from __future__ import annotations

import logging
from pathlib import Path

from fastapi import FastAPI, Request, Response, UploadFile
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .classify import CentroidModel, convert_to_standard, fit
from .config import PipelineConfig, load_config
from .detector import DocumentFormat, detect_format
from .errors import MalformedInput, ResumeKitError, ScorerUnavailable, StructureError
from .exporters import emit_csv
from .fixtures import gen_linkedin, training_segments
from .ingest import ingest_auto
from .linkedin import emit_json, parse_linkedin
from .pairs import CandidateProfile, profile_from_resume
from .ranking import rank_candidates
from .scoring import RemoteScorer, fit_lexical
from .store import FileOutcome, ResumeStore

logger = logging.getLogger(__name__)

# The bundled section model trains on this seeded fixture corpus when no
# model file is configured; deterministic and fast.
DEFAULT_MODEL_SEED = 42
DEFAULT_MODEL_FIXTURES = 100


def build_default_model() -> CentroidModel:
    corpus = training_segments(gen_linkedin(DEFAULT_MODEL_SEED, DEFAULT_MODEL_FIXTURES))
    return fit(corpus)


def create_app(
    store_dir: str | Path | None = None,
    config: PipelineConfig | None = None,
    model: CentroidModel | None = None,
    frontend_dir: str | Path | None = None,
) -> FastAPI:
    config = config or load_config()
    store = ResumeStore(store_dir or config.store_dir)
    section_model = model or build_default_model()

    app = FastAPI(title="resumekit service", version="1.0")
    app.state.store = store
    app.state.config = config

    def _process_file(filename: str, payload: bytes) -> FileOutcome:
        if len(payload) > config.upload_size_cap:
            return FileOutcome(filename=filename, error="file exceeds size cap")
        try:
            doc, _report = ingest_auto(payload, source_name=filename)
            verdict = detect_format(doc, config.signature)
            if verdict.format is DocumentFormat.LINKEDIN:
                resume = parse_linkedin(doc, config.signature.lexicon)
            else:
                resume = convert_to_standard(doc, section_model)
            store.upsert_resume(resume, verdict.format.value, filename)
            return FileOutcome(
                filename=filename,
                verdict=verdict.format.value,
                candidate_id=resume.candidate_id,
            )
        except (MalformedInput, StructureError, ResumeKitError, ValueError) as exc:
            logger.warning("file %s failed: %s", filename, exc)
            return FileOutcome(filename=filename, error=str(exc))

    @app.post("/api/resumes", status_code=202)
    async def upload_resumes(files: list[UploadFile]):
        if not files:
            return JSONResponse({"detail": "empty batch"}, status_code=400)
        job = store.new_job()
        for upload in files:
            payload = await upload.read()
            job.outcomes.append(_process_file(upload.filename or "<unnamed>", payload))
        job.status = "done"
        return {"job_id": job.job_id}

    @app.get("/api/jobs/{job_id}")
    def get_job(job_id: str):
        job = store.jobs.get(job_id)
        if job is None:
            return JSONResponse({"detail": "unknown job"}, status_code=404)
        return job.as_dict()

    @app.get("/api/resumes")
    def list_resumes():
        return [
            {
                "candidate_id": item.resume.candidate_id,
                "name": item.resume.name,
                "headline": item.resume.headline,
                "verdict": item.verdict,
                "filename": item.filename,
            }
            for item in store.all_resumes()
        ]

    @app.get("/api/resumes/{candidate_id}")
    def get_resume(candidate_id: str):
        item = store.get(candidate_id)
        if item is None:
            return JSONResponse({"detail": "unknown candidate"}, status_code=404)
        return Response(content=emit_json(item.resume), media_type="application/json")

    @app.get("/api/export.csv")
    def export_csv():
        resumes = [item.resume for item in store.all_resumes()]
        payload = emit_csv(resumes, store.comments, config.stages)
        return Response(content=payload, media_type="text/csv")

    @app.post("/api/comments", status_code=204)
    async def post_comment(request: Request):
        body = await request.json()
        candidate_id = body.get("candidate_id", "")
        stage = body.get("stage", "")
        text = body.get("text", "")
        if store.get(candidate_id) is None:
            return JSONResponse({"detail": "unknown candidate"}, status_code=404)
        if stage not in config.stages:
            return JSONResponse({"detail": f"unknown stage {stage!r}"}, status_code=422)
        store.upsert_comment(candidate_id, stage, str(text))
        return Response(status_code=204)

    @app.post("/api/rank")
    async def rank(request: Request):
        body = await request.json()
        jd = body.get("job_description", "")
        if not isinstance(jd, str) or not jd.strip():
            return JSONResponse({"detail": "empty job_description"}, status_code=422)
        wanted = body.get("candidate_ids")
        if wanted is None:
            items = store.all_resumes()
        else:
            items = []
            for cid in wanted:
                item = store.get(cid)
                if item is None:
                    return JSONResponse(
                        {"detail": f"unknown candidate {cid!r}"}, status_code=404
                    )
                items.append(item)
        profiles = [profile_from_resume(item.resume) for item in items]
        try:
            scorer = _build_scorer(config, profiles, jd)
            ranked = rank_candidates(jd, profiles, scorer, config.ranking_aggregation)
        except ScorerUnavailable as exc:
            return JSONResponse({"detail": str(exc)}, status_code=503)
        return [
            {"candidate_id": c.candidate_id, "score": c.score, "rank": c.rank}
            for c in ranked
        ]

    @app.get("/api/config")
    def get_config():
        return {
            "stages": list(config.stages),
            "scorer": "remote" if config.scorer_url else "lexical",
            "ranking_aggregation": config.ranking_aggregation,
        }

    if frontend_dir is not None and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True), name="ui")

    return app


def _build_scorer(config: PipelineConfig, profiles: list[CandidateProfile], jd: str):
    if config.scorer_url:
        return RemoteScorer(
            config.scorer_url,
            timeout_ms=config.scorer_timeout_ms,
            max_inflight=config.scorer_max_inflight,
        )
    corpus = [text for profile in profiles for text in profile.experiences]
    return fit_lexical(corpus or [jd])
