"""Durable state for the HTTP service: an append-only JSON record log.

Two record types exist, resume-upsert and comment-upsert; the log is
replayed on boot and the last write wins per key. No database: the log
is newline-delimited JSON on local disk, inspectable with any text
tool. A single lock serializes appends; reads come from the in-memory
maps the replay builds.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from .linkedin import ParsedResume, resume_from_dict, resume_to_dict

LOG_FILENAME = "records.jsonl"


@dataclass
class StoredResume:
    resume: ParsedResume
    verdict: str
    filename: str


@dataclass
class FileOutcome:
    filename: str
    verdict: str | None = None
    candidate_id: str | None = None
    error: str | None = None

    def as_dict(self) -> dict:
        return {
            "filename": self.filename,
            "verdict": self.verdict,
            "candidate_id": self.candidate_id,
            "error": self.error,
        }


@dataclass
class BatchJob:
    job_id: str
    status: str = "pending"  # pending | done | failed
    outcomes: list[FileOutcome] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "job_id": self.job_id,
            "status": self.status,
            "outcomes": [o.as_dict() for o in self.outcomes],
        }


class CommentStore:
    """(candidate_id, stage) -> comment text with last-write-wins semantics."""

    def __init__(self) -> None:
        self._entries: dict[tuple[str, str], dict] = {}

    def put(self, candidate_id: str, stage: str, text: str, updated_at: float) -> None:
        self._entries[(candidate_id, stage)] = {"text": text, "updated_at": updated_at}

    def get(self, key: tuple[str, str], default: str = "") -> str:
        entry = self._entries.get(key)
        return entry["text"] if entry else default

    def __len__(self) -> int:
        return len(self._entries)


class ResumeStore:
    """Resumes and comments backed by the record log under store_dir."""

    def __init__(self, store_dir: str | Path) -> None:
        self.store_dir = Path(store_dir)
        self.store_dir.mkdir(parents=True, exist_ok=True)
        self.log_path = self.store_dir / LOG_FILENAME
        self._write_lock = threading.Lock()
        self._resumes: dict[str, StoredResume] = {}
        self.comments = CommentStore()
        self.jobs: dict[str, BatchJob] = {}
        self._replay()

    def _replay(self) -> None:
        if not self.log_path.exists():
            return
        with self.log_path.open("r", encoding="utf-8") as fp:
            for line in fp:
                line = line.strip()
                if not line:
                    continue
                record = json.loads(line)
                if record["type"] == "resume-upsert":
                    resume = resume_from_dict(record["resume"])
                    self._resumes[resume.candidate_id] = StoredResume(
                        resume=resume,
                        verdict=record.get("verdict", ""),
                        filename=record.get("filename", ""),
                    )
                elif record["type"] == "comment-upsert":
                    self.comments.put(
                        record["candidate_id"],
                        record["stage"],
                        record["text"],
                        record.get("updated_at", 0.0),
                    )

    def _append(self, record: dict) -> None:
        with self._write_lock:
            with self.log_path.open("a", encoding="utf-8") as fp:
                fp.write(json.dumps(record, ensure_ascii=False) + "\n")
                fp.flush()

    # ------------------------------------------------------------------
    # Mutations
    # ------------------------------------------------------------------

    def upsert_resume(self, resume: ParsedResume, verdict: str, filename: str) -> None:
        self._append(
            {
                "type": "resume-upsert",
                "resume": resume_to_dict(resume),
                "verdict": verdict,
                "filename": filename,
                "ts": time.time(),
            }
        )
        self._resumes[resume.candidate_id] = StoredResume(
            resume=resume, verdict=verdict, filename=filename
        )

    def upsert_comment(self, candidate_id: str, stage: str, text: str) -> None:
        now = time.time()
        self._append(
            {
                "type": "comment-upsert",
                "candidate_id": candidate_id,
                "stage": stage,
                "text": text,
                "updated_at": now,
            }
        )
        self.comments.put(candidate_id, stage, text, now)

    def new_job(self) -> BatchJob:
        job = BatchJob(job_id=uuid.uuid4().hex[:12])
        self.jobs[job.job_id] = job
        return job

    # ------------------------------------------------------------------
    # Reads
    # ------------------------------------------------------------------

    def get(self, candidate_id: str) -> StoredResume | None:
        return self._resumes.get(candidate_id)

    def all_resumes(self) -> list[StoredResume]:
        """Stored resumes sorted by candidate_id for deterministic exports."""
        return [self._resumes[cid] for cid in sorted(self._resumes)]

    def __len__(self) -> int:
        return len(self._resumes)
