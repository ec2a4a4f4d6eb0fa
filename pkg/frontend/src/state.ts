/** UI state containers. All resume data is re-fetched from the service;
 * nothing here is persisted client-side. */

import { ApiClient, ApiError, BatchJob, CandidateSummary, RankedCandidate } from "./api.js";

export interface RankingState {
  ranked: RankedCandidate[];
  /** Set when the scorer is down (503); existing rows are stale. */
  error: string | null;
  stale: boolean;
  inFlight: boolean;
}

/** Runs rank requests with latest-wins semantics: responses to superseded
 * requests are discarded, whatever order they arrive in. */
export class RankingController {
  private requestCounter = 0;
  state: RankingState = { ranked: [], error: null, stale: false, inFlight: false };

  constructor(
    private readonly api: ApiClient,
    private readonly onChange: (state: RankingState) => void = () => {},
  ) {}

  private emit(): void {
    this.onChange(this.state);
  }

  async rank(jobDescription: string, candidateIds?: string[]): Promise<void> {
    const token = ++this.requestCounter;
    this.state = { ...this.state, inFlight: true };
    this.emit();
    try {
      const ranked = await this.api.rank(jobDescription, candidateIds);
      if (token !== this.requestCounter) return; // superseded
      this.state = { ranked, error: null, stale: false, inFlight: false };
    } catch (err) {
      if (token !== this.requestCounter) return;
      const message =
        err instanceof ApiError && err.status === 503
          ? "Scorer unavailable; showing stale results."
          : err instanceof Error
            ? err.message
            : String(err);
      this.state = {
        ranked: this.state.ranked,
        error: message,
        stale: this.state.ranked.length > 0,
        inFlight: false,
      };
    }
    this.emit();
  }
}

export interface UploadRow {
  filename: string;
  candidateId: string | null;
  verdict: string | null;
  error: string | null;
}

export function rowsFromJob(job: BatchJob): UploadRow[] {
  return job.outcomes.map((outcome) => ({
    filename: outcome.filename,
    candidateId: outcome.candidate_id,
    verdict: outcome.verdict,
    error: outcome.error,
  }));
}

/** Candidate table backed entirely by GET /api/resumes. */
export class CandidateStore {
  candidates: CandidateSummary[] = [];

  constructor(private readonly api: ApiClient) {}

  async refresh(): Promise<CandidateSummary[]> {
    this.candidates = await this.api.listResumes();
    return this.candidates;
  }
}
