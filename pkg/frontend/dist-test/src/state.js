/** UI state containers. All resume data is re-fetched from the service;
 * nothing here is persisted client-side. */
import { ApiError } from "./api.js";
/** Runs rank requests with latest-wins semantics: responses to superseded
 * requests are discarded, whatever order they arrive in. */
export class RankingController {
    api;
    onChange;
    requestCounter = 0;
    state = { ranked: [], error: null, stale: false, inFlight: false };
    constructor(api, onChange = () => { }) {
        this.api = api;
        this.onChange = onChange;
    }
    emit() {
        this.onChange(this.state);
    }
    async rank(jobDescription, candidateIds) {
        const token = ++this.requestCounter;
        this.state = { ...this.state, inFlight: true };
        this.emit();
        try {
            const ranked = await this.api.rank(jobDescription, candidateIds);
            if (token !== this.requestCounter)
                return; // superseded
            this.state = { ranked, error: null, stale: false, inFlight: false };
        }
        catch (err) {
            if (token !== this.requestCounter)
                return;
            const message = err instanceof ApiError && err.status === 503
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
export function rowsFromJob(job) {
    return job.outcomes.map((outcome) => ({
        filename: outcome.filename,
        candidateId: outcome.candidate_id,
        verdict: outcome.verdict,
        error: outcome.error,
    }));
}
/** Candidate table backed entirely by GET /api/resumes. */
export class CandidateStore {
    api;
    candidates = [];
    constructor(api) {
        this.api = api;
    }
    async refresh() {
        this.candidates = await this.api.listResumes();
        return this.candidates;
    }
}
