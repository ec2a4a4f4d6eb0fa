/** Typed client for the resumekit HTTP service. Every number and row the UI
 * shows originates from one of these calls; no business logic lives here. */

export interface CandidateSummary {
  candidate_id: string;
  name: string;
  headline: string | null;
  verdict: string;
  filename: string;
}

export interface FileOutcome {
  filename: string;
  verdict: string | null;
  candidate_id: string | null;
  error: string | null;
}

export interface BatchJob {
  job_id: string;
  status: "pending" | "done" | "failed";
  outcomes: FileOutcome[];
}

export interface EntryData {
  title: string;
  organization: string | null;
  date_from: string | null;
  date_to: string | null;
  duration_text: string | null;
  description: string;
}

export interface SectionData {
  label: string;
  heading_text: string;
  free_text: string;
  entries: EntryData[];
}

export interface ResumeData {
  candidate_id: string;
  name: string;
  headline: string | null;
  location: string | null;
  contact: Record<string, string>;
  sections: SectionData[];
  provenance: string;
}

export interface RankedCandidate {
  candidate_id: string;
  score: number;
  rank: number;
}

export interface UiConfig {
  stages: string[];
  scorer: "lexical" | "remote";
  ranking_aggregation: string;
}

export interface UploadFileInput {
  name: string;
  data: Blob;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function fail(response: Response): Promise<never> {
  let detail = response.statusText;
  try {
    const body = (await response.json()) as { detail?: string };
    if (body.detail) detail = body.detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, detail);
}

export class ApiClient {
  constructor(
    private readonly baseUrl = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) await fail(response);
    return (await response.json()) as T;
  }

  async uploadResumes(files: UploadFileInput[]): Promise<{ job_id: string }> {
    const form = new FormData();
    for (const file of files) {
      form.append("files", file.data, file.name);
    }
    return this.json("/api/resumes", { method: "POST", body: form });
  }

  getJob(jobId: string): Promise<BatchJob> {
    return this.json(`/api/jobs/${encodeURIComponent(jobId)}`);
  }

  listResumes(): Promise<CandidateSummary[]> {
    return this.json("/api/resumes");
  }

  getResume(candidateId: string): Promise<ResumeData> {
    return this.json(`/api/resumes/${encodeURIComponent(candidateId)}`);
  }

  async postComment(candidateId: string, stage: string, text: string): Promise<void> {
    const response = await this.fetchImpl(this.baseUrl + "/api/comments", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ candidate_id: candidateId, stage, text }),
    });
    if (!response.ok) await fail(response);
  }

  async exportCsv(): Promise<string> {
    const response = await this.fetchImpl(this.baseUrl + "/api/export.csv");
    if (!response.ok) await fail(response);
    return response.text();
  }

  exportCsvUrl(): string {
    return this.baseUrl + "/api/export.csv";
  }

  rank(jobDescription: string, candidateIds?: string[]): Promise<RankedCandidate[]> {
    const body: Record<string, unknown> = { job_description: jobDescription };
    if (candidateIds && candidateIds.length > 0) body.candidate_ids = candidateIds;
    return this.json("/api/rank", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  getConfig(): Promise<UiConfig> {
    return this.json("/api/config");
  }

  /** Poll a job until the service marks it done. Uploads process
   * synchronously today, so this normally resolves on the first try. */
  async waitForJob(jobId: string, attempts = 50, delayMs = 100): Promise<BatchJob> {
    for (let i = 0; i < attempts; i++) {
      const job = await this.getJob(jobId);
      if (job.status !== "pending") return job;
      await new Promise((resolve) => setTimeout(resolve, delayMs));
    }
    throw new ApiError(504, `job ${jobId} still pending`);
  }
}
