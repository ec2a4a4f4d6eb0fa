/** Typed client for the resumekit HTTP service. Every number and row the UI
 * shows originates from one of these calls; no business logic lives here. */
export class ApiError extends Error {
    status;
    constructor(status, detail) {
        super(`HTTP ${status}: ${detail}`);
        this.status = status;
    }
}
async function fail(response) {
    let detail = response.statusText;
    try {
        const body = (await response.json());
        if (body.detail)
            detail = body.detail;
    }
    catch {
        // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
}
export class ApiClient {
    baseUrl;
    fetchImpl;
    constructor(baseUrl = "", fetchImpl = (input, init) => fetch(input, init)) {
        this.baseUrl = baseUrl;
        this.fetchImpl = fetchImpl;
    }
    async json(path, init) {
        const response = await this.fetchImpl(this.baseUrl + path, init);
        if (!response.ok)
            await fail(response);
        return (await response.json());
    }
    async uploadResumes(files) {
        const form = new FormData();
        for (const file of files) {
            form.append("files", file.data, file.name);
        }
        return this.json("/api/resumes", { method: "POST", body: form });
    }
    getJob(jobId) {
        return this.json(`/api/jobs/${encodeURIComponent(jobId)}`);
    }
    listResumes() {
        return this.json("/api/resumes");
    }
    getResume(candidateId) {
        return this.json(`/api/resumes/${encodeURIComponent(candidateId)}`);
    }
    async postComment(candidateId, stage, text) {
        const response = await this.fetchImpl(this.baseUrl + "/api/comments", {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ candidate_id: candidateId, stage, text }),
        });
        if (!response.ok)
            await fail(response);
    }
    async exportCsv() {
        const response = await this.fetchImpl(this.baseUrl + "/api/export.csv");
        if (!response.ok)
            await fail(response);
        return response.text();
    }
    exportCsvUrl() {
        return this.baseUrl + "/api/export.csv";
    }
    rank(jobDescription, candidateIds) {
        const body = { job_description: jobDescription };
        if (candidateIds && candidateIds.length > 0)
            body.candidate_ids = candidateIds;
        return this.json("/api/rank", {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
        });
    }
    getConfig() {
        return this.json("/api/config");
    }
    /** Poll a job until the service marks it done. Uploads process
     * synchronously today, so this normally resolves on the first try. */
    async waitForJob(jobId, attempts = 50, delayMs = 100) {
        for (let i = 0; i < attempts; i++) {
            const job = await this.getJob(jobId);
            if (job.status !== "pending")
                return job;
            await new Promise((resolve) => setTimeout(resolve, delayMs));
        }
        throw new ApiError(504, `job ${jobId} still pending`);
    }
}
