/** Upload -> table -> comment -> CSV -> ranking flow against the live service. */
import assert from "node:assert/strict";
import { after, before, test } from "node:test";
import { ApiClient, ApiError } from "../src/api.js";
import { CandidateStore, RankingController, rowsFromJob } from "../src/state.js";
import { candidateTableHtml, rankingTableHtml, uploadOutcomeHtml } from "../src/views.js";
import { generateFixtures, startService } from "./helpers.js";
let service;
let api;
before(async () => {
    service = await startService();
    api = new ApiClient(service.baseUrl);
});
after(() => service.stop());
test("upload flow: three files become three table rows", async () => {
    const files = generateFixtures(55, 3);
    const { job_id } = await api.uploadResumes(files);
    const job = await api.waitForJob(job_id);
    assert.equal(job.status, "done");
    assert.equal(job.outcomes.length, 3);
    assert.ok(job.outcomes.every((o) => o.candidate_id && !o.error));
    const store = new CandidateStore(api);
    const candidates = await store.refresh();
    assert.equal(candidates.length, 3);
    const html = candidateTableHtml(candidates);
    assert.equal((html.match(/data-candidate=/g) ?? []).length, 3);
});
test("bad file in a batch renders an error chip, siblings survive", async () => {
    const files = generateFixtures(56, 2);
    files.splice(1, 0, {
        name: "broken.xml",
        data: new Blob(["<pdf2xml><page"], { type: "application/xml" }),
    });
    const { job_id } = await api.uploadResumes(files);
    const job = await api.waitForJob(job_id);
    const rows = rowsFromJob(job);
    assert.equal(rows.filter((r) => r.error).length, 1);
    assert.equal(rows.filter((r) => !r.error).length, 2);
    const html = uploadOutcomeHtml(rows);
    assert.equal((html.match(/chip-error/g) ?? []).length, 1);
    assert.equal((html.match(/chip-ok/g) ?? []).length, 2);
});
test("comment saved in the detail view lands in the downloaded CSV", async () => {
    const store = new CandidateStore(api);
    const candidates = await store.refresh();
    const target = candidates[0];
    await api.postComment(target.candidate_id, "screening", "call back next week");
    const csv = await api.exportCsv();
    const line = csv
        .split("\r\n")
        .find((row) => row.startsWith(target.candidate_id));
    assert.ok(line, "candidate row present in CSV");
    assert.ok(line.includes("call back next week"));
});
test("unknown stage is rejected by the service", async () => {
    const store = new CandidateStore(api);
    const [target] = await store.refresh();
    await assert.rejects(api.postComment(target.candidate_id, "vibes", "nope"), (err) => err instanceof ApiError && err.status === 422);
});
test("ranking view ordering matches the rank endpoint exactly", async () => {
    const resume = await api.getResume((await api.listResumes())[0].candidate_id);
    const experience = resume.sections.find((s) => s.label === "Experience");
    const jd = experience?.entries[0]?.description ?? "platform reliability work";
    const direct = await api.rank(jd);
    const controller = new RankingController(api);
    await controller.rank(jd);
    assert.deepEqual(controller.state.ranked, direct);
    const html = rankingTableHtml(controller.state, new Map());
    const order = [...html.matchAll(/data-ranked="([^"]+)"/g)].map((m) => m[1]);
    assert.deepEqual(order, direct.map((c) => c.candidate_id));
    // A verbatim experience puts its owner at the top.
    assert.equal(direct[0].candidate_id, resume.candidate_id);
});
test("re-ranking after a jd edit stays consistent with the API", async () => {
    const controller = new RankingController(api);
    await controller.rank("built react components and design tokens");
    const first = controller.state.ranked;
    await controller.rank("audited security controls and key management");
    const second = controller.state.ranked;
    assert.deepEqual(second, await api.rank("audited security controls and key management"));
    assert.notDeepEqual(first, second);
});
test("config exposes stages for the comment dropdown", async () => {
    const config = await api.getConfig();
    assert.deepEqual(config.stages, [
        "screening", "interview_1", "interview_2", "final", "decision",
    ]);
    assert.equal(config.scorer, "lexical");
});
test("empty job description is a client-visible 422", async () => {
    await assert.rejects(api.rank("   "), (err) => err instanceof ApiError && err.status === 422);
});
