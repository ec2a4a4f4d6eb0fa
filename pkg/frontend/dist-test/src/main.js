/** Bootstrap: fetch config, mount panels, wire events. The stage list and
 * scorer kind come from GET /api/config so configuration lives server-side. */
import { ApiClient } from "./api.js";
import { CandidateStore, RankingController, rowsFromJob } from "./state.js";
import { candidateTableHtml, detailHtml, escapeHtml, rankingTableHtml, uploadOutcomeHtml, } from "./views.js";
const api = new ApiClient("");
const store = new CandidateStore(api);
const names = new Map();
function el(selector) {
    const found = document.querySelector(selector);
    if (!found)
        throw new Error(`missing element ${selector}`);
    return found;
}
async function refreshTable() {
    const candidates = await store.refresh();
    names.clear();
    for (const c of candidates)
        names.set(c.candidate_id, c.name);
    el("#candidate-table").innerHTML = candidateTableHtml(candidates);
    renderRankScope(candidates);
}
function renderRankScope(candidates) {
    const select = el("#rank-scope");
    const previous = new Set(Array.from(select.selectedOptions).map((option) => option.value));
    select.innerHTML = candidates
        .map((c) => `<option value="${escapeHtml(c.candidate_id)}" ${previous.has(c.candidate_id) ? "selected" : ""}>${escapeHtml(c.name)}</option>`)
        .join("");
}
async function showDetail(candidateId, stages) {
    const resume = await api.getResume(candidateId);
    const panel = el("#detail-panel");
    panel.innerHTML = detailHtml(resume, stages, {});
    panel.querySelectorAll("[data-save-stage]").forEach((button) => {
        button.addEventListener("click", async () => {
            const stage = button.dataset.saveStage;
            const input = panel.querySelector(`input[data-stage="${stage}"]`);
            button.disabled = true;
            try {
                await api.postComment(candidateId, stage, input.value);
                button.textContent = "Saved";
                setTimeout(() => (button.textContent = "Save"), 1200);
            }
            finally {
                button.disabled = false;
            }
        });
    });
}
async function main() {
    const config = await api.getConfig();
    el("#scorer-kind").textContent = `scorer: ${config.scorer}`;
    el("#export-link").href = api.exportCsvUrl();
    const picker = el("#file-input");
    const dropzone = el("#dropzone");
    const submit = el("#upload-button");
    let pending = [];
    function setPending(files) {
        pending = Array.from(files).map((file) => ({ name: file.name, data: file }));
        submit.disabled = pending.length === 0;
        el("#pending-files").textContent =
            pending.length === 0 ? "no files selected" : pending.map((f) => f.name).join(", ");
    }
    picker.addEventListener("change", () => setPending(picker.files ?? []));
    dropzone.addEventListener("dragover", (event) => {
        event.preventDefault();
        dropzone.classList.add("dragging");
    });
    dropzone.addEventListener("dragleave", () => dropzone.classList.remove("dragging"));
    dropzone.addEventListener("drop", (event) => {
        event.preventDefault();
        dropzone.classList.remove("dragging");
        if (event.dataTransfer)
            setPending(event.dataTransfer.files);
    });
    submit.disabled = true;
    submit.addEventListener("click", async () => {
        if (pending.length === 0)
            return;
        submit.disabled = true;
        try {
            const { job_id } = await api.uploadResumes(pending);
            const job = await api.waitForJob(job_id);
            el("#upload-outcomes").innerHTML = uploadOutcomeHtml(rowsFromJob(job));
            pending = [];
            el("#pending-files").textContent = "no files selected";
            await refreshTable();
        }
        finally {
            submit.disabled = pending.length === 0;
        }
    });
    el("#candidate-table").addEventListener("click", (event) => {
        const row = event.target.closest("[data-candidate]");
        if (row)
            void showDetail(row.dataset.candidate, config.stages);
    });
    const ranking = new RankingController(api, (state) => {
        el("#ranking-panel").innerHTML = rankingTableHtml(state, names);
        el("#rank-button").disabled = state.inFlight;
    });
    el("#rank-button").addEventListener("click", () => {
        const jd = el("#jd-input").value;
        if (!jd.trim())
            return;
        const scope = Array.from(el("#rank-scope").selectedOptions).map((option) => option.value);
        void ranking.rank(jd, scope.length > 0 ? scope : undefined);
    });
    await refreshTable();
}
void main();
