/** HTML builders for every panel. Pure string functions so they can be
 * exercised without a DOM; main.ts owns mounting and event wiring. */
export function escapeHtml(text) {
    return text
        .replaceAll("&", "&amp;")
        .replaceAll("<", "&lt;")
        .replaceAll(">", "&gt;")
        .replaceAll('"', "&quot;");
}
export function candidateTableHtml(candidates) {
    if (candidates.length === 0) {
        return `<p class="empty">No resumes uploaded yet.</p>`;
    }
    const rows = candidates
        .map((c) => `
      <tr data-candidate="${escapeHtml(c.candidate_id)}">
        <td>${escapeHtml(c.name)}</td>
        <td>${escapeHtml(c.headline ?? "")}</td>
        <td><span class="badge ${c.verdict === "LinkedInFormat" ? "badge-std" : "badge-gen"}">${escapeHtml(c.verdict)}</span></td>
        <td class="mono">${escapeHtml(c.filename)}</td>
      </tr>`)
        .join("");
    return `
    <table class="table" data-candidate-table>
      <thead><tr><th>Name</th><th>Headline</th><th>Format</th><th>File</th></tr></thead>
      <tbody>${rows}</tbody>
    </table>`;
}
export function uploadOutcomeHtml(rows) {
    return rows
        .map((row) => row.error
        ? `<span class="chip chip-error" title="${escapeHtml(row.error)}">${escapeHtml(row.filename)}: failed</span>`
        : `<span class="chip chip-ok">${escapeHtml(row.filename)}: ${escapeHtml(row.verdict ?? "")}</span>`)
        .join("");
}
export function detailHtml(resume, stages, comments) {
    const contact = Object.entries(resume.contact)
        .map(([field, value]) => `<span class="mono">${escapeHtml(field)}: ${escapeHtml(value)}</span>`)
        .join(" · ");
    const sections = resume.sections
        .map((section) => {
        const heading = section.heading_text || section.label;
        const entries = section.entries
            .map((entry) => {
            const org = entry.organization ? ` at ${escapeHtml(entry.organization)}` : "";
            const dates = entry.date_from !== null
                ? `<span class="dates">${escapeHtml(entry.date_from)} – ${escapeHtml(String(entry.date_to ?? ""))}</span>`
                : "";
            return `
            <div class="entry">
              <div class="entry-head"><strong>${escapeHtml(entry.title)}</strong>${org} ${dates}</div>
              <p>${escapeHtml(entry.description)}</p>
            </div>`;
        })
            .join("");
        const body = section.free_text ? `<p>${escapeHtml(section.free_text)}</p>` : "";
        return `
        <section class="resume-section" data-label="${escapeHtml(section.label)}">
          <h3>${escapeHtml(heading)} <span class="label-tag">${escapeHtml(section.label)}</span></h3>
          ${entries}${body}
        </section>`;
    })
        .join("");
    const commentBoxes = stages
        .map((stage) => `
      <div class="comment-row">
        <label for="comment-${escapeHtml(stage)}">${escapeHtml(stage)}</label>
        <input id="comment-${escapeHtml(stage)}" data-stage="${escapeHtml(stage)}"
               value="${escapeHtml(comments[stage] ?? "")}" placeholder="notes for ${escapeHtml(stage)}" />
        <button data-save-stage="${escapeHtml(stage)}">Save</button>
      </div>`)
        .join("");
    return `
    <article class="detail" data-detail="${escapeHtml(resume.candidate_id)}">
      <h2>${escapeHtml(resume.name)}</h2>
      <p>${escapeHtml(resume.headline ?? "")}${resume.location ? " — " + escapeHtml(resume.location) : ""}</p>
      <p class="contact">${contact}</p>
      ${sections}
      <h3>Interview comments</h3>
      <div class="comments">${commentBoxes}</div>
    </article>`;
}
export function scoreBarHtml(score) {
    const pct = Math.round(Math.min(1, Math.max(0, score)) * 100);
    return `
    <div class="bar-track"><div class="bar-fill" style="width:${pct}%"></div></div>
    <span class="bar-value mono">${score.toFixed(3)}</span>`;
}
export function rankingTableHtml(state, names) {
    const banner = state.error
        ? `<div class="banner banner-error" data-scorer-banner>${escapeHtml(state.error)}${state.stale ? " (results below are stale)" : ""}</div>`
        : "";
    if (state.ranked.length === 0) {
        return banner + `<p class="empty">No ranking yet. Paste a job description and run.</p>`;
    }
    const rows = state.ranked
        .map((c) => `
      <tr data-ranked="${escapeHtml(c.candidate_id)}" class="${state.stale ? "stale" : ""}">
        <td class="mono">${c.rank}</td>
        <td>${escapeHtml(names.get(c.candidate_id) ?? c.candidate_id)}</td>
        <td class="score-cell">${scoreBarHtml(c.score)}</td>
      </tr>`)
        .join("");
    return `${banner}
    <table class="table" data-ranking-table>
      <thead><tr><th>Rank</th><th>Candidate</th><th>Suitability</th></tr></thead>
      <tbody>${rows}</tbody>
    </table>`;
}
