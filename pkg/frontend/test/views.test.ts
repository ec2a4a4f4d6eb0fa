import assert from "node:assert/strict";
import { test } from "node:test";

import { CandidateSummary, ResumeData } from "../src/api.js";
import { RankingState } from "../src/state.js";
import {
  candidateTableHtml,
  detailHtml,
  escapeHtml,
  rankingTableHtml,
  scoreBarHtml,
  uploadOutcomeHtml,
} from "../src/views.js";

const summary = (overrides: Partial<CandidateSummary> = {}): CandidateSummary => ({
  candidate_id: "abc123",
  name: "Jane Doe",
  headline: "Engineer",
  verdict: "LinkedInFormat",
  filename: "jane.xml",
  ...overrides,
});

test("escapeHtml neutralizes markup", () => {
  assert.equal(
    escapeHtml(`<script>alert("x")</script>`),
    "&lt;script&gt;alert(&quot;x&quot;)&lt;/script&gt;",
  );
});

test("candidate table renders one row per candidate", () => {
  const html = candidateTableHtml([summary(), summary({ candidate_id: "def", name: "Wei Chen" })]);
  assert.equal((html.match(/data-candidate=/g) ?? []).length, 2);
  assert.ok(html.includes("Jane Doe"));
  assert.ok(html.includes("Wei Chen"));
});

test("candidate table empty state", () => {
  assert.ok(candidateTableHtml([]).includes("No resumes uploaded yet"));
});

test("candidate names are escaped", () => {
  const html = candidateTableHtml([summary({ name: "<b>bold</b>" })]);
  assert.ok(!html.includes("<b>bold</b>"));
  assert.ok(html.includes("&lt;b&gt;bold&lt;/b&gt;"));
});

test("upload outcomes render ok chips and error chips", () => {
  const html = uploadOutcomeHtml([
    { filename: "a.xml", candidateId: "x", verdict: "Generic", error: null },
    { filename: "b.xml", candidateId: null, verdict: null, error: "XML parse failure" },
  ]);
  assert.equal((html.match(/chip-ok/g) ?? []).length, 1);
  assert.equal((html.match(/chip-error/g) ?? []).length, 1);
  assert.ok(html.includes("XML parse failure"));
});

test("score bar width tracks the score and clamps", () => {
  assert.ok(scoreBarHtml(0.37).includes("width:37%"));
  assert.ok(scoreBarHtml(1.4).includes("width:100%"));
  assert.ok(scoreBarHtml(-3).includes("width:0%"));
});

test("ranking table shows rows in response order", () => {
  const state: RankingState = {
    ranked: [
      { candidate_id: "a", score: 0.9, rank: 1 },
      { candidate_id: "b", score: 0.4, rank: 2 },
    ],
    error: null,
    stale: false,
    inFlight: false,
  };
  const html = rankingTableHtml(state, new Map([["a", "Ada"], ["b", "Bo"]]));
  assert.ok(html.indexOf('data-ranked="a"') < html.indexOf('data-ranked="b"'));
  assert.ok(html.includes("Ada"));
  assert.ok(!html.includes("data-scorer-banner"));
});

test("scorer-down banner renders and flags stale rows", () => {
  const state: RankingState = {
    ranked: [{ candidate_id: "a", score: 0.9, rank: 1 }],
    error: "Scorer unavailable; showing stale results.",
    stale: true,
    inFlight: false,
  };
  const html = rankingTableHtml(state, new Map());
  assert.ok(html.includes("data-scorer-banner"));
  assert.ok(html.includes("Scorer unavailable"));
  assert.ok(html.includes('class="stale"'));
});

test("detail renders sections, labels, and one comment box per stage", () => {
  const resume: ResumeData = {
    candidate_id: "abc",
    name: "Jane Doe",
    headline: "Engineer",
    location: "Austin",
    contact: { email: "jane@example.com" },
    provenance: "jane.xml",
    sections: [
      {
        label: "Experience",
        heading_text: "Experience",
        free_text: "",
        entries: [
          {
            title: "Engineer",
            organization: "Acme",
            date_from: "2019-01",
            date_to: "present",
            duration_text: null,
            description: "Built things.",
          },
        ],
      },
      { label: "Skills", heading_text: "Skills", free_text: "Python, Go", entries: [] },
    ],
  };
  const html = detailHtml(resume, ["screening", "final"], { screening: "looks strong" });
  assert.equal((html.match(/data-save-stage=/g) ?? []).length, 2);
  assert.ok(html.includes('value="looks strong"'));
  assert.ok(html.includes('data-label="Experience"'));
  assert.ok(html.includes("jane@example.com"));
  assert.ok(html.includes("Built things."));
});
