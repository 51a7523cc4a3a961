// Render the composition state to an HTML string. Kept DOM-free so the
// tests can assert on markup without a browser.

import type { CompositionState } from "./state.js";
import { isAutoCommit } from "./state.js";

function escapeHtml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function render(state: CompositionState): string {
  const parts: string[] = [];

  parts.push(
    `<div class="committed">${escapeHtml(state.committedText)}` +
      `<span class="pending">${escapeHtml(state.pendingToken)}</span>` +
      `<span class="caret"></span></div>`,
  );

  if (state.banner !== null) {
    parts.push(`<div class="banner">${escapeHtml(state.banner)}</div>`);
  }

  if (state.candidates.length > 0) {
    const auto = isAutoCommit(state);
    const rows = state.candidates.map((c, i) => {
      const classes = ["candidate"];
      if (i === state.highlighted) classes.push("highlighted");
      if (c.source === "Fallback") classes.push("fallback");
      const markers: string[] = [];
      if (c.source === "Fallback") markers.push('<span class="marker">direct</span>');
      if (auto && i === 0) markers.push('<span class="marker">auto</span>');
      return (
        `<li class="${classes.join(" ")}">` +
        `<span class="rank">${i + 1}</span>` +
        `<span class="word">${escapeHtml(c.word)}</span>` +
        markers.join("") +
        `</li>`
      );
    });
    parts.push(`<ul class="candidates">${rows.join("")}</ul>`);
  }

  return parts.join("\n");
}
