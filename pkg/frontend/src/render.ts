/** HTML-string renderers. Rows are emitted strictly in the order the
 * server returned them; no client-side re-sorting anywhere. */

import type { ModeOption, RankedResult, RatingRecord } from "./api.js";
import { RATING_LABELS, RATING_SCALE, refKey } from "./state.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

export function ratingLabel(score: number): string {
  return RATING_LABELS[score] ?? String(score);
}

function ratingWidget(key: string, current: number | undefined): string {
  const buttons = RATING_SCALE.map((score) => {
    const pressed = current === score ? ' aria-pressed="true"' : "";
    return (
      `<button type="button" class="rate" data-ref="${escapeHtml(key)}" ` +
      `data-score="${score}"${pressed}>${score}</button>`
    );
  }).join("");
  const label = current === undefined ? "" : `<span class="rating-label">${ratingLabel(current)}</span>`;
  return `<span class="rating">${buttons}${label}</span>`;
}

export function renderResultRow(result: RankedResult, rating: number | undefined): string {
  const key = refKey(result);
  return (
    "<tr>" +
    `<td class="rank">${result.rank}</td>` +
    `<td class="bug"><a href="/api/bugs/${encodeURIComponent(result.project)}/${result.bug_id}">` +
    `${escapeHtml(result.project)}#${result.bug_id}</a></td>` +
    `<td class="comment">C${result.comment_id}</td>` +
    `<td class="score">${result.final_score.toFixed(4)}</td>` +
    `<td class="snippet">${escapeHtml(result.snippet)}</td>` +
    `<td>${ratingWidget(key, rating)}</td>` +
    "</tr>"
  );
}

/** One <tr> per result, in response order. */
export function renderResultRows(
  results: RankedResult[],
  ratings: Record<string, number>,
): string[] {
  return results.map((result) => renderResultRow(result, ratings[refKey(result)]));
}

export function renderModeOptions(modes: ModeOption[], selected: string): string[] {
  return modes.map((mode) => {
    const chosen = mode.id === selected ? " selected" : "";
    return `<option value="${escapeHtml(mode.id)}"${chosen}>${escapeHtml(mode.label)}</option>`;
  });
}

export function renderEmptyState(noMatch: boolean, searched: boolean): string {
  if (!searched) {
    return "";
  }
  if (noMatch) {
    return '<p class="empty">No matches: none of the query terms occur in the indexed comments.</p>';
  }
  return '<p class="empty">No results.</p>';
}

export function renderExportSummary(records: RatingRecord[]): string {
  if (records.length === 0) {
    return "<p>No ratings recorded yet.</p>";
  }
  const mean = records.reduce((acc, r) => acc + r.score, 0) / records.length;
  return `<p>${records.length} rating(s), mean score ${mean.toFixed(2)}.</p>`;
}
