/** DOM glue: wires the form, results table, rating buttons and export
 * link to the API client and the pure state/render modules. */

import { ApiClient } from "./api.js";
import {
  renderEmptyState,
  renderExportSummary,
  renderModeOptions,
  renderResultRows,
} from "./render.js";
import {
  AppState,
  initialState,
  isValidRating,
  queryFailed,
  queryStarted,
  querySucceeded,
  ratingSaved,
  validateQuery,
} from "./state.js";

const client = new ApiClient();

const $ = <T extends HTMLElement>(id: string): T => {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing element #${id}`);
  return element as T;
};

const form = $<HTMLFormElement>("query-form");
const queryInput = $<HTMLInputElement>("query-input");
const projectSelect = $<HTMLSelectElement>("project-select");
const modeSelect = $<HTMLSelectElement>("mode-select");
const raterInput = $<HTMLInputElement>("rater-input");
const errorBanner = $<HTMLElement>("error-banner");
const resultsBody = $<HTMLElement>("results-body");
const emptyState = $<HTMLElement>("empty-state");
const exportButton = $<HTMLButtonElement>("export-button");
const exportSummary = $<HTMLElement>("export-summary");

let state: AppState = initialState();

function render(): void {
  errorBanner.textContent = state.error ?? "";
  errorBanner.hidden = state.error === null;
  resultsBody.innerHTML = renderResultRows(state.results, state.ratings).join("");
  emptyState.innerHTML = state.results.length === 0 ? renderEmptyState(state.noMatch, state.searched) : "";
  queryInput.value = state.queryText || queryInput.value;
}

async function bootstrap(): Promise<void> {
  try {
    const health = await client.health();
    projectSelect.innerHTML = health.projects
      .map((p) => `<option value="${p}">${p}</option>`)
      .join("");
    state = initialState(health.modes[0]?.id ?? "vsm_sa_tr");
    modeSelect.innerHTML = renderModeOptions(health.modes, state.mode).join("");
  } catch (error) {
    state = queryFailed(state, `server unreachable: ${String(error)}`);
    render();
  }
}

async function runQuery(): Promise<void> {
  const text = validateQuery(queryInput.value);
  if (text === null) {
    return; // client-side validation: no request for an empty query
  }
  state = queryStarted(state, text, modeSelect.value);
  render();
  try {
    const response = await client.query(projectSelect.value, text, state.mode);
    state = querySucceeded(state, response);
  } catch (error) {
    state = queryFailed(state, `query failed: ${String(error)}`);
  }
  render();
}

form.addEventListener("submit", (event) => {
  event.preventDefault();
  void runQuery();
});

modeSelect.addEventListener("change", () => {
  // Re-run the current query under the newly selected mode.
  if (validateQuery(queryInput.value) !== null && state.searched) {
    void runQuery();
  }
});

resultsBody.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  if (!target.classList.contains("rate")) {
    return;
  }
  const key = target.dataset.ref ?? "";
  const score = Number(target.dataset.score);
  if (!isValidRating(score)) {
    return;
  }
  const [project, bugId, commentId] = key.split(":");
  client
    .rate({
      rater_id: raterInput.value || "anonymous",
      query_text: state.queryText,
      ref: { project, bug_id: Number(bugId), comment_id: Number(commentId) },
      score,
    })
    .then(() => {
      // The widget reflects the persisted value only after the ack.
      state = ratingSaved(state, key, score);
      render();
    })
    .catch((error) => {
      // Rejected rating: widget keeps its previous value, error shown.
      state = { ...state, error: `rating rejected: ${String(error)}` };
      render();
    });
});

exportButton.addEventListener("click", () => {
  void client
    .exportRatings()
    .then((records) => {
      exportSummary.innerHTML = renderExportSummary(records);
      const blob = new Blob([JSON.stringify(records, null, 2)], { type: "application/json" });
      const link = document.createElement("a");
      link.href = URL.createObjectURL(blob);
      link.download = "ratings.json";
      link.click();
      URL.revokeObjectURL(link.href);
    })
    .catch((error) => {
      state = queryFailed(state, `export failed: ${String(error)}`);
      render();
    });
});

void bootstrap();
