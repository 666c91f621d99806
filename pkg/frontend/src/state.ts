/** Pure application state: query lifecycle and per-row rating display.
 *
 * The DOM layer applies these transitions and re-renders; nothing here
 * touches the document, so the invariants are testable under node.
 */

import type { QueryResponse, RankedResult, RatingRef } from "./api.js";

export const RATING_SCALE = [1, 2, 3, 4] as const;

export const RATING_LABELS: Record<number, string> = {
  1: "Not Relevant",
  2: "Somewhat Relevant",
  3: "Relevant",
  4: "Highly Relevant",
};

export function isValidRating(score: number): boolean {
  return Number.isInteger(score) && score >= 1 && score <= 4;
}

export function refKey(ref: RatingRef): string {
  return `${ref.project}:${ref.bug_id}:${ref.comment_id}`;
}

export interface AppState {
  queryText: string;
  mode: string;
  pending: boolean;
  results: RankedResult[];
  noMatch: boolean;
  searched: boolean;
  error: string | null;
  /** ref key -> latest acknowledged rating (latest-wins display rule). */
  ratings: Record<string, number>;
}

export function initialState(mode = "vsm_sa_tr"): AppState {
  return {
    queryText: "",
    mode,
    pending: false,
    results: [],
    noMatch: false,
    searched: false,
    error: null,
    ratings: {},
  };
}

/** Empty or whitespace-only queries are rejected client-side: no request. */
export function validateQuery(text: string): string | null {
  return text.trim().length > 0 ? text.trim() : null;
}

export function queryStarted(state: AppState, text: string, mode: string): AppState {
  return { ...state, queryText: text, mode, pending: true, error: null };
}

export function querySucceeded(state: AppState, response: QueryResponse): AppState {
  return {
    ...state,
    pending: false,
    results: response.results,
    noMatch: response.no_match,
    searched: true,
    error: null,
  };
}

/** A failed request keeps the query text (and previous rows) for refinement. */
export function queryFailed(state: AppState, message: string): AppState {
  return { ...state, pending: false, error: message };
}

export function ratingSaved(state: AppState, key: string, score: number): AppState {
  return { ...state, ratings: { ...state.ratings, [key]: score } };
}
