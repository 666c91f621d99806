/** Pure application state: query lifecycle and per-row rating display.
 *
 * The DOM layer applies these transitions and re-renders; nothing here
 * touches the document, so the invariants are testable under node.
 */
export const RATING_SCALE = [1, 2, 3, 4];
export const RATING_LABELS = {
    1: "Not Relevant",
    2: "Somewhat Relevant",
    3: "Relevant",
    4: "Highly Relevant",
};
export function isValidRating(score) {
    return Number.isInteger(score) && score >= 1 && score <= 4;
}
export function refKey(ref) {
    return `${ref.project}:${ref.bug_id}:${ref.comment_id}`;
}
export function initialState(mode = "vsm_sa_tr") {
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
export function validateQuery(text) {
    return text.trim().length > 0 ? text.trim() : null;
}
export function queryStarted(state, text, mode) {
    return { ...state, queryText: text, mode, pending: true, error: null };
}
export function querySucceeded(state, response) {
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
export function queryFailed(state, message) {
    return { ...state, pending: false, error: message };
}
export function ratingSaved(state, key, score) {
    return { ...state, ratings: { ...state.ratings, [key]: score } };
}
