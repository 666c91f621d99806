/** Typed client for the JSON API described in docs/api.md. */
export class ApiError extends Error {
    constructor(message, status) {
        super(message);
        this.status = status;
    }
}
async function asJson(response) {
    if (!response.ok) {
        const body = await response.text();
        throw new ApiError(`request failed with ${response.status}: ${body}`, response.status);
    }
    return (await response.json());
}
export class ApiClient {
    constructor(baseUrl = "", fetchFn = (input, init) => fetch(input, init)) {
        this.baseUrl = baseUrl;
        this.fetchFn = fetchFn;
    }
    health() {
        return this.get("/api/health");
    }
    query(project, queryText, mode, topK = 10) {
        return this.post("/api/query", {
            project,
            query_text: queryText,
            mode,
            top_k: topK,
        });
    }
    rate(rating) {
        return this.post("/api/ratings", rating).then(() => undefined);
    }
    exportRatings() {
        return this.get("/api/ratings/export");
    }
    get(path) {
        return this.fetchFn(this.baseUrl + path).then((r) => asJson(r));
    }
    post(path, body) {
        return this.fetchFn(this.baseUrl + path, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(body),
        }).then((r) => asJson(r));
    }
}
