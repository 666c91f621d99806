import assert from "node:assert/strict";
import { test } from "node:test";
import { ApiClient, ApiError } from "../src/api.js";
function jsonResponse(body, status = 200) {
    return new Response(JSON.stringify(body), {
        status,
        headers: { "content-type": "application/json" },
    });
}
test("query posts the request body to /api/query", async () => {
    const calls = [];
    const client = new ApiClient("", async (url, init) => {
        calls.push({ url, init });
        return jsonResponse({ results: [], no_match: true, elapsed_ms: 1.0 });
    });
    const response = await client.query("mini", "border render glitch", "vsm_sa", 5);
    assert.equal(calls.length, 1);
    assert.equal(calls[0].url, "/api/query");
    assert.deepEqual(JSON.parse(String(calls[0].init?.body)), {
        project: "mini",
        query_text: "border render glitch",
        mode: "vsm_sa",
        top_k: 5,
    });
    assert.equal(response.no_match, true);
});
test("non-2xx responses raise ApiError with the status", async () => {
    const client = new ApiClient("", async () => jsonResponse({ detail: "nope" }, 422));
    await assert.rejects(() => client.rate({ rater_id: "p", query_text: "q", ref: { project: "m", bug_id: 1, comment_id: 0 }, score: 4 }), (error) => error instanceof ApiError && error.status === 422);
});
test("rating round-trip: appended ratings come back from export in order", async () => {
    // Contract-shaped fake server: POST /api/ratings appends, GET export lists.
    const stored = [];
    const client = new ApiClient("", async (url, init) => {
        if (url === "/api/ratings" && init?.method === "POST") {
            const rating = JSON.parse(String(init.body));
            stored.push({ ...rating, rated_at: 1000 + stored.length });
            return jsonResponse({ status: "ok", total: stored.length });
        }
        if (url === "/api/ratings/export") {
            return jsonResponse(stored);
        }
        throw new Error(`unexpected request ${url}`);
    });
    const ref = { project: "mini", bug_id: 1020, comment_id: 2 };
    for (const score of [4, 3, 3, 4]) {
        await client.rate({ rater_id: "p1", query_text: "q", ref, score });
    }
    const exported = await client.exportRatings();
    assert.deepEqual(exported.map((r) => r.score), [4, 3, 3, 4]);
    const mean = exported.reduce((acc, r) => acc + r.score, 0) / exported.length;
    assert.equal(mean, 3.5);
});
test("health hits /api/health and surfaces blind mode options", async () => {
    const client = new ApiClient("", async (url) => {
        assert.equal(url, "/api/health");
        return jsonResponse({
            status: "ok",
            projects: ["mini"],
            blind: true,
            modes: [
                { id: "vsm_sa_tr", label: "Tool A" },
                { id: "vsm", label: "Tool B" },
            ],
        });
    });
    const health = await client.health();
    assert.equal(health.blind, true);
    assert.deepEqual(health.modes.map((m) => m.label), ["Tool A", "Tool B"]);
});
