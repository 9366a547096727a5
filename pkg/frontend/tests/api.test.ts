import { describe, expect, it } from "vitest";

import { ApiError } from "../src/api.js";
import { FakeHttp, json } from "./helpers.js";

describe("api client", () => {
  it("builds search urls with paging offsets", async () => {
    const http = new FakeHttp();
    http.route("/search", () =>
      json(200, {
        query: "law", stratagem: "tfidf", total: 0, limit: 20, offset: 40,
        timing: { search_ms: 0, rerank_ms: 0 }, results: [],
      }),
    );
    await http.client().search("law", "tfidf", 2, 20);
    const call = http.searchCalls()[0];
    expect(call.searchParams.get("offset")).toBe("40");
    expect(call.searchParams.get("limit")).toBe("20");
  });

  it("surfaces the server error message verbatim", async () => {
    const http = new FakeHttp();
    http.route("/search", () => json(400, { error: "unknown rank: 'nope'" }));
    await expect(http.client().search("law", "tfidf", 0, 20)).rejects.toThrowError(
      "unknown rank: 'nope'",
    );
  });

  it("keeps the status code on the error", async () => {
    const http = new FakeHttp();
    http.route("/graph", () => json(503, { error: "too large" }));
    const failure = await http.client().graph("law").catch((err) => err);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(503);
  });

  it("escapes document ids", async () => {
    const http = new FakeHttp();
    http.route("/documents/a%2Fb", () =>
      json(200, {
        id: "a/b", title: "", abstract: "", keywords: [], authors: [],
        journal: "", issn: null, year: null,
      }),
    );
    const record = await http.client().document("a/b");
    expect(record.id).toBe("a/b");
  });
});
