/** Scripted HTTP layer and response builders for component tests. */

import { ApiClient, SearchResponse, SearchResult, Stratagem } from "../src/api.js";

export type RouteHandler = (url: URL) => Promise<Response> | Response;

export class FakeHttp {
  /** Every requested URL, in order. */
  readonly calls: URL[] = [];
  private readonly routes = new Map<string, RouteHandler>();

  route(path: string, handler: RouteHandler): void {
    this.routes.set(path, handler);
  }

  fetch = async (input: string): Promise<Response> => {
    const url = new URL(input);
    this.calls.push(url);
    const handler = this.routes.get(url.pathname);
    if (!handler) {
      return json(404, { error: `no route for ${url.pathname}` });
    }
    return handler(url);
  };

  client(): ApiClient {
    return new ApiClient("http://testserver", this.fetch);
  }

  searchCalls(): URL[] {
    return this.calls.filter((url) => url.pathname === "/search");
  }
}

export function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function searchResponse(
  ids: string[],
  options: Partial<SearchResponse> & { stratagem?: Stratagem } = {},
): SearchResponse {
  const results: SearchResult[] = ids.map((id, position) => ({
    id,
    rank: position + 1,
    score: ids.length - position,
    title: `Title of ${id}`,
    authors: [`Author ${id}`],
    journal: "Journal of Testing",
    issn: "1111-1111",
    ...(options.stratagem === "bradford" || options.stratagem === "bradford_mult"
      ? { zone: "core" }
      : {}),
    ...(options.stratagem === "authcent"
      ? { author_centrality: 1.5, central_author: `Author ${id}` }
      : {}),
  }));
  return {
    query: "law",
    stratagem: options.stratagem ?? "tfidf",
    total: options.total ?? ids.length,
    limit: options.limit ?? 20,
    offset: options.offset ?? 0,
    timing: { search_ms: 1.0, rerank_ms: 0.5 },
    results,
    ...options,
    ...(options.results ? { results: options.results } : {}),
  };
}

export function mountPoint(): HTMLElement {
  document.body.innerHTML = '<div id="app"></div>';
  return document.getElementById("app") as HTMLElement;
}

export function renderedIds(root: HTMLElement): string[] {
  return [...root.querySelectorAll<HTMLElement>(".result-row")].map(
    (row) => row.dataset.docId ?? "",
  );
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
