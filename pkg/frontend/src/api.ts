/**
 * Typed client for the bibliorank HTTP API.
 *
 * The fetch implementation is injectable so component tests can run
 * against a scripted HTTP layer. Server error bodies ({"error": "..."})
 * surface verbatim as ApiError messages.
 */

export type Stratagem = "tfidf" | "bradford" | "bradford_mult" | "authcent";

export const STRATAGEMS: Stratagem[] = ["tfidf", "bradford", "bradford_mult", "authcent"];

export const STRATAGEM_LABELS: Record<Stratagem, string> = {
  tfidf: "TF-IDF",
  bradford: "Bradford",
  bradford_mult: "Bradford ×",
  authcent: "Author centrality",
};

export interface SearchResult {
  id: string;
  rank: number;
  score: number;
  title: string;
  authors: string[];
  journal: string;
  issn: string | null;
  zone?: string | null;
  author_centrality?: number;
  central_author?: string | null;
}

export interface SearchResponse {
  query: string;
  stratagem: Stratagem;
  total: number;
  limit: number;
  offset: number;
  timing: { search_ms: number; rerank_ms: number };
  results: SearchResult[];
}

export interface ZoneRow {
  issn: string;
  journal: string;
  yield: number;
  zone: string;
}

export interface GraphNode {
  author: string;
  betweenness: number;
}

export interface GraphPayload {
  nodes: GraphNode[];
  edges: [string, string][];
}

export interface DocumentRecord {
  id: string;
  title: string;
  abstract: string;
  keywords: string[];
  authors: string[];
  journal: string;
  issn: string | null;
  year: number | null;
}

export interface HealthResponse {
  status: string;
  doc_count: number;
}

export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

export type FetchLike = (input: string) => Promise<Response>;

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchFn = fetchFn ?? ((input) => fetch(input));
  }

  private async get<T>(path: string, params?: Record<string, string | number>): Promise<T> {
    let url = this.baseUrl + path;
    if (params) {
      const search = new URLSearchParams();
      for (const [key, value] of Object.entries(params)) {
        search.set(key, String(value));
      }
      url += `?${search.toString()}`;
    }
    let response: Response;
    try {
      response = await this.fetchFn(url);
    } catch (err) {
      throw new ApiError(0, `server unreachable: ${String(err)}`);
    }
    if (!response.ok) {
      let message = `HTTP ${response.status}`;
      try {
        const body = (await response.json()) as { error?: string };
        if (body && typeof body.error === "string") {
          message = body.error;
        }
      } catch {
        // non-JSON error body; keep the status message
      }
      throw new ApiError(response.status, message);
    }
    return (await response.json()) as T;
  }

  search(q: string, rank: Stratagem, page: number, limit: number): Promise<SearchResponse> {
    return this.get<SearchResponse>("/search", { q, rank, limit, offset: page * limit });
  }

  zones(q: string): Promise<ZoneRow[]> {
    return this.get<ZoneRow[]>("/zones", { q });
  }

  graph(q: string): Promise<GraphPayload> {
    return this.get<GraphPayload>("/graph", { q });
  }

  document(id: string): Promise<DocumentRecord> {
    return this.get<DocumentRecord>(`/documents/${encodeURIComponent(id)}`);
  }

  health(): Promise<HealthResponse> {
    return this.get<HealthResponse>("/health");
  }
}
