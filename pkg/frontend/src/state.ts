/**
 * UI state and its query-string projection.
 *
 * `q`, `rank`, and `page` live in the URL so any search is shareable;
 * everything else (panel visibility, cached responses) is ephemeral.
 */

import type { SearchResponse, Stratagem } from "./api.js";
import { STRATAGEMS } from "./api.js";

export const PAGE_SIZE = 20;

export interface UiState {
  query: string;
  stratagem: Stratagem;
  page: number;
  lastResponse: SearchResponse | null;
  selectedDoc: string | null;
  zonesOpen: boolean;
  graphOpen: boolean;
}

export function initialState(): UiState {
  return {
    query: "",
    stratagem: "tfidf",
    page: 0,
    lastResponse: null,
    selectedDoc: null,
    zonesOpen: false,
    graphOpen: false,
  };
}

export function isStratagem(value: string): value is Stratagem {
  return (STRATAGEMS as string[]).includes(value);
}

/** Build the shareable query string for a search (empty when idle). */
export function toQueryString(query: string, stratagem: Stratagem, page: number): string {
  if (!query) {
    return "";
  }
  const params = new URLSearchParams();
  params.set("q", query);
  if (stratagem !== "tfidf") {
    params.set("rank", stratagem);
  }
  if (page > 0) {
    params.set("page", String(page));
  }
  return `?${params.toString()}`;
}

/** Parse a location.search string back into search parameters. */
export function parseQueryString(search: string): {
  query: string;
  stratagem: Stratagem;
  page: number;
} {
  const params = new URLSearchParams(search.startsWith("?") ? search.slice(1) : search);
  const rawRank = params.get("rank") ?? "tfidf";
  const rawPage = Number.parseInt(params.get("page") ?? "0", 10);
  return {
    query: params.get("q") ?? "",
    stratagem: isStratagem(rawRank) ? rawRank : "tfidf",
    page: Number.isFinite(rawPage) && rawPage > 0 ? rawPage : 0,
  };
}
