/**
 * DOM builders for the results list and the inspection panels.
 *
 * Rendering never reorders or filters what the server sent: the row
 * order in the DOM is exactly the response order.
 */

import type { DocumentRecord, GraphPayload, SearchResponse, ZoneRow } from "./api.js";

export const MOVEMENT_THRESHOLD = 5;
export const GRAPH_TABLE_FALLBACK_EDGES = 2000;

const ZONE_LABELS: Record<string, string> = {
  core: "Core",
  zone2: "Zone 2",
  zone3: "Zone 3",
};

export function zoneLabel(zone: string | null | undefined): string {
  return zone ? ZONE_LABELS[zone] ?? zone : "no ISSN";
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

/**
 * Render the ranked page. `previousRanks` holds rank-by-id from the
 * previously displayed stratagem (same query); documents whose rank
 * moved by MOVEMENT_THRESHOLD or more get a diff marker.
 */
export function renderResults(
  container: HTMLElement,
  response: SearchResponse,
  previousRanks: Map<string, number> | null,
): void {
  container.textContent = "";
  if (response.results.length === 0) {
    container.append(el("p", "empty-note", "No documents matched."));
    return;
  }
  for (const result of response.results) {
    const row = el("article", "result-row");
    row.dataset.docId = result.id;

    const head = el("div", "result-head");
    head.append(el("span", "result-rank", `#${result.rank}`));
    head.append(el("span", "result-title", result.title || "(untitled)"));

    if (previousRanks && previousRanks.has(result.id)) {
      const moved = (previousRanks.get(result.id) ?? 0) - result.rank;
      if (Math.abs(moved) >= MOVEMENT_THRESHOLD) {
        const marker = el(
          "span",
          "movement-marker",
          moved > 0 ? `▲ ${moved}` : `▼ ${-moved}`,
        );
        marker.title = "rank change versus the previous stratagem";
        head.append(marker);
      }
    }
    row.append(head);

    const meta = el("div", "result-meta");
    meta.append(el("span", "result-authors", result.authors.join("; ") || "no authors"));
    if (result.journal || result.issn) {
      meta.append(el("span", "result-journal", result.journal || result.issn || ""));
    }
    if (result.zone !== undefined) {
      const badge = el("span", `zone-badge zone-${result.zone ?? "none"}`, zoneLabel(result.zone));
      meta.append(badge);
    }
    if (result.author_centrality !== undefined) {
      const text = result.central_author
        ? `${result.central_author} · C_B ${result.author_centrality.toFixed(2)}`
        : "no connected author";
      meta.append(el("span", "centrality-note", text));
    }
    meta.append(el("span", "result-score", `score ${result.score.toFixed(3)}`));
    row.append(meta);
    container.append(row);
  }
}

export function renderTiming(target: HTMLElement, response: SearchResponse): void {
  const { search_ms, rerank_ms } = response.timing;
  target.textContent =
    `${response.total} documents · base ${search_ms.toFixed(1)} ms · ` +
    `re-rank ${rerank_ms.toFixed(1)} ms`;
}

export function renderZones(container: HTMLElement, rows: ZoneRow[]): void {
  container.textContent = "";
  if (rows.length === 0) {
    container.append(el("p", "empty-note", "No ISSN-bearing documents in this result set."));
    return;
  }
  const table = el("table", "zone-table");
  const head = el("tr");
  for (const column of ["ISSN", "Journal", "Yield", "Zone"]) {
    head.append(el("th", undefined, column));
  }
  table.append(head);
  for (const row of rows) {
    const tr = el("tr", "zone-row");
    tr.append(el("td", undefined, row.issn));
    tr.append(el("td", undefined, row.journal));
    tr.append(el("td", undefined, String(row.yield)));
    tr.append(el("td", `zone-badge zone-${row.zone}`, zoneLabel(row.zone)));
    table.append(tr);
  }
  container.append(table);
}

/**
 * Graph panel: adjacency listing with betweenness values, falling back
 * to a plain author table (no neighbor lists) on very large graphs.
 */
export function renderGraph(container: HTMLElement, payload: GraphPayload): void {
  container.textContent = "";
  if (payload.nodes.length === 0) {
    container.append(el("p", "empty-note", "No authors in this result set."));
    return;
  }
  const neighbors = new Map<string, string[]>();
  const tableOnly = payload.edges.length > GRAPH_TABLE_FALLBACK_EDGES;
  if (!tableOnly) {
    for (const [a, b] of payload.edges) {
      (neighbors.get(a) ?? neighbors.set(a, []).get(a)!).push(b);
      (neighbors.get(b) ?? neighbors.set(b, []).get(b)!).push(a);
    }
  }
  const byCentrality = [...payload.nodes].sort(
    (x, y) => y.betweenness - x.betweenness || x.author.localeCompare(y.author),
  );
  const note = tableOnly
    ? `${payload.nodes.length} authors, ${payload.edges.length} edges (table view)`
    : `${payload.nodes.length} authors, ${payload.edges.length} edges`;
  container.append(el("p", "graph-note", note));
  const list = el("ul", "graph-list");
  for (const node of byCentrality) {
    const item = el("li", "graph-node");
    item.append(el("span", "graph-author", node.author));
    item.append(el("span", "graph-betweenness", node.betweenness.toFixed(2)));
    if (!tableOnly) {
      const adj = neighbors.get(node.author) ?? [];
      item.append(el("span", "graph-neighbors", adj.length ? `with ${adj.join(", ")}` : "isolated"));
    }
    list.append(item);
  }
  container.append(list);
}

export function renderDocument(container: HTMLElement, record: DocumentRecord): void {
  container.textContent = "";
  container.append(el("h3", "doc-title", record.title || "(untitled)"));
  container.append(el("p", "doc-authors", record.authors.join("; ") || "no authors"));
  const venue = [record.journal, record.issn, record.year ? String(record.year) : ""]
    .filter(Boolean)
    .join(" · ");
  if (venue) {
    container.append(el("p", "doc-venue", venue));
  }
  if (record.abstract) {
    container.append(el("p", "doc-abstract", record.abstract));
  }
  if (record.keywords.length) {
    container.append(el("p", "doc-keywords", record.keywords.join(", ")));
  }
}
