/**
 * The search application: one query box, four stratagems one click
 * apart, a paged result list, and lazy zone/graph inspection panels.
 *
 * One search may be in flight at a time; a newer submission wins and
 * stale responses are dropped. Server errors land in a banner with the
 * server's own message; the results list is left as it was.
 */

import type { ApiClient, GraphPayload, SearchResponse, Stratagem, ZoneRow } from "./api.js";
import { ApiError, STRATAGEM_LABELS, STRATAGEMS } from "./api.js";
import {
  renderDocument,
  renderGraph,
  renderResults,
  renderTiming,
  renderZones,
} from "./render.js";
import { PAGE_SIZE, UiState, initialState, parseQueryString, toQueryString } from "./state.js";

export interface AppOptions {
  api: ApiClient;
  root: HTMLElement;
  /** Receives the new query string whenever q/rank/page change. */
  onUrlChange?: (queryString: string) => void;
  pageSize?: number;
}

interface PanelCache {
  query: string | null;
  zones: ZoneRow[] | null;
  graph: GraphPayload | null;
}

export class App {
  readonly state: UiState;
  private readonly api: ApiClient;
  private readonly root: HTMLElement;
  private readonly onUrlChange: (queryString: string) => void;
  private readonly pageSize: number;
  private searchToken = 0;
  private panels: PanelCache = { query: null, zones: null, graph: null };

  constructor(options: AppOptions) {
    this.api = options.api;
    this.root = options.root;
    this.onUrlChange = options.onUrlChange ?? (() => {});
    this.pageSize = options.pageSize ?? PAGE_SIZE;
    this.state = initialState();
    this.mount();
  }

  private mount(): void {
    this.root.innerHTML = `
      <header class="topbar">
        <h1>bibliorank</h1>
        <span id="corpus-note" class="corpus-note"></span>
      </header>
      <form id="search-form">
        <input id="query-input" type="search" placeholder="Search the corpus…"
               autocomplete="off" />
        <button id="search-button" type="submit">Search</button>
        <span id="query-hint" class="query-hint" hidden>Enter a query first.</span>
      </form>
      <nav id="stratagem-bar" aria-label="ranking stratagem"></nav>
      <div id="error-banner" class="error-banner" hidden></div>
      <p id="timing-line" class="timing-line"></p>
      <section id="results" class="results"></section>
      <nav id="pager" class="pager" hidden>
        <button id="page-prev" type="button">‹ prev</button>
        <span id="page-label"></span>
        <button id="page-next" type="button">next ›</button>
      </nav>
      <div class="panel-buttons">
        <button id="btn-zones" type="button" disabled>Bradford zones</button>
        <button id="btn-graph" type="button" disabled>Co-author graph</button>
      </div>
      <section id="zones-panel" class="panel" hidden></section>
      <section id="graph-panel" class="panel" hidden></section>
      <section id="doc-panel" class="panel" hidden></section>
    `;

    const bar = this.q("#stratagem-bar");
    for (const mode of STRATAGEMS) {
      const button = document.createElement("button");
      button.type = "button";
      button.className = "stratagem-btn";
      button.dataset.mode = mode;
      button.textContent = STRATAGEM_LABELS[mode];
      button.disabled = true;
      button.addEventListener("click", () => void this.switchStratagem(mode));
      bar.append(button);
    }

    this.q<HTMLFormElement>("#search-form").addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submitQuery(this.q<HTMLInputElement>("#query-input").value, this.state.stratagem);
    });
    this.q("#page-prev").addEventListener("click", () => void this.changePage(-1));
    this.q("#page-next").addEventListener("click", () => void this.changePage(1));
    this.q("#btn-zones").addEventListener("click", () => void this.toggleZones());
    this.q("#btn-graph").addEventListener("click", () => void this.toggleGraph());
    this.q("#results").addEventListener("click", (event) => {
      const row = (event.target as HTMLElement).closest<HTMLElement>(".result-row");
      if (row?.dataset.docId) {
        void this.selectDocument(row.dataset.docId);
      }
    });
  }

  private q<T extends HTMLElement = HTMLElement>(selector: string): T {
    const node = this.root.querySelector<T>(selector);
    if (!node) {
      throw new Error(`missing element: ${selector}`);
    }
    return node;
  }

  /** Start from a location.search string; runs the search when q is set. */
  async boot(queryString: string): Promise<void> {
    const { query, stratagem, page } = parseQueryString(queryString);
    this.api
      .health()
      .then((health) => {
        this.q("#corpus-note").textContent = `${health.doc_count} documents`;
      })
      .catch(() => {
        this.q("#corpus-note").textContent = "service unreachable";
      });
    if (query) {
      this.q<HTMLInputElement>("#query-input").value = query;
      await this.runSearch(query, stratagem, page, null);
    }
  }

  async submitQuery(text: string, stratagem: Stratagem): Promise<void> {
    const trimmed = text.trim();
    if (!trimmed) {
      this.q("#query-hint").hidden = false;
      return;
    }
    this.q("#query-hint").hidden = true;
    await this.runSearch(trimmed, stratagem, 0, null);
  }

  async switchStratagem(mode: Stratagem): Promise<void> {
    if (!this.state.lastResponse || mode === this.state.stratagem) {
      return;
    }
    const previous = this.rankIndex(this.state.lastResponse);
    await this.runSearch(this.state.query, mode, 0, previous);
  }

  async changePage(delta: number): Promise<void> {
    const response = this.state.lastResponse;
    if (!response) {
      return;
    }
    const lastPage = Math.max(0, Math.ceil(response.total / this.pageSize) - 1);
    const target = Math.min(lastPage, Math.max(0, this.state.page + delta));
    if (target === this.state.page) {
      return;
    }
    await this.runSearch(this.state.query, this.state.stratagem, target, null);
  }

  private rankIndex(response: SearchResponse): Map<string, number> {
    return new Map(response.results.map((result) => [result.id, result.rank]));
  }

  private async runSearch(
    query: string,
    stratagem: Stratagem,
    page: number,
    previousRanks: Map<string, number> | null,
  ): Promise<void> {
    const token = ++this.searchToken;
    let response: SearchResponse;
    try {
      response = await this.api.search(query, stratagem, page, this.pageSize);
    } catch (err) {
      if (token === this.searchToken) {
        this.showError(err);
      }
      return;
    }
    if (token !== this.searchToken) {
      return; // a newer search superseded this one
    }
    this.hideError();
    this.state.query = query;
    this.state.stratagem = stratagem;
    this.state.page = page;
    this.state.lastResponse = response;
    this.state.selectedDoc = null;
    if (this.panels.query !== query) {
      this.panels = { query, zones: null, graph: null };
    }

    renderResults(this.q("#results"), response, previousRanks);
    renderTiming(this.q("#timing-line"), response);
    this.renderPager(response);
    this.syncControls();
    this.q("#doc-panel").hidden = true;
    if (this.state.zonesOpen) {
      await this.loadZones();
    }
    if (this.state.graphOpen) {
      await this.loadGraph();
    }
    this.onUrlChange(toQueryString(query, stratagem, page));
  }

  private renderPager(response: SearchResponse): void {
    const pager = this.q("#pager");
    const pages = Math.max(1, Math.ceil(response.total / this.pageSize));
    pager.hidden = response.total <= this.pageSize;
    this.q("#page-label").textContent = `page ${this.state.page + 1} of ${pages}`;
    (this.q("#page-prev") as HTMLButtonElement).disabled = this.state.page === 0;
    (this.q("#page-next") as HTMLButtonElement).disabled = this.state.page >= pages - 1;
  }

  private syncControls(): void {
    for (const button of this.root.querySelectorAll<HTMLButtonElement>(".stratagem-btn")) {
      button.disabled = this.state.lastResponse === null;
      button.classList.toggle("active", button.dataset.mode === this.state.stratagem);
    }
    (this.q("#btn-zones") as HTMLButtonElement).disabled = this.state.lastResponse === null;
    (this.q("#btn-graph") as HTMLButtonElement).disabled = this.state.lastResponse === null;
  }

  private showError(err: unknown): void {
    const banner = this.q("#error-banner");
    banner.textContent = err instanceof ApiError ? err.message : String(err);
    banner.hidden = false;
  }

  private hideError(): void {
    const banner = this.q("#error-banner");
    banner.hidden = true;
    banner.textContent = "";
  }

  private async toggleZones(): Promise<void> {
    this.state.zonesOpen = !this.state.zonesOpen;
    this.q("#zones-panel").hidden = !this.state.zonesOpen;
    if (this.state.zonesOpen) {
      await this.loadZones();
    }
  }

  private async toggleGraph(): Promise<void> {
    this.state.graphOpen = !this.state.graphOpen;
    this.q("#graph-panel").hidden = !this.state.graphOpen;
    if (this.state.graphOpen) {
      await this.loadGraph();
    }
  }

  private async loadZones(): Promise<void> {
    if (this.panels.zones === null) {
      try {
        this.panels.zones = await this.api.zones(this.state.query);
      } catch (err) {
        this.showError(err);
        return;
      }
    }
    renderZones(this.q("#zones-panel"), this.panels.zones);
  }

  private async loadGraph(): Promise<void> {
    if (this.panels.graph === null) {
      try {
        this.panels.graph = await this.api.graph(this.state.query);
      } catch (err) {
        this.showError(err);
        return;
      }
    }
    renderGraph(this.q("#graph-panel"), this.panels.graph);
  }

  private async selectDocument(id: string): Promise<void> {
    let record;
    try {
      record = await this.api.document(id);
    } catch (err) {
      this.showError(err);
      return;
    }
    this.state.selectedDoc = id;
    const panel = this.q("#doc-panel");
    renderDocument(panel, record);
    panel.hidden = false;
  }
}
