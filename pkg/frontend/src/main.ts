/** Browser bootstrap: wire the app to the real fetch, URL, and history. */

import { ApiClient } from "./api.js";
import { App } from "./app.js";

declare global {
  interface Window {
    BIBLIORANK_API?: string;
  }
}

const baseUrl = window.BIBLIORANK_API ?? "http://127.0.0.1:8080";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app container");
}

const app = new App({
  api: new ApiClient(baseUrl),
  root,
  onUrlChange: (queryString) => {
    const url = queryString || window.location.pathname;
    window.history.replaceState(null, "", url);
  },
});

void app.boot(window.location.search);
