/**
 * Landing flow: pick an area, pass the disclaimer gate, find a way in.
 *
 * The disclaimer must be accepted before the search form exists at all,
 * so nothing downstream is reachable around the gate. An empty search
 * falls back to browsing every starting point.
 */
import { ui } from "./i18n.js";
import type { AppState } from "./state.js";
import type { EntryPointDoc, GraphDoc } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const element = document.createElement(tag);
  for (const [name, value] of Object.entries(attrs)) element.setAttribute(name, value);
  element.append(...children);
  return element;
}

export function renderLanding(state: AppState): HTMLElement {
  const { lang } = state;
  const landing = el("section", { class: "landing" });
  landing.append(el("p", { class: "tagline" }, ui(lang, "tagline")));

  if (state.graphs === null) {
    landing.append(el("p", { class: "loading" }, `${ui(lang, "loading")}…`));
    return landing;
  }

  if (state.graphId === null) {
    landing.append(el("h2", {}, ui(lang, "chooseArea")));
    const list = el("ul", { class: "graph-list" });
    for (const graph of state.graphs) {
      list.append(
        el(
          "li",
          {},
          el(
            "button",
            { type: "button", "data-action": "select-graph", "data-graph-id": graph.id },
            graph.title[lang],
          ),
        ),
      );
    }
    landing.append(list);
    return landing;
  }

  const listing = state.graphs.find((g) => g.id === state.graphId);
  if (!listing) return landing;
  landing.append(el("h2", {}, listing.title[lang]));

  if (!state.disclaimerAccepted) {
    landing.append(el("aside", { class: "disclaimer", "data-disclaimer": "landing" }, listing.disclaimer[lang]));
    const controls = el("div", { class: "disclaimer-controls" });
    controls.append(
      el("button", { type: "button", "data-action": "accept-disclaimer" }, ui(lang, "acceptDisclaimer")),
      el("button", { type: "button", class: "secondary", "data-action": "decline-disclaimer" }, ui(lang, "declineDisclaimer")),
    );
    landing.append(controls);
    if (state.disclaimerDeclined) {
      landing.append(el("p", { class: "declined-note", role: "alert" }, ui(lang, "declinedNote")));
    }
    return landing;
  }

  const form = el("form", { class: "search-form", "data-form": "search" });
  const label = el("label", { for: "situation" }, ui(lang, "searchLegend"));
  const input = el("input", {
    id: "situation",
    type: "text",
    "data-search-input": "true",
    autocomplete: "off",
  });
  input.value = state.query;
  form.append(label, input, el("button", { type: "submit" }, ui(lang, "searchButton")));
  landing.append(form);
  landing.append(
    el("button", { type: "button", class: "link-button", "data-action": "browse-all" }, ui(lang, "browseAll")),
  );

  const doc = state.graphDoc;
  if (doc && state.matches !== null && !state.browsing) {
    if (state.matches.length === 0) {
      landing.append(el("p", { class: "no-matches" }, ui(lang, "noMatches")));
      landing.append(entryList(state, doc, doc.entryPoints));
    } else {
      const ranked: EntryPointDoc[] = [];
      for (const match of state.matches) {
        const entry = doc.entryPoints.find((e) => e.id === match.entryPointId);
        if (entry) ranked.push(entry);
      }
      landing.append(entryList(state, doc, ranked));
    }
  }
  if (doc && state.browsing) landing.append(entryList(state, doc, doc.entryPoints));
  return landing;
}

function entryList(state: AppState, doc: GraphDoc, entries: EntryPointDoc[]): HTMLElement {
  const { lang } = state;
  const list = el("ul", { class: "entry-list" });
  for (const entry of entries) {
    const node = doc.nodes.find((n) => n.id === entry.node);
    const item = el("li", { class: "entry" });
    item.append(el("p", { class: "entry-description" }, entry.description[lang]));
    if (node) item.append(el("p", { class: "entry-node" }, node.title[lang]));
    item.append(
      el(
        "button",
        { type: "button", "data-action": "start-journey", "data-entry-id": entry.id },
        ui(lang, "startHere"),
      ),
    );
    list.append(item);
  }
  return list;
}
