/**
 * Composition root: one store, one delegated event listener, one render.
 *
 * Mutations (step, rewind, create) go through a single gate that keeps at
 * most one request in flight and swaps the whole journey for the server's
 * answer. The UI never decides enablement: a disabled option is inert
 * because its payload says so, and a server 409 lands back beside the
 * option that caused it.
 */
import { ApiClient, ApiError, type FetchLike } from "./api.js";
import { legendLabel, ui } from "./i18n.js";
import { renderLanding } from "./landing.js";
import { renderMap } from "./map.js";
import { renderPanel } from "./panel.js";
import { loadSession, saveSession } from "./persist.js";
import { initialState, pruneUnfolded, type AppState, type ZoomLevel } from "./state.js";
import { Store } from "./store.js";
import type { JourneyResponse, Lang } from "./types.js";

export interface AppOptions {
  baseUrl?: string;
  storage?: Storage;
  fetchImpl?: FetchLike;
}

export interface Actions {
  boot(): Promise<void>;
  selectGraph(graphId: string): Promise<void>;
  acceptDisclaimer(): void;
  declineDisclaimer(): void;
  runSearch(query: string): Promise<void>;
  browseAll(): void;
  startJourney(entryPointId: string): Promise<void>;
  choose(choice: string): Promise<void>;
  changeChoice(stepIndex: number): Promise<void>;
  toggleBlock(stepIndex: number): void;
  toggleDetail(key: string): void;
  toggleLang(): void;
  setZoom(zoom: ZoomLevel): void;
  startOver(): void;
}

export interface AppHandles {
  store: Store<AppState>;
  actions: Actions;
  destroy(): void;
}

export function createApp(root: HTMLElement, options: AppOptions = {}): AppHandles {
  const storage = options.storage ?? window.localStorage;
  const api = new ApiClient(options.baseUrl ?? "", options.fetchImpl);
  const store = new Store<AppState>(initialState());

  function persist(): void {
    const state = store.get();
    saveSession(
      storage,
      state.journey && state.graphId
        ? { lang: state.lang, graphId: state.graphId, zoom: state.zoom, journey: state.journey.journey }
        : null,
    );
  }

  async function mutate(run: () => Promise<JourneyResponse>): Promise<void> {
    if (store.get().pending) return;
    store.patch({ pending: true, failure: null, banner: null });
    try {
      const response = await run();
      store.patch({
        pending: false,
        journey: response,
        screen: "journey",
        unfolded: pruneUnfolded(store.get().unfolded, response.journey.steps.length),
        expanded: {},
      });
      persist();
    } catch (error) {
      store.patch({ pending: false });
      throw error;
    }
  }

  const actions: Actions = {
    async boot() {
      const saved = loadSession(storage);
      if (saved) store.patch({ lang: saved.lang, zoom: saved.zoom });
      const graphs = await api.listGraphs();
      store.patch({ graphs });

      if (saved) {
        try {
          const graphDoc = await api.graphDocument(saved.graphId);
          const restored = await api.rewind(saved.journey, saved.journey.steps.length);
          store.patch({
            graphId: saved.graphId,
            graphDoc,
            disclaimerAccepted: true,
            journey: restored,
            screen: "journey",
          });
          return;
        } catch {
          // The stored journey no longer binds to a served graph.
          saveSession(storage, null);
          store.patch({ banner: ui(store.get().lang, "staleSession") });
        }
      }
      if (graphs.length === 1) await actions.selectGraph((graphs[0] as { id: string }).id);
    },

    async selectGraph(graphId) {
      store.patch({ graphId, matches: null, browsing: false, query: "" });
      const graphDoc = await api.graphDocument(graphId);
      // Stale answer: the user may have picked another area meanwhile.
      if (store.get().graphId === graphId) store.patch({ graphDoc });
    },

    acceptDisclaimer() {
      store.patch({ disclaimerAccepted: true, disclaimerDeclined: false });
    },

    declineDisclaimer() {
      store.patch({ disclaimerAccepted: false, disclaimerDeclined: true });
    },

    async runSearch(query) {
      const { graphId, lang } = store.get();
      if (!graphId) return;
      store.patch({ query, browsing: false });
      const result = await api.search(graphId, query, lang);
      store.patch({ matches: result.matches });
    },

    browseAll() {
      store.patch({ browsing: true, matches: null });
    },

    async startJourney(entryPointId) {
      const { graphId, lang } = store.get();
      if (!graphId) return;
      await mutate(() => api.createJourney(graphId, entryPointId, lang));
    },

    async choose(choice) {
      const state = store.get();
      const journey = state.journey;
      if (!journey || !journey.options) return;
      const option = journey.options.find((o) => o.choice === choice);
      if (option && !option.enabled) {
        // The payload already says no; surface its reason without a request.
        store.patch({ failure: { choice, detail: option.label[state.lang], reason: option.reason } });
        return;
      }
      try {
        await mutate(() => api.step(journey.journey, choice));
      } catch (error) {
        if (error instanceof ApiError) {
          store.patch({ failure: { choice, detail: error.detail, reason: error.reason } });
          return;
        }
        throw error;
      }
    },

    async changeChoice(stepIndex) {
      const journey = store.get().journey;
      if (!journey) return;
      await mutate(() => api.rewind(journey.journey, stepIndex));
    },

    toggleBlock(stepIndex) {
      const unfolded = { ...store.get().unfolded };
      unfolded[stepIndex] = !(unfolded[stepIndex] === true);
      store.patch({ unfolded });
    },

    toggleDetail(key) {
      const expanded = { ...store.get().expanded };
      expanded[key] = !(expanded[key] === true);
      store.patch({ expanded });
    },

    toggleLang() {
      const lang: Lang = store.get().lang === "en" ? "cy" : "en";
      store.patch({ lang });
      persist();
    },

    setZoom(zoom) {
      store.patch({ zoom });
      persist();
    },

    startOver() {
      saveSession(storage, null);
      const graphs = store.get().graphs;
      const lang = store.get().lang;
      store.set({ ...initialState(), lang, graphs });
    },
  };

  function onClick(event: Event): void {
    const target = (event.target as Element).closest("[data-action]");
    if (!target || !root.contains(target)) return;
    const action = target.getAttribute("data-action");
    if (action === "toggle-block") event.preventDefault();
    if (store.get().pending) return;

    switch (action) {
      case "select-graph":
        void actions.selectGraph(target.getAttribute("data-graph-id") ?? "");
        break;
      case "accept-disclaimer":
        actions.acceptDisclaimer();
        break;
      case "decline-disclaimer":
        actions.declineDisclaimer();
        break;
      case "browse-all":
        actions.browseAll();
        break;
      case "start-journey":
        void actions.startJourney(target.getAttribute("data-entry-id") ?? "");
        break;
      case "choose":
        void actions.choose(target.getAttribute("data-choice") ?? "");
        break;
      case "change-choice":
        void actions.changeChoice(Number(target.getAttribute("data-step-index")));
        break;
      case "toggle-block":
        actions.toggleBlock(Number(target.getAttribute("data-step-index")));
        break;
      case "toggle-detail":
        actions.toggleDetail(target.getAttribute("data-detail-key") ?? "");
        break;
      case "toggle-lang":
        actions.toggleLang();
        break;
      case "set-zoom":
        actions.setZoom(target.getAttribute("data-zoom") === "Full" ? "Full" : "Pathway");
        break;
      case "start-over":
        actions.startOver();
        break;
      default:
        break;
    }
  }

  function onSubmit(event: Event): void {
    const form = (event.target as Element).closest('[data-form="search"]');
    if (!form || !root.contains(form)) return;
    event.preventDefault();
    if (store.get().pending) return;
    const input = form.querySelector<HTMLInputElement>("[data-search-input]");
    void actions.runSearch(input ? input.value : "");
  }

  function render(): void {
    const state = store.get();
    root.setAttribute("lang", state.lang);
    root.classList.toggle("pending", state.pending);
    root.textContent = "";

    const header = document.createElement("header");
    header.className = "app-header";
    const heading = document.createElement("h1");
    heading.textContent = ui(state.lang, "appTitle");
    header.append(heading);

    if (state.screen === "journey") {
      header.append(zoomControls(state));
      const startOver = document.createElement("button");
      startOver.type = "button";
      startOver.setAttribute("data-action", "start-over");
      startOver.textContent = ui(state.lang, "startOver");
      header.append(startOver);
    }

    const langToggle = document.createElement("button");
    langToggle.type = "button";
    langToggle.setAttribute("data-action", "toggle-lang");
    langToggle.setAttribute("data-lang-toggle", "true");
    langToggle.textContent = ui(state.lang, "languageToggle");
    header.append(langToggle);
    root.append(header);

    if (state.banner) {
      const banner = document.createElement("p");
      banner.className = "banner";
      banner.setAttribute("role", "status");
      banner.textContent = state.banner;
      root.append(banner);
    }

    if (state.screen === "landing") {
      root.append(renderLanding(state));
      return;
    }

    const main = document.createElement("main");
    main.className = "dual-pane";
    const mapPane = document.createElement("section");
    mapPane.className = "map-pane";
    if (state.graphDoc && state.journey) {
      mapPane.append(
        renderMap({ doc: state.graphDoc, view: state.journey.view, lang: state.lang, zoom: state.zoom }),
      );
      mapPane.append(mapLegend(state));
    }
    main.append(mapPane, renderPanel(state));
    root.append(main);
  }

  function zoomControls(state: AppState): HTMLElement {
    const group = document.createElement("div");
    group.className = "zoom-controls";
    group.setAttribute("role", "group");
    group.setAttribute("aria-label", ui(state.lang, "zoomLabel"));
    for (const level of ["Pathway", "Full"] as const) {
      const button = document.createElement("button");
      button.type = "button";
      button.setAttribute("data-action", "set-zoom");
      button.setAttribute("data-zoom", level);
      button.classList.toggle("active", state.zoom === level);
      button.textContent = ui(state.lang, level === "Pathway" ? "zoomPathway" : "zoomFull");
      group.append(button);
    }
    return group;
  }

  function mapLegend(state: AppState): HTMLElement {
    const legend = document.createElement("ul");
    legend.className = "map-legend";
    for (const tag of ["green", "red", "purple", "neutral"]) {
      const item = document.createElement("li");
      item.className = `legend-item legend-${tag}`;
      item.textContent = legendLabel(state.lang, tag);
      legend.append(item);
    }
    return legend;
  }

  const unsubscribe = store.subscribe(render);
  root.addEventListener("click", onClick);
  root.addEventListener("submit", onSubmit);
  render();

  return {
    store,
    actions,
    destroy() {
      unsubscribe();
      root.removeEventListener("click", onClick);
      root.removeEventListener("submit", onSubmit);
      root.textContent = "";
    },
  };
}
