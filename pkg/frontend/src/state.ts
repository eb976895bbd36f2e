/**
 * Application state.
 *
 * The journey itself is only ever replaced wholesale by API responses;
 * everything else here is presentation state (folds, zoom, pending flag)
 * or the landing flow's progress. Rule enablement is never computed on
 * this side: options carry their own enabled flag and reason.
 */
import type {
  GraphDoc,
  GraphListing,
  JourneyResponse,
  Lang,
  OptionReason,
  SearchMatch,
} from "./types.js";

export type Screen = "landing" | "journey";
export type ZoomLevel = "Pathway" | "Full";

/** A choice the server (or the option payload) rejected, shown beside it. */
export interface OptionFailure {
  choice: string;
  detail: string;
  reason: OptionReason | null;
}

export interface AppState {
  lang: Lang;
  screen: Screen;
  graphs: GraphListing[] | null;
  graphId: string | null;
  graphDoc: GraphDoc | null;
  disclaimerAccepted: boolean;
  disclaimerDeclined: boolean;
  query: string;
  matches: SearchMatch[] | null;
  browsing: boolean;
  journey: JourneyResponse | null;
  zoom: ZoomLevel;
  unfolded: Record<number, boolean>;
  expanded: Record<string, boolean>;
  pending: boolean;
  failure: OptionFailure | null;
  banner: string | null;
}

export function initialState(): AppState {
  return {
    lang: "en",
    screen: "landing",
    graphs: null,
    graphId: null,
    graphDoc: null,
    disclaimerAccepted: false,
    disclaimerDeclined: false,
    query: "",
    matches: null,
    browsing: false,
    journey: null,
    zoom: "Pathway",
    unfolded: {},
    expanded: {},
    pending: false,
    failure: null,
    banner: null,
  };
}

/** Fold state may only reference steps that still exist. */
export function pruneUnfolded(unfolded: Record<number, boolean>, stepCount: number): Record<number, boolean> {
  const pruned: Record<number, boolean> = {};
  for (const [key, open] of Object.entries(unfolded)) {
    const index = Number(key);
    if (Number.isInteger(index) && index >= 0 && index < stepCount) pruned[index] = open;
  }
  return pruned;
}
