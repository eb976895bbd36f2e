/**
 * Session persistence in browser storage.
 *
 * Only the journey document and a few presentation settings are stored,
 * under one fixed, non-identifying key. Nothing here is sent anywhere;
 * the "start over" control clears it.
 */
import type { JourneyDoc, Lang } from "./types.js";
import type { ZoomLevel } from "./state.js";

export const STORAGE_KEY = "artemus.explorer.v1";

export interface PersistedSession {
  lang: Lang;
  graphId: string;
  zoom: ZoomLevel;
  journey: JourneyDoc;
}

export function saveSession(storage: Storage, session: PersistedSession | null): void {
  if (session === null) {
    storage.removeItem(STORAGE_KEY);
    return;
  }
  storage.setItem(STORAGE_KEY, JSON.stringify(session));
}

export function loadSession(storage: Storage): PersistedSession | null {
  const raw = storage.getItem(STORAGE_KEY);
  if (raw === null) return null;
  let parsed: unknown;
  try {
    parsed = JSON.parse(raw);
  } catch {
    storage.removeItem(STORAGE_KEY);
    return null;
  }
  if (!isSession(parsed)) {
    storage.removeItem(STORAGE_KEY);
    return null;
  }
  return parsed;
}

function isSession(value: unknown): value is PersistedSession {
  if (typeof value !== "object" || value === null) return false;
  const record = value as Record<string, unknown>;
  if (record.lang !== "en" && record.lang !== "cy") return false;
  if (typeof record.graphId !== "string" || record.graphId === "") return false;
  if (record.zoom !== "Pathway" && record.zoom !== "Full") return false;
  const journey = record.journey as Record<string, unknown> | null;
  if (typeof journey !== "object" || journey === null) return false;
  return (
    typeof journey.graphId === "string" &&
    typeof journey.graphHash === "string" &&
    typeof journey.entryPointId === "string" &&
    Array.isArray(journey.steps) &&
    typeof journey.concluded === "boolean"
  );
}
