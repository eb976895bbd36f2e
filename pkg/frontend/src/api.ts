/**
 * Typed client over the artemus HTTP API.
 *
 * Error responses arrive as `{"error": {status, code, detail, reason?}}`
 * and are rethrown as ApiError so callers can branch on the engine code
 * rather than parsing strings. The fetch implementation is injectable so
 * tests can record traffic.
 */
import type {
  ErrorBody,
  GraphDoc,
  GraphListing,
  JourneyDoc,
  JourneyResponse,
  Lang,
  OptionReason,
  SearchMatch,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly detail: string;
  readonly reason: OptionReason | null;

  constructor(body: ErrorBody) {
    super(`${body.code}: ${body.detail}`);
    this.name = "ApiError";
    this.status = body.status;
    this.code = body.code;
    this.detail = body.detail;
    this.reason = body.reason ?? null;
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: "GET" | "POST", path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(this.baseUrl + path, init);
    let payload: unknown;
    try {
      payload = await response.json();
    } catch {
      throw new ApiError({
        status: response.status,
        code: "BadResponse",
        detail: "server response was not JSON",
      });
    }
    if (!response.ok) {
      const error = (payload as { error?: ErrorBody }).error;
      if (error) throw new ApiError(error);
      throw new ApiError({
        status: response.status,
        code: "HttpError",
        detail: JSON.stringify(payload),
      });
    }
    return payload as T;
  }

  listGraphs(): Promise<GraphListing[]> {
    return this.request("GET", "/api/graphs");
  }

  graphDocument(graphId: string): Promise<GraphDoc> {
    return this.request("GET", `/api/graphs/${encodeURIComponent(graphId)}`);
  }

  search(graphId: string, query: string, lang: Lang, k?: number): Promise<{ matches: SearchMatch[] }> {
    const body: Record<string, unknown> = { graphId, query, lang };
    if (k !== undefined) body.k = k;
    return this.request("POST", "/api/search", body);
  }

  createJourney(graphId: string, entryPointId: string, lang: Lang): Promise<JourneyResponse> {
    return this.request("POST", "/api/journeys", { graphId, entryPointId, lang });
  }

  step(journey: JourneyDoc, choice: string): Promise<JourneyResponse> {
    return this.request("POST", "/api/journeys/step", { journey, choice });
  }

  rewind(journey: JourneyDoc, keep: number): Promise<JourneyResponse> {
    return this.request("POST", "/api/journeys/rewind", { journey, keep });
  }
}
