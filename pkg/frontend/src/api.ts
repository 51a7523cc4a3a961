// Thin client for the suggestion service. All Devanagari knowledge
// lives server-side; the demo only ferries JSON.

import type { Candidate } from "./state.js";

export interface SuggestResponse {
  query: string;
  suggestions: Candidate[];
}

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status?: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async get(path: string, signal?: AbortSignal): Promise<unknown> {
    let resp: Response;
    try {
      resp = await this.fetchFn(this.baseUrl + path, { signal });
    } catch (err) {
      if (err instanceof DOMException && err.name === "AbortError") {
        throw err;
      }
      throw new ApiError(String(err));
    }
    if (!resp.ok) {
      throw new ApiError(`service answered ${resp.status}`, resp.status);
    }
    return resp.json();
  }

  async suggest(
    q: string,
    limit = 5,
    signal?: AbortSignal,
  ): Promise<Candidate[]> {
    const params = new URLSearchParams({ q, limit: String(limit) });
    const body = (await this.get(
      `/api/suggest?${params}`,
      signal,
    )) as SuggestResponse;
    return body.suggestions;
  }

  async translit(text: string, signal?: AbortSignal): Promise<string> {
    const params = new URLSearchParams({ text });
    const body = (await this.get(`/api/translit?${params}`, signal)) as {
      text: string;
    };
    return body.text;
  }

  async healthy(): Promise<boolean> {
    try {
      await this.get("/healthz");
      return true;
    } catch {
      return false;
    }
  }
}
