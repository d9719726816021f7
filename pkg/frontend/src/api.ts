import type { ApiSearchResponse, ServiceParams } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    message: string,
    public readonly status: number,
    public readonly violations: string[] = [],
  ) {
    super(message);
  }
}

/** Thin client for the search service; configuration is the base URL only. */
export class ApiClient {
  private readonly fetchFn: FetchLike;

  constructor(
    public readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  async search(query: string, signal?: AbortSignal): Promise<ApiSearchResponse> {
    const url = `${this.baseUrl}/api/search?q=${encodeURIComponent(query)}`;
    const resp = await this.fetchFn(url, { signal });
    if (!resp.ok) {
      throw new ApiError(`search failed (${resp.status})`, resp.status);
    }
    return (await resp.json()) as ApiSearchResponse;
  }

  async getParams(): Promise<ServiceParams> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/params`);
    if (!resp.ok) {
      throw new ApiError(`params fetch failed (${resp.status})`, resp.status);
    }
    return (await resp.json()) as ServiceParams;
  }

  async putParams(update: Partial<ServiceParams>): Promise<ServiceParams> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/params`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(update),
    });
    if (!resp.ok) {
      let violations: string[] = [];
      let message = `params update failed (${resp.status})`;
      try {
        const body = await resp.json();
        if (Array.isArray(body.violations)) violations = body.violations;
        if (typeof body.error === "string") message = body.error;
      } catch {
        // non-JSON error body; keep the generic message
      }
      throw new ApiError(message, resp.status, violations);
    }
    return (await resp.json()) as ServiceParams;
  }

  async getStats(): Promise<Record<string, number>> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/stats`);
    if (!resp.ok) {
      throw new ApiError(`stats fetch failed (${resp.status})`, resp.status);
    }
    return (await resp.json()) as Record<string, number>;
  }
}
