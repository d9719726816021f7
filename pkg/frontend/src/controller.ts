import { ApiClient, ApiError } from "./api.js";
import type { ApiSearchResult, ServiceParams } from "./types.js";
import { DEFAULT_PARAMS } from "./types.js";

export interface RenderPayload {
  query: string;
  results: ApiSearchResult[];
  corpusSize: number;
  lastLatencyUs: number;
  medianLatencyUs: number;
  substringMode: boolean;
  seq: number;
}

export interface ControllerHooks {
  render(payload: RenderPayload): void;
  renderEmpty(): void;
  showError(message: string): void;
  clearError(): void;
  paramsChanged?(params: ServiceParams): void;
}

export interface ControllerOptions {
  debounceMs?: number;
  latencyWindow?: number;
}

const LATENCY_WINDOW = 50;

export function validateParams(update: Partial<ServiceParams>): string[] {
  const problems: string[] = [];
  const isInt = (v: unknown): v is number => typeof v === "number" && Number.isInteger(v);
  if (update.k !== undefined && (!isInt(update.k) || update.k < 0)) {
    problems.push("k must be an integer >= 0");
  }
  if (update.lambda !== undefined) {
    const v = update.lambda;
    if (typeof v !== "number" || !Number.isFinite(v) || v <= 0 || v > 1) {
      problems.push("lambda must be in (0, 1]");
    }
  }
  if (update.t1 !== undefined && (typeof update.t1 !== "number" || !Number.isFinite(update.t1))) {
    problems.push("t1 must be a number");
  }
  if (update.t2 !== undefined && (!isInt(update.t2) || update.t2 < 0)) {
    problems.push("t2 must be an integer >= 0");
  }
  if (update.min_fuzzy_len !== undefined && (!isInt(update.min_fuzzy_len) || update.min_fuzzy_len < 1)) {
    problems.push("min_fuzzy_len must be an integer >= 1");
  }
  if (update.limit !== undefined && (!isInt(update.limit) || update.limit < 0)) {
    problems.push("limit must be an integer >= 0 (0 = unlimited)");
  }
  return problems;
}

/**
 * Per-keystroke search driver.
 *
 * Keystrokes are debounced (30 ms default) and each issued request carries a
 * sequence number; a response renders only if no response with a higher
 * sequence number has rendered already, so stale answers can never overwrite
 * fresh ones even if the transport reorders them. In-flight requests are
 * additionally aborted when a newer one is issued.
 */
export class SearchController {
  readonly debounceMs: number;

  private readonly latencyWindow: number;
  private seq = 0;
  private lastRenderedSeq = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inflight: AbortController | null = null;
  private latencies: number[] = [];
  private currentQuery = "";
  private params: ServiceParams = { ...DEFAULT_PARAMS };

  constructor(
    private readonly client: ApiClient,
    private readonly hooks: ControllerHooks,
    options: ControllerOptions = {},
  ) {
    this.debounceMs = options.debounceMs ?? 30;
    this.latencyWindow = options.latencyWindow ?? LATENCY_WINDOW;
  }

  /** Fetch current service params (drives the substring-mode hint). */
  async loadParams(): Promise<ServiceParams> {
    this.params = await this.client.getParams();
    this.hooks.paramsChanged?.(this.params);
    return this.params;
  }

  get currentParams(): ServiceParams {
    return this.params;
  }

  /** Keystroke entry point: debounce, cancel, re-query. */
  setQuery(query: string): void {
    this.currentQuery = query;
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (query.trim() === "") {
      this.cancelInflight();
      this.seq += 1; // anything still in flight is now stale by number
      this.lastRenderedSeq = this.seq;
      this.hooks.renderEmpty();
      return;
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.issue(query);
    }, this.debounceMs);
  }

  /** Validate locally, PUT, then re-run the current query so the effect shows. */
  async applyParams(update: Partial<ServiceParams>): Promise<{ ok: boolean; errors: string[] }> {
    const localProblems = validateParams(update);
    if (localProblems.length > 0) {
      return { ok: false, errors: localProblems };
    }
    try {
      this.params = await this.client.putParams(update);
    } catch (err) {
      if (err instanceof ApiError) {
        return { ok: false, errors: err.violations.length ? err.violations : [err.message] };
      }
      return { ok: false, errors: [String(err)] };
    }
    this.hooks.paramsChanged?.(this.params);
    if (this.currentQuery.trim() !== "") {
      await this.issue(this.currentQuery);
    }
    return { ok: true, errors: [] };
  }

  async resetParams(): Promise<{ ok: boolean; errors: string[] }> {
    return this.applyParams({ ...DEFAULT_PARAMS });
  }

  dispose(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.cancelInflight();
  }

  private cancelInflight(): void {
    if (this.inflight !== null) {
      this.inflight.abort();
      this.inflight = null;
    }
  }

  private async issue(query: string): Promise<void> {
    const mySeq = ++this.seq;
    this.cancelInflight();
    const controller = new AbortController();
    this.inflight = controller;
    try {
      const response = await this.client.search(query, controller.signal);
      if (mySeq <= this.lastRenderedSeq) {
        return; // a newer response already rendered; drop silently
      }
      this.lastRenderedSeq = mySeq;
      this.hooks.clearError();
      this.latencies.push(response.latency_us);
      if (this.latencies.length > this.latencyWindow) {
        this.latencies.shift();
      }
      this.hooks.render({
        query: response.query,
        results: response.results,
        corpusSize: response.corpus_size,
        lastLatencyUs: response.latency_us,
        medianLatencyUs: median(this.latencies),
        substringMode: query.trim().length < this.params.min_fuzzy_len,
        seq: mySeq,
      });
    } catch (err) {
      if (isAbortError(err)) {
        return; // superseded request; not an error
      }
      // keep previously rendered results on screen, just raise the banner
      this.hooks.showError(err instanceof Error ? err.message : String(err));
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
      }
    }
  }
}

function median(values: number[]): number {
  const sorted = [...values].sort((a, b) => a - b);
  const mid = Math.floor(sorted.length / 2);
  if (sorted.length % 2 === 1) return sorted[mid]!;
  return (sorted[mid - 1]! + sorted[mid]!) / 2;
}

function isAbortError(err: unknown): boolean {
  return err instanceof DOMException
    ? err.name === "AbortError"
    : err instanceof Error && err.name === "AbortError";
}
