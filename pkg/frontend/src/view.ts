import type { RenderPayload } from "./controller.js";
import { mapSpan, splitName } from "./highlight.js";
import type { ServiceParams } from "./types.js";

/** DOM bindings for the result list, badges, latency readout, and banner. */
export class View {
  private readonly resultList: HTMLElement;
  private readonly statusLine: HTMLElement;
  private readonly latencyLine: HTMLElement;
  private readonly errorBanner: HTMLElement;

  constructor(root: Document) {
    this.resultList = expect(root, "#results");
    this.statusLine = expect(root, "#status");
    this.latencyLine = expect(root, "#latency");
    this.errorBanner = expect(root, "#error-banner");
  }

  render(payload: RenderPayload): void {
    this.resultList.replaceChildren();
    for (const result of payload.results) {
      const item = document.createElement("li");
      const name = document.createElement("span");
      name.className = "name";
      const highlight = mapSpan(result.name, result.span);
      const segments = splitName(result.name, highlight);
      if (segments) {
        name.append(segments.pre);
        const mark = document.createElement("mark");
        mark.textContent = segments.match;
        name.append(mark, segments.post);
      } else {
        name.textContent = result.name;
        if (highlight.kind === "initials") {
          const tag = document.createElement("span");
          tag.className = "badge initials";
          tag.textContent = "initials match";
          name.append(" ", tag);
        }
      }
      const scores = document.createElement("span");
      scores.className = "badge scores";
      scores.textContent = `lld ${result.lld} · bd ${result.bd}`;
      item.append(name, scores);
      this.resultList.append(item);
    }
    this.statusLine.textContent = payload.substringMode
      ? `substring-only mode (query too short for fuzzy matching) · ${payload.results.length} of ${payload.corpusSize} names`
      : `${payload.results.length} of ${payload.corpusSize} names`;
    this.latencyLine.hidden = false;
    this.latencyLine.textContent =
      `last ${payload.lastLatencyUs} µs · median ${Math.round(payload.medianLatencyUs)} µs`;
  }

  renderEmpty(): void {
    this.resultList.replaceChildren();
    this.statusLine.textContent = "";
  }

  showError(message: string): void {
    this.errorBanner.hidden = false;
    this.errorBanner.textContent = `service unreachable: ${message} (showing last results)`;
  }

  clearError(): void {
    this.errorBanner.hidden = true;
    this.errorBanner.textContent = "";
  }

  readParamsForm(root: Document): Partial<ServiceParams> {
    const update: Record<string, number> = {};
    for (const key of ["k", "lambda", "t1", "t2", "min_fuzzy_len", "limit"] as const) {
      const input = root.querySelector<HTMLInputElement>(`#param-${key}`);
      if (input && input.value !== "") {
        update[key] = Number(input.value);
      }
    }
    return update;
  }

  writeParamsForm(root: Document, params: ServiceParams): void {
    for (const [key, value] of Object.entries(params)) {
      const input = root.querySelector<HTMLInputElement>(`#param-${key}`);
      if (input) input.value = String(value);
    }
  }

  showParamErrors(root: Document, errors: string[]): void {
    const box = expect(root, "#param-errors");
    box.textContent = errors.join("; ");
    box.hidden = errors.length === 0;
  }
}

function expect(root: Document, selector: string): HTMLElement {
  const el = root.querySelector<HTMLElement>(selector);
  if (!el) throw new Error(`missing element ${selector}`);
  return el;
}
