import { ApiClient } from "./api.js";
import { SearchController } from "./controller.js";
import { View } from "./view.js";

// Base URL is the only configuration: ?api=http://127.0.0.1:7700
const baseUrl =
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:7700";

const view = new View(document);
const client = new ApiClient(baseUrl);
const controller = new SearchController(client, {
  render: (payload) => view.render(payload),
  renderEmpty: () => view.renderEmpty(),
  showError: (message) => view.showError(message),
  clearError: () => view.clearError(),
  paramsChanged: (params) => view.writeParamsForm(document, params),
});

const input = document.querySelector<HTMLInputElement>("#query");
if (!input) throw new Error("missing #query input");
input.addEventListener("input", () => controller.setQuery(input.value));
input.focus();

document.querySelector("#param-apply")?.addEventListener("click", () => {
  void controller.applyParams(view.readParamsForm(document)).then(({ errors }) => {
    view.showParamErrors(document, errors);
  });
});

document.querySelector("#param-reset")?.addEventListener("click", () => {
  void controller.resetParams().then(({ errors }) => {
    view.showParamErrors(document, errors);
  });
});

void controller
  .loadParams()
  .catch((err) => view.showError(err instanceof Error ? err.message : String(err)));
