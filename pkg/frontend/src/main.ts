// Browser wiring: keyboard -> state machine -> debounced service calls
// -> re-render. Start the service first:
//
//     deva serve --lexicon lexicon.tsv --port 8775
//
// then open index.html (optionally ?api=http://host:port).

import { ApiClient } from "./api.js";
import { debounce } from "./debounce.js";
import {
  applyFailure,
  applyResponse,
  initialState,
  onKeystroke,
  type CompositionState,
  type Effect,
} from "./state.js";
import { render } from "./view.js";

const DEBOUNCE_MS = 120;
const LIMIT = 5;

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  return override ?? "http://127.0.0.1:8775";
}

export function start(root: HTMLElement): void {
  const client = new ApiClient(apiBase());
  let state: CompositionState = initialState;
  let inflight: AbortController | null = null;

  const paint = () => {
    root.innerHTML = render(state);
  };

  const fire = (token: string, version: number) => {
    inflight?.abort(); // one in-flight request per pending token
    const controller = new AbortController();
    inflight = controller;
    client
      .suggest(token, LIMIT, controller.signal)
      .then((candidates) => {
        state = applyResponse(state, version, candidates);
        paint();
      })
      .catch((err) => {
        if (err instanceof DOMException && err.name === "AbortError") {
          return; // superseded by a newer token
        }
        state = applyFailure(state, version, "service unreachable — direct typing still works");
        paint();
      });
  };
  const requestSuggestions = debounce(fire, DEBOUNCE_MS);

  const handleEffect = (effect: Effect) => {
    if (effect.kind === "request") {
      requestSuggestions(effect.token, effect.version);
    }
  };

  document.addEventListener("keydown", (event) => {
    if (event.ctrlKey || event.metaKey || event.altKey) {
      return;
    }
    const before = state;
    const { state: next, effect } = onKeystroke(state, event.key);
    if (next === before && effect.kind === "none") {
      return;
    }
    event.preventDefault();
    state = next;
    handleEffect(effect);
    paint();
  });

  client.healthy().then((ok) => {
    if (!ok) {
      state = { ...state, banner: "service not reachable at " + apiBase() };
      paint();
    }
  });

  paint();
}

if (typeof document !== "undefined") {
  const root = document.getElementById("app");
  if (root !== null) {
    start(root);
  }
}
