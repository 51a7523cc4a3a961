// Composition state machine for the candidate window.
//
// Pure: every keystroke maps (state, key) -> { state, effect } and all
// I/O stays in main.ts. Responses carry the version of the pending
// token they were requested for; anything stale is dropped.

export type Source = "Lexicon" | "Fallback";

export interface Candidate {
  word: string;
  frequency: number;
  source: Source;
}

export interface CompositionState {
  committedText: string;
  pendingToken: string; // never contains whitespace
  candidates: Candidate[];
  highlighted: number; // < candidates.length whenever nonempty
  version: number; // bumped on every pendingToken change
  banner: string | null;
}

/** What the caller must do after a transition. */
export type Effect =
  | { kind: "none" }
  | { kind: "request"; token: string; version: number };

export interface Transition {
  state: CompositionState;
  effect: Effect;
}

export const initialState: CompositionState = {
  committedText: "",
  pendingToken: "",
  candidates: [],
  highlighted: 0,
  version: 0,
  banner: null,
};

const LETTER = /^[a-zA-Z]$/;

function still(state: CompositionState): Transition {
  return { state, effect: { kind: "none" } };
}

function withPending(state: CompositionState, pendingToken: string): Transition {
  const version = state.version + 1;
  const next = {
    ...state,
    pendingToken,
    version,
    candidates: [],
    highlighted: 0,
  };
  if (pendingToken === "") {
    return still(next);
  }
  return { state: next, effect: { kind: "request", token: pendingToken, version } };
}

/** Word to commit when the user separates: highlighted candidate if any,
 * otherwise the raw roman token. */
function commitWord(state: CompositionState): string {
  if (state.candidates.length > 0) {
    return state.candidates[state.highlighted].word;
  }
  return state.pendingToken;
}

function commit(state: CompositionState, word: string, separator: string): Transition {
  return still({
    ...state,
    committedText: state.committedText + word + separator,
    pendingToken: "",
    candidates: [],
    highlighted: 0,
    version: state.version + 1,
    banner: state.banner,
  });
}

export function onKeystroke(state: CompositionState, key: string): Transition {
  if (LETTER.test(key)) {
    return withPending(state, state.pendingToken + key);
  }

  if (key === "Backspace") {
    if (state.pendingToken !== "") {
      return withPending(state, state.pendingToken.slice(0, -1));
    }
    return still({
      ...state,
      committedText: state.committedText.slice(0, -1),
    });
  }

  if (key === "ArrowDown" || key === "ArrowUp") {
    const n = state.candidates.length;
    if (n === 0) {
      return still(state);
    }
    const step = key === "ArrowDown" ? 1 : -1;
    return still({
      ...state,
      highlighted: (state.highlighted + step + n) % n,
    });
  }

  if (key === "Enter") {
    if (state.pendingToken === "") {
      return still({ ...state, committedText: state.committedText + "\n" });
    }
    return commit(state, commitWord(state), "");
  }

  if (key === " ") {
    if (state.pendingToken === "") {
      return still({ ...state, committedText: state.committedText + " " });
    }
    return commit(state, commitWord(state), " ");
  }

  if (/^[1-5]$/.test(key) && state.pendingToken !== "") {
    const idx = Number(key) - 1;
    if (idx < state.candidates.length) {
      return commit(state, state.candidates[idx].word, "");
    }
    return still(state); // no candidate at that rank: swallow
  }

  if (key.length === 1) {
    // punctuation and digits outside 1-5: commit pending (if any), then
    // pass the character through
    if (state.pendingToken !== "") {
      return commit(state, commitWord(state), key);
    }
    return still({ ...state, committedText: state.committedText + key });
  }

  return still(state); // modifier and navigation keys we don't handle
}

/** Apply a suggest response; stale versions are discarded unchanged. */
export function applyResponse(
  state: CompositionState,
  version: number,
  candidates: Candidate[],
): CompositionState {
  if (version !== state.version || state.pendingToken === "") {
    return state;
  }
  return { ...state, candidates, highlighted: 0, banner: null };
}

/** Network failure: clear the window, keep typing possible. */
export function applyFailure(
  state: CompositionState,
  version: number,
  message: string,
): CompositionState {
  if (version !== state.version) {
    return state;
  }
  return { ...state, candidates: [], highlighted: 0, banner: message };
}

/** True when the window should advertise commit-on-separator: exactly
 * one candidate that came from the lexicon. */
export function isAutoCommit(state: CompositionState): boolean {
  return (
    state.candidates.length === 1 && state.candidates[0].source === "Lexicon"
  );
}
