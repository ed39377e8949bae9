import type { ExampleRecord, SearchHit } from "./api";

export interface ChatEntry {
  question: string;
  answer: string;
  contexts: string[];
  error?: string;
}

// Session-only UI state; nothing is persisted across reloads.
export interface UiState {
  createDraft: { text: string; context: string; author: string; source: string };
  pendingConfirmation: boolean;
  fyfExample: ExampleRecord | null;
  fyfOwnText: string;
  lastResults: SearchHit[];
  chatTranscript: ChatEntry[]; // append-only within the session
  chatExample: ExampleRecord | null;
}

export function initialState(): UiState {
  return {
    createDraft: { text: "", context: "", author: "", source: "" },
    pendingConfirmation: false,
    fyfExample: null,
    fyfOwnText: "",
    lastResults: [],
    chatTranscript: [],
    chatExample: null,
  };
}

export const state: UiState = initialState();

export function resetState(): void {
  Object.assign(state, initialState());
}
