import { api, ApiRequestError } from "../api";
import { clear, el } from "../dom";
import { state, type ChatEntry } from "../state";
import { STRINGS } from "../strings";

// At most one chat request in flight; further sends join this chain.
let sendChain: Promise<void> = Promise.resolve();

function transcriptEntry(entry: ChatEntry): HTMLElement {
  const container = el("div", { class: "chat-entry" });
  container.append(el("p", { class: "chat-question" }, [entry.question]));
  if (entry.error) {
    container.append(el("p", { class: "chat-error", role: "alert" }, [entry.error]));
    return container;
  }
  container.append(el("p", { class: "chat-answer" }, [entry.answer]));
  if (entry.contexts.length) {
    const details = el("details", { class: "chat-contexts" });
    details.append(el("summary", {}, [STRINGS.contextsToggle]));
    const list = el("ul");
    for (const context of entry.contexts) list.append(el("li", {}, [context]));
    details.append(list);
    container.append(details);
  }
  return container;
}

export function renderLlm(root: HTMLElement): void {
  clear(root);
  const heading = el("h2", {}, [STRINGS.llmHeading]);
  const intro = el("p", {}, [STRINGS.llmIntro]);
  const transcript = el("div", { class: "chat-transcript" });
  for (const entry of state.chatTranscript) transcript.append(transcriptEntry(entry));

  const loadedExample = el("blockquote", { class: "chat-example" }, [
    state.chatExample ? state.chatExample.text : "",
  ]);
  loadedExample.hidden = state.chatExample === null;
  const loadButton = el("button", { type: "button", class: "load-example" }, [
    STRINGS.loadExample,
  ]);
  loadButton.addEventListener("click", () => {
    void api
      .randomExample()
      .then((example) => {
        state.chatExample = example;
        loadedExample.textContent = example.text;
        loadedExample.hidden = false;
      })
      .catch(() => {
        loadedExample.textContent = STRINGS.noEligibleExample;
        loadedExample.hidden = false;
      });
  });

  const input = el("input", {
    type: "text",
    name: "question",
    placeholder: STRINGS.llmPlaceholder,
  });
  const send = el("button", { type: "submit" }, [STRINGS.send]);
  const form = el("form", { class: "chat-form" }, [input, send]);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const question = input.value.trim();
    if (!question) return;
    input.value = "";
    const exampleId = state.chatExample?.id;
    sendChain = sendChain.then(async () => {
      let entry: ChatEntry;
      try {
        const response = await api.chat(question, exampleId);
        entry = { question, answer: response.answer, contexts: response.contexts };
      } catch (error) {
        const message =
          error instanceof ApiRequestError && error.status === 502
            ? STRINGS.transportError
            : STRINGS.genericError;
        entry = { question, answer: "", contexts: [], error: message };
      }
      state.chatTranscript.push(entry);
      transcript.append(transcriptEntry(entry));
    });
  });

  root.append(heading, intro, loadButton, loadedExample, transcript, form);
}

// Exposed for tests: resolves once queued sends have settled.
export function chatIdle(): Promise<void> {
  return sendChain;
}
