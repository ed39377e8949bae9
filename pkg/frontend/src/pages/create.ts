import { api, ApiRequestError } from "../api";
import { clear, el, labeledInput } from "../dom";
import { state } from "../state";
import { STRINGS } from "../strings";

export function renderCreate(root: HTMLElement): void {
  clear(root);
  const heading = el("h2", {}, [STRINGS.createHeading]);
  const intro = el("p", {}, [STRINGS.createIntro]);
  const status = el("p", { class: "status", role: "status" });

  const text = el("textarea", { name: "text", rows: "3", required: "required" });
  text.value = state.createDraft.text;
  const context = el("input", { name: "context", type: "text" });
  context.value = state.createDraft.context;
  const author = el("input", { name: "author", type: "text" });
  author.value = state.createDraft.author;
  const source = el("input", { name: "source", type: "text" });
  source.value = state.createDraft.source;
  const hint = el("p", { class: "hint" }, [STRINGS.provenanceHint]);
  const submit = el("button", { type: "submit" }, [STRINGS.submit]);

  const confirmBox = el("div", { class: "confirm", hidden: "hidden" }, [
    el("h3", {}, [STRINGS.confirmHeading]),
    el("p", {}, [STRINGS.confirmQuestion]),
  ]);
  const confirmYes = el("button", { type: "button", class: "confirm-yes" }, [
    STRINGS.confirmYes,
  ]);
  const confirmNo = el("button", { type: "button", class: "confirm-no" }, [
    STRINGS.confirmNo,
  ]);
  confirmBox.append(confirmYes, confirmNo);

  const form = el("form", { class: "create-form" }, [
    labeledInput(STRINGS.labelText, text),
    labeledInput(STRINGS.labelContext, context),
    labeledInput(STRINGS.labelAuthor, author),
    labeledInput(STRINGS.labelSource, source),
    hint,
    submit,
  ]);

  function saveDraft(): void {
    state.createDraft = {
      text: text.value,
      context: context.value,
      author: author.value,
      source: source.value,
    };
  }

  function resetForm(): void {
    text.value = context.value = author.value = source.value = "";
    state.createDraft = { text: "", context: "", author: "", source: "" };
    state.pendingConfirmation = false;
    confirmBox.hidden = true;
  }

  async function send(confirm: boolean): Promise<void> {
    saveDraft();
    try {
      await api.submitExample({
        text: text.value,
        context: context.value || undefined,
        author: author.value || undefined,
        source: source.value || undefined,
        confirm,
      });
      resetForm();
      status.textContent = STRINGS.createSuccess;
    } catch (error) {
      if (error instanceof ApiRequestError && error.error.code === "confirmation_required") {
        state.pendingConfirmation = true;
        confirmBox.hidden = false;
        status.textContent = "";
        return;
      }
      status.textContent =
        error instanceof ApiRequestError ? error.error.message : STRINGS.genericError;
    }
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    // Provenance is enforced client-side before any request goes out.
    if (!author.value.trim() && !source.value.trim()) {
      status.textContent = STRINGS.provenanceMissing;
      return;
    }
    void send(false);
  });

  confirmYes.addEventListener("click", () => {
    void send(true);
  });
  confirmNo.addEventListener("click", () => {
    state.pendingConfirmation = false;
    confirmBox.hidden = true;
    status.textContent = "";
  });

  root.append(heading, intro, form, confirmBox, status);
}
