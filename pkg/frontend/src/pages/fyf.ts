import { api, ApiRequestError, DIMENSIONS, type SearchHit } from "../api";
import { clear, el, labeledInput } from "../dom";
import { state } from "../state";
import { STRINGS } from "../strings";

const NO_IDEA_VALUE = "";

function figureCard(hit: SearchHit): HTMLElement {
  const checkbox = el("input", {
    type: "checkbox",
    class: "figure-select",
    value: hit.figure.iri,
    id: `select-${hit.figure.label}`,
  });
  const card = el("article", { class: "figure-card" }, [
    el("label", { for: `select-${hit.figure.label}` }, [checkbox, hit.figure.label]),
  ]);
  if (hit.definitions.length) {
    card.append(el("h4", {}, [STRINGS.definitionsHeading]));
    const list = el("ul", { class: "definitions" });
    for (const definition of hit.definitions) {
      const item = el("li", {}, [definition.text]);
      if (definition.author) item.append(el("span", { class: "byline" }, [` — ${definition.author}`]));
      list.append(item);
    }
    card.append(list);
  }
  if (hit.examples.length) {
    card.append(el("h4", {}, [STRINGS.examplesHeading]));
    const list = el("ul", { class: "examples" });
    for (const example of hit.examples) {
      const item = el("li", {}, [example.text]);
      const provenance = [example.author, example.source].filter(Boolean).join(", ");
      if (provenance) item.append(el("span", { class: "byline" }, [` — ${provenance}`]));
      list.append(item);
    }
    card.append(list);
  }
  return card;
}

export function renderFyf(root: HTMLElement): void {
  clear(root);
  const heading = el("h2", {}, [STRINGS.fyfHeading]);
  const intro = el("p", {}, [STRINGS.fyfIntro]);
  const status = el("p", { class: "status", role: "status" });

  // Text source: own text or a random example from the database.
  const ownText = el("textarea", { name: "own-text", rows: "2" });
  ownText.value = state.fyfOwnText;
  ownText.addEventListener("input", () => {
    state.fyfOwnText = ownText.value;
    state.fyfExample = null;
    currentText.textContent = ownText.value;
  });
  const randomButton = el("button", { type: "button", class: "random-example" }, [
    STRINGS.randomText,
  ]);
  const currentText = el("blockquote", { class: "current-text" }, [
    state.fyfExample ? state.fyfExample.text : state.fyfOwnText,
  ]);
  randomButton.addEventListener("click", () => {
    void (async () => {
      try {
        const example = await api.randomExample();
        state.fyfExample = example;
        state.fyfOwnText = "";
        ownText.value = "";
        currentText.textContent = example.text;
        status.textContent = "";
      } catch (error) {
        status.textContent =
          error instanceof ApiRequestError && error.status === 404
            ? STRINGS.noEligibleExample
            : STRINGS.genericError;
      }
    })();
  });

  // One dropdown per property dimension, each with the no-idea entry.
  const selects = new Map<string, HTMLSelectElement>();
  const dropdowns = el("fieldset", { class: "dimensions" });
  for (const dimension of DIMENSIONS) {
    const select = el("select", { name: dimension });
    select.append(el("option", { value: NO_IDEA_VALUE }, [STRINGS.noIdea]));
    selects.set(dimension, select);
    dropdowns.append(labeledInput(STRINGS.dimensionLabels[dimension], select));
  }
  void api.vocabulary().then((vocabulary) => {
    for (const dimension of DIMENSIONS) {
      const select = selects.get(dimension)!;
      for (const value of vocabulary[dimension] ?? []) {
        const label = value.split(":").pop() ?? value;
        select.append(el("option", { value }, [label]));
      }
    }
  });

  const searchButton = el("button", { type: "submit" }, [STRINGS.searchButton]);
  const form = el("form", { class: "fyf-form" }, [dropdowns, searchButton]);
  const results = el("section", { class: "results" });
  const annotateButton = el("button", { type: "button", class: "annotate", hidden: "hidden" }, [
    STRINGS.annotateSelected,
  ]);

  function renderResults(hits: SearchHit[]): void {
    clear(results);
    state.lastResults = hits;
    if (!hits.length) {
      results.append(el("p", {}, [STRINGS.noResults]));
      annotateButton.hidden = true;
      return;
    }
    for (const hit of hits) results.append(figureCard(hit));
    annotateButton.hidden = false;
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const selection: Record<string, string | null> = {};
    for (const dimension of DIMENSIONS) {
      const value = selects.get(dimension)!.value;
      selection[dimension] = value === NO_IDEA_VALUE ? null : value;
    }
    void api
      .search(selection)
      .then(renderResults)
      .catch(() => {
        status.textContent = STRINGS.genericError;
      });
  });

  annotateButton.addEventListener("click", () => {
    void (async () => {
      const chosen = Array.from(
        results.querySelectorAll<HTMLInputElement>(".figure-select:checked"),
      ).map((box) => box.value);
      if (!chosen.length) return;
      let exampleId = state.fyfExample?.id;
      try {
        if (exampleId === undefined) {
          if (!state.fyfOwnText.trim()) {
            status.textContent = STRINGS.needExample;
            return;
          }
          // Own text is stored first, then annotated.
          const created = await api.submitExample({
            text: state.fyfOwnText,
            author: "unbekannt",
          });
          exampleId = created.example.id;
          state.fyfExample = created.example;
        }
        await api.annotate(exampleId, chosen);
        status.textContent = STRINGS.annotateSuccess;
      } catch (error) {
        status.textContent =
          error instanceof ApiRequestError ? error.error.message : STRINGS.genericError;
      }
    })();
  });

  root.append(
    heading,
    intro,
    labeledInput(STRINGS.ownText, ownText),
    randomButton,
    currentText,
    form,
    results,
    annotateButton,
    status,
  );
}
