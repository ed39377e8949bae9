import { api, type FigureDetail } from "../api";
import { clear, el, labeledInput } from "../dom";
import { STRINGS } from "../strings";

function detailView(detail: FigureDetail): HTMLElement {
  const section = el("section", { class: "figure-detail" });
  section.append(el("h3", {}, [detail.label]));
  if (detail.parents.length) {
    section.append(el("h4", {}, [STRINGS.parentsHeading]));
    const parents = el("ul");
    for (const parent of detail.parents) {
      parents.append(el("li", {}, [parent.split(":").pop() ?? parent]));
    }
    section.append(parents);
  }
  section.append(el("h4", {}, [STRINGS.definitionsHeading]));
  const definitions = el("ul", { class: "definitions" });
  for (const definition of detail.definitions) {
    const item = el("li", {}, [definition.text]);
    if (definition.author) item.append(el("span", { class: "byline" }, [` — ${definition.author}`]));
    definitions.append(item);
  }
  section.append(definitions);
  section.append(el("h4", {}, [STRINGS.examplesHeading]));
  const examples = el("ul", { class: "examples" });
  for (const example of detail.examples) {
    const item = el("li", {}, [example.text]);
    const provenance = [example.author, example.source].filter(Boolean).join(", ");
    if (provenance) item.append(el("span", { class: "byline" }, [` — ${provenance}`]));
    examples.append(item);
  }
  section.append(examples);
  return section;
}

export function renderFigures(root: HTMLElement): void {
  clear(root);
  const heading = el("h2", {}, [STRINGS.figuresHeading]);
  const intro = el("p", {}, [STRINGS.figuresIntro]);
  const select = el("select", { name: "figure" });
  const holder = el("div", { class: "figure-holder" });

  void api.figures().then((figures) => {
    for (const figure of figures) {
      select.append(el("option", { value: figure.label }, [figure.label]));
    }
    if (figures.length) void show(figures[0].label);
  });

  async function show(name: string): Promise<void> {
    const detail = await api.figureDetail(name);
    clear(holder);
    holder.append(detailView(detail));
  }

  select.addEventListener("change", () => {
    void show(select.value);
  });

  root.append(heading, intro, labeledInput(STRINGS.figuresHeading, select), holder);
}
