import { clear, el } from "./dom";
import { renderAbout } from "./pages/about";
import { renderCreate } from "./pages/create";
import { renderFigures } from "./pages/figures";
import { renderFyf } from "./pages/fyf";
import { renderLlm } from "./pages/llm";
import { STRINGS } from "./strings";

type PageRenderer = (root: HTMLElement) => void;

const ROUTES: Record<string, { label: string; render: PageRenderer }> = {
  "#/create": { label: STRINGS.navCreate, render: renderCreate },
  "#/fyf": { label: STRINGS.navFyf, render: renderFyf },
  "#/llm": { label: STRINGS.navLlm, render: renderLlm },
  "#/figures": { label: STRINGS.navFigures, render: renderFigures },
  "#/about": { label: STRINGS.navAbout, render: renderAbout },
};

export function mount(app: HTMLElement): void {
  clear(app);
  const nav = el("nav", { class: "main-nav", "aria-label": "Hauptnavigation" });
  for (const [hash, route] of Object.entries(ROUTES)) {
    nav.append(el("a", { href: hash }, [route.label]));
  }
  const header = el("header", {}, [el("h1", {}, [STRINGS.appTitle]), nav]);
  const page = el("main", { id: "page" });
  app.append(header, page);

  function route(): void {
    // Unknown routes fall back to the project-info page.
    const target = ROUTES[window.location.hash] ?? ROUTES["#/about"];
    target.render(page);
  }

  window.addEventListener("hashchange", route);
  route();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  mount(document.getElementById("app")!);
}
