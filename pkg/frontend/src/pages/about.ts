import { clear, el } from "../dom";
import { STRINGS } from "../strings";

export function renderAbout(root: HTMLElement): void {
  clear(root);
  root.append(
    el("h2", {}, [STRINGS.aboutHeading]),
    el("p", {}, [STRINGS.aboutBody]),
    el("p", { class: "imprint" }, [STRINGS.imprint]),
  );
}
