// In-memory stand-in for the annotation service, exposing the documented
// JSON API through a fetch-compatible function.

import type {
  AnnotationRecord,
  ChatResponse,
  ExampleRecord,
  FigureDetail,
  SearchHit,
} from "../src/api";

export interface StubState {
  examples: ExampleRecord[];
  annotations: AnnotationRecord[];
  submittedPayloads: unknown[];
  chatQuestions: string[];
  failChat: boolean;
}

const FIGURES: FigureDetail[] = [
  {
    iri: ":Anaphora",
    label: "Anaphora",
    parents: [],
    definitions: [
      {
        id: ":DefinitionAnaphora1",
        text: "Wiederholung des ersten Wortes in aufeinanderfolgenden Sätzen oder Versen",
        author: "Gerd Berner",
      },
    ],
    examples: [
      {
        id: ":Example2",
        text: "Das Wasser steigt. Das Wasser fällt.",
        author: "Johann Wolfgang von Goethe",
        source: "Der Zauberlehrling",
      },
    ],
  },
  {
    iri: ":Epiphora",
    label: "Epiphora",
    parents: [],
    definitions: [
      {
        id: ":DefinitionEpiphora1",
        text: "Wiederholung eines Wortes am Ende aufeinanderfolgender Sätze",
        author: "Gerd Berner",
      },
    ],
    examples: [
      {
        id: ":Example1",
        text: "Er sieht das Meer. Sie liebt das Meer.",
        author: "Volksgut",
        source: null,
      },
    ],
  },
  {
    iri: ":Parallelismus",
    label: "Parallelismus",
    parents: [],
    definitions: [
      {
        id: ":DefinitionParallelismus1",
        text: "Gleichlaufender Bau aufeinanderfolgender Sätze oder Satzglieder",
        author: "Gero von Wilpert",
      },
    ],
    examples: [
      {
        id: ":Example2",
        text: "Das Wasser steigt. Das Wasser fällt.",
        author: "Johann Wolfgang von Goethe",
        source: "Der Zauberlehrling",
      },
    ],
  },
];

const VOCABULARY = {
  operation: [":Repetition", ":Omission"],
  affected_element: [":Word", ":WordGroup"],
  operational_form: [":SameForm", ":SimilarForm"],
  position: [":Beginning", ":End"],
  area: [":Sentence", ":WordGroup"],
};

function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

function apiError(status: number, code: string, message: string, details?: unknown): Response {
  return json(status, { error: { code, message, details } });
}

export function createStubServer(): { fetch: typeof fetch; state: StubState } {
  const state: StubState = {
    examples: [],
    annotations: [],
    submittedPayloads: [],
    chatQuestions: [],
    failChat: false,
  };
  let nextExampleId = 1;
  let nextAnnotationId = 1;

  const stubFetch = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = typeof input === "string" ? input : input.toString();
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(init.body as string) : undefined;

    if (url === "/examples" && method === "POST") {
      state.submittedPayloads.push(body);
      if (!body.author && !body.source) {
        return apiError(422, "provenance_required", "Bitte geben Sie mindestens Autor oder Quelle an.");
      }
      const suspicious = typeof body.text === "string" && body.text.includes("zzz");
      if (suspicious && !body.confirm) {
        return apiError(409, "confirmation_required", "Der Text könnte ungültig sein.", {
          verification: { overall: "warn", gibberish_flag: true },
        });
      }
      const record: ExampleRecord = {
        id: nextExampleId++,
        text: body.text,
        context: body.context ?? null,
        author: body.author ?? null,
        source: body.source ?? null,
        is_invalid: suspicious,
        is_harmful: false,
        created_at: "2025-01-01T00:00:00+00:00",
      };
      state.examples.push(record);
      return json(201, { example: record, verification: { overall: suspicious ? "warn" : "accept" } });
    }

    if (url === "/examples/random" && method === "GET") {
      const eligible = state.examples.filter((e) => !e.is_invalid && !e.is_harmful);
      if (!eligible.length) {
        return apiError(404, "no_example", "Kein Beispiel verfügbar.");
      }
      return json(200, eligible[0]);
    }

    if (url === "/fyf/vocabulary" && method === "GET") {
      return json(200, VOCABULARY);
    }

    if (url === "/fyf/search" && method === "POST") {
      const wantsRepetition = body.operation === ":Repetition";
      const hits: SearchHit[] = FIGURES.filter((f) =>
        wantsRepetition ? f.label !== "Parallelismus" : true,
      ).map((f) => ({
        figure: { iri: f.iri, label: f.label, parents: f.parents },
        definitions: f.definitions,
        examples: f.examples,
      }));
      return json(200, hits);
    }

    if (url === "/fyf/annotate" && method === "POST") {
      const known = new Set(FIGURES.map((f) => f.iri));
      for (const iri of body.figure_iris as string[]) {
        if (!known.has(iri)) {
          return apiError(422, "unknown_figure", `Unbekannte rhetorische Figur: ${iri}`);
        }
        if (
          state.annotations.some(
            (a) => a.example_id === body.example_id && a.figure_iri === iri,
          )
        ) {
          return apiError(409, "duplicate_annotation", "Bereits annotiert.");
        }
      }
      const created = (body.figure_iris as string[]).map((iri) => {
        const record: AnnotationRecord = {
          id: nextAnnotationId++,
          example_id: body.example_id,
          figure_iri: iri,
          figure_name: iri.replace(":", ""),
          is_verified: false,
          created_at: "2025-01-01T00:00:00+00:00",
        };
        state.annotations.push(record);
        return record;
      });
      return json(201, created);
    }

    if (url === "/chat" && method === "POST") {
      state.chatQuestions.push(body.question);
      if (state.failChat) {
        return apiError(502, "llm_unavailable", "Das Sprachmodell ist derzeit nicht erreichbar.", {
          contexts: ["Die rhetorische Figur Anaphora."],
        });
      }
      const response: ChatResponse = {
        answer: `Antwort auf '${body.question}': Die Anapher wiederholt Wörter am Satzanfang.`,
        contexts: [
          "Die rhetorische Figur Anaphora.",
          "Eine Definition der Figur Anaphora lautet: Wiederholung des ersten Wortes in aufeinanderfolgenden Sätzen oder Versen",
        ],
        rerank_fallback: false,
      };
      return json(200, response);
    }

    if (url === "/figures" && method === "GET") {
      return json(
        200,
        FIGURES.map((f) => ({ iri: f.iri, label: f.label, parents: f.parents })),
      );
    }

    const detailMatch = url.match(/^\/figures\/(.+)$/);
    if (detailMatch && method === "GET") {
      const name = decodeURIComponent(detailMatch[1]);
      const figure = FIGURES.find((f) => f.label.toLowerCase() === name.toLowerCase());
      if (!figure) return apiError(404, "unknown_figure", `Unbekannte rhetorische Figur: ${name}`);
      return json(200, figure);
    }

    return apiError(404, "not_found", `no stub route for ${method} ${url}`);
  }) as typeof fetch;

  return { fetch: stubFetch, state };
}

export const STUB_FIGURES = FIGURES;
