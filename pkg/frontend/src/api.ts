// Typed client for the annotation service's JSON API.

export interface ApiError {
  code: string;
  message: string;
  details?: Record<string, unknown> | null;
}

export class ApiRequestError extends Error {
  constructor(
    public status: number,
    public error: ApiError,
  ) {
    super(error.message);
  }
}

export interface Verification {
  language_ok: boolean;
  length_ok: boolean;
  grammar_ok: boolean;
  gibberish_flag: boolean | null;
  overall: string;
  note: string | null;
}

export interface ExampleRecord {
  id: number;
  text: string;
  context: string | null;
  author: string | null;
  source: string | null;
  is_invalid: boolean;
  is_harmful: boolean;
  created_at: string;
}

export interface SubmitExampleResponse {
  example: ExampleRecord;
  verification: Verification;
}

export interface Definition {
  id: string;
  text: string;
  author: string | null;
}

export interface FigureExample {
  id: string;
  text: string;
  author: string | null;
  source: string | null;
}

export interface FigureSummary {
  iri: string;
  label: string;
  parents: string[];
}

export interface FigureDetail extends FigureSummary {
  definitions: Definition[];
  examples: FigureExample[];
}

export interface SearchHit {
  figure: FigureSummary;
  definitions: Definition[];
  examples: FigureExample[];
}

export interface AnnotationRecord {
  id: number;
  example_id: number;
  figure_iri: string;
  figure_name: string;
  is_verified: boolean;
  created_at: string;
}

export interface ChatResponse {
  answer: string;
  contexts: string[];
  rerank_fallback: boolean;
}

export type Vocabulary = Record<string, string[]>;

export const DIMENSIONS = [
  "operation",
  "affected_element",
  "operational_form",
  "position",
  "area",
] as const;

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!response.ok) {
    let error: ApiError = { code: "unknown", message: `HTTP ${response.status}` };
    try {
      const body = await response.json();
      if (body && body.error) error = body.error as ApiError;
    } catch {
      // keep the fallback error
    }
    throw new ApiRequestError(response.status, error);
  }
  return (await response.json()) as T;
}

export const api = {
  submitExample(payload: {
    text: string;
    context?: string;
    author?: string;
    source?: string;
    confirm?: boolean;
  }): Promise<SubmitExampleResponse> {
    return request("/examples", { method: "POST", body: JSON.stringify(payload) });
  },

  randomExample(): Promise<ExampleRecord> {
    return request("/examples/random");
  },

  vocabulary(): Promise<Vocabulary> {
    return request("/fyf/vocabulary");
  },

  search(selection: Record<string, string | null>): Promise<SearchHit[]> {
    return request("/fyf/search", { method: "POST", body: JSON.stringify(selection) });
  },

  annotate(exampleId: number, figureIris: string[]): Promise<AnnotationRecord[]> {
    return request("/fyf/annotate", {
      method: "POST",
      body: JSON.stringify({ example_id: exampleId, figure_iris: figureIris }),
    });
  },

  chat(question: string, exampleId?: number): Promise<ChatResponse> {
    return request("/chat", {
      method: "POST",
      body: JSON.stringify({ question, example_id: exampleId ?? null }),
    });
  },

  figures(): Promise<FigureSummary[]> {
    return request("/figures");
  },

  figureDetail(name: string): Promise<FigureDetail> {
    return request(`/figures/${encodeURIComponent(name)}`);
  },
};
