"""External model interfaces (embedder, reranker, chat LLM).

Each interface has two adapters: an HTTP client configured from the
environment, and a deterministic offline double so the whole pipeline runs
and tests without network access.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Protocol, Sequence, TYPE_CHECKING

import httpx
import numpy as np

if TYPE_CHECKING:
    from .pipeline import PromptBundle


class LlmTransportError(RuntimeError):
    """The chat model could not be reached; retrieved contexts are attached."""

    def __init__(self, message: str, contexts: list[str] | None = None):
        super().__init__(message)
        self.contexts = contexts or []


class RerankerError(RuntimeError):
    pass


class Embedder(Protocol):
    dim: int

    def embed(self, texts: Sequence[str]) -> np.ndarray:
        """(len(texts), dim) array of float32 vectors."""


class Reranker(Protocol):
    def scores(self, query: str, texts: Sequence[str]) -> list[float]:
        """Relevance score per (query, text) pair; may raise RerankerError."""


class ChatModel(Protocol):
    def complete(self, bundle: "PromptBundle", temperature: float) -> str:
        """Answer text; may raise LlmTransportError."""


def _tokens(text: str) -> list[str]:
    return [t.strip(".,;:!?\"'()[]").casefold() for t in text.split()]


class HashedBowEmbedder:
    """Bag-of-words hashed into a fixed-dimension, L2-normalized vector.

    Stable across platforms (md5 bucketing), so frozen test expectations
    stay valid everywhere.
    """

    def __init__(self, dim: int = 64):
        self.dim = dim

    def _bucket(self, token: str) -> int:
        digest = hashlib.md5(token.encode("utf-8")).hexdigest()
        return int(digest, 16) % self.dim

    def embed(self, texts: Sequence[str]) -> np.ndarray:
        out = np.zeros((len(texts), self.dim), dtype=np.float32)
        for row, text in enumerate(texts):
            for token in _tokens(text):
                if token:
                    out[row, self._bucket(token)] += 1.0
            norm = float(np.linalg.norm(out[row]))
            if norm > 0:
                out[row] /= norm
        return out


class OverlapReranker:
    """Jaccard token overlap between query and candidate text."""

    def scores(self, query: str, texts: Sequence[str]) -> list[float]:
        query_tokens = {t for t in _tokens(query) if t}
        result = []
        for text in texts:
            text_tokens = {t for t in _tokens(text) if t}
            union = query_tokens | text_tokens
            result.append(len(query_tokens & text_tokens) / len(union) if union else 0.0)
        return result


class EchoChatModel:
    """Deterministic template answer quoting the provided contexts."""

    def complete(self, bundle: "PromptBundle", temperature: float) -> str:
        if not bundle.context_chunks:
            return f"Zu der Frage '{bundle.question}' liegt kein Kontext vor."
        joined = " ".join(bundle.context_chunks)
        return f"Antwort auf '{bundle.question}': {joined}"


@dataclass(frozen=True)
class HttpEndpoint:
    url: str
    api_key: str | None = None
    model: str | None = None
    timeout: float = 30.0

    def headers(self) -> dict[str, str]:
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        return headers


class HttpEmbedder:
    """OpenAI-style embeddings endpoint: POST {model, input} -> {data: [{embedding}]}."""

    def __init__(self, endpoint: HttpEndpoint, dim: int, client: httpx.Client | None = None):
        self.endpoint = endpoint
        self.dim = dim
        self._client = client or httpx.Client(timeout=endpoint.timeout)

    def embed(self, texts: Sequence[str]) -> np.ndarray:
        payload: dict = {"input": list(texts)}
        if self.endpoint.model:
            payload["model"] = self.endpoint.model
        response = self._client.post(
            self.endpoint.url, json=payload, headers=self.endpoint.headers()
        )
        response.raise_for_status()
        data = response.json()["data"]
        return np.asarray([item["embedding"] for item in data], dtype=np.float32)


class HttpReranker:
    """Rerank endpoint: POST {query, documents} -> {scores: [...]}."""

    def __init__(self, endpoint: HttpEndpoint, client: httpx.Client | None = None):
        self.endpoint = endpoint
        self._client = client or httpx.Client(timeout=endpoint.timeout)

    def scores(self, query: str, texts: Sequence[str]) -> list[float]:
        payload: dict = {"query": query, "documents": list(texts)}
        if self.endpoint.model:
            payload["model"] = self.endpoint.model
        try:
            response = self._client.post(
                self.endpoint.url, json=payload, headers=self.endpoint.headers()
            )
            response.raise_for_status()
        except httpx.HTTPError as exc:
            raise RerankerError(str(exc)) from exc
        return [float(s) for s in response.json()["scores"]]


class HttpChatModel:
    """Chat-completions endpoint: system + user messages, temperature passed through."""

    def __init__(self, endpoint: HttpEndpoint, client: httpx.Client | None = None):
        self.endpoint = endpoint
        self._client = client or httpx.Client(timeout=endpoint.timeout)

    def complete(self, bundle: "PromptBundle", temperature: float) -> str:
        context_block = "\n\n".join(bundle.context_chunks)
        user = f"Kontext:\n{context_block}\n\nFrage: {bundle.question}"
        payload: dict = {
            "messages": [
                {"role": "system", "content": bundle.system_instruction},
                {"role": "user", "content": user},
            ],
            "temperature": temperature,
        }
        if self.endpoint.model:
            payload["model"] = self.endpoint.model
        try:
            response = self._client.post(
                self.endpoint.url, json=payload, headers=self.endpoint.headers()
            )
            response.raise_for_status()
        except httpx.HTTPError as exc:
            raise LlmTransportError(str(exc)) from exc
        return response.json()["choices"][0]["message"]["content"]
