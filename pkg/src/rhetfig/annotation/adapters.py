"""HTTP adapters for the verification interfaces.

Contracts are small JSON calls so any detector/checker deployment can be
plugged in; the gibberish judge goes through a chat-completions endpoint
with a fixed single-token yes/no prompt.
"""

from __future__ import annotations

import httpx

from ..rag.interfaces import HttpEndpoint
from .verification import JudgeUnavailableError

GIBBERISH_PROMPT = (
    "Ist der folgende Text unverständliches Kauderwelsch? "
    "Antworte nur mit ja oder nein.\n\nText: {text}"
)


class HttpLanguageDetector:
    """POST {text} -> {language: "de", ...}."""

    def __init__(self, endpoint: HttpEndpoint, client: httpx.Client | None = None):
        self.endpoint = endpoint
        self._client = client or httpx.Client(timeout=endpoint.timeout)

    def detect(self, text: str) -> str | None:
        try:
            response = self._client.post(
                self.endpoint.url, json={"text": text}, headers=self.endpoint.headers()
            )
            response.raise_for_status()
        except httpx.HTTPError:
            return None
        return response.json().get("language")


class HttpGrammarChecker:
    """POST {text, language} -> {matches: [...]}; no findings means ok."""

    def __init__(self, endpoint: HttpEndpoint, client: httpx.Client | None = None):
        self.endpoint = endpoint
        self._client = client or httpx.Client(timeout=endpoint.timeout)

    def check(self, text: str) -> bool:
        try:
            response = self._client.post(
                self.endpoint.url,
                json={"text": text, "language": "de-DE"},
                headers=self.endpoint.headers(),
            )
            response.raise_for_status()
        except httpx.HTTPError:
            return True  # fail-open: grammar findings alone never block a user
        return not response.json().get("matches")


class HttpGibberishJudge:
    """Chat endpoint asked for a single-token yes/no; non-yes means not gibberish."""

    def __init__(self, endpoint: HttpEndpoint, client: httpx.Client | None = None):
        self.endpoint = endpoint
        self._client = client or httpx.Client(timeout=endpoint.timeout)

    def is_gibberish(self, text: str) -> bool:
        payload: dict = {
            "messages": [{"role": "user", "content": GIBBERISH_PROMPT.format(text=text)}],
            "temperature": 0.0,
        }
        if self.endpoint.model:
            payload["model"] = self.endpoint.model
        try:
            response = self._client.post(
                self.endpoint.url, json=payload, headers=self.endpoint.headers()
            )
            response.raise_for_status()
        except httpx.HTTPError as exc:
            raise JudgeUnavailableError(str(exc)) from exc
        verdict = response.json()["choices"][0]["message"]["content"]
        return verdict.strip().casefold().startswith(("ja", "yes"))
